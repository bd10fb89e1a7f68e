"""Closed-form es values and explicit optimal labelings for cycle-stars, 3 <= k <= 7.

Each case builder returns labels in three parts: the hub label, the leaf
labels, and the labels of the other ``k - 1`` cycle vertices in cyclic order
starting from the hub. The original vertex names (``v`` for the hub and
``v_i`` otherwise) are kept in the comments so each builder can be checked
against its weight list. Every emitted labeling goes through the verifier
before it is returned.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .graph import CycleStarSpec, VertexLabeling, build_cycle_star
from .verifier import edge_weights, is_edge_irregular

K_MIN, K_MAX = 3, 7


class ConstructionError(RuntimeError):
    """An emitted labeling failed verification. Always a bug."""


@dataclass(frozen=True)
class ConstructionResult:
    spec: CycleStarSpec
    labeling: VertexLabeling
    claimed_es: int
    case_tag: str
    repairs: tuple[str, ...] = field(default=())


def _check_spec(spec: CycleStarSpec) -> None:
    if not K_MIN <= spec.cycle_len <= K_MAX:
        raise ValueError(f"constructions cover 3 <= k <= 7, got k={spec.cycle_len}")
    if spec.leaf_count < 1:
        raise ValueError(f"constructions need at least one leaf, got l={spec.leaf_count}")


def closed_form_es(spec: CycleStarSpec) -> int:
    _check_spec(spec)
    k, n = spec.cycle_len, spec.n
    if k == 3:
        return n - 1
    if k == 4:
        return n - 2
    if k == 5:
        return n - 2 if n == 6 else n - 3
    if k == 6:
        return n - 3 if n in (7, 8) else n - 4
    # k == 7
    if n == 8:
        return n - 3
    if n in (9, 10):
        return n - 4
    return n - 5


# -- case builders: (hub, leaves, cycle-from-hub, repairs) -------------------

def _k3(n):
    # v=1, leaves v_1..v_{n-3} carry i; cycle v -> v_{n-2} -> v_{n-1} -> v
    return 1, list(range(1, n - 2)), [n - 2, n - 1], ()


def _k4(n):
    # v=1, leaves v_i=i; cycle v -> v_{n-3} -> v_{n-1} -> v_{n-2} -> v, v_{n-1}=3
    return 1, list(range(1, n - 3)), [n - 3, 3, n - 2], (
        "cycle order taken from the weight list (v, v_{n-3}, v_{n-1}, v_{n-2}), "
        "not from the generic edge-set display",
    )


def _k5_n6(n):
    # v=1, leaf v_1=1; cycle v -> v_2 -> v_4 -> v_5 -> v_3 -> v with v_5=4
    return 1, [1], [2, 4, 4, 3], ()


def _k5_large(n):
    # v=1, leaves v_i=i; cycle v -> v_{n-4} -> v_{n-2} -> v_{n-1} -> v_{n-3} -> v
    # with v_{n-2}=n-4, v_{n-1}=n-3
    return 1, list(range(1, n - 4)), [n - 4, n - 4, n - 3, n - 3], (
        "edge v v_{n-1} has no listed weight; cycle wired as "
        "(v, v_{n-4}, v_{n-2}, v_{n-1}, v_{n-3}) per the weight list",
    )


def _k6_small(n):
    # v=1, v_i=i (i <= n-4), v_{n-3}=v_{n-2}=n-3, v_{n-1}=n-4
    # leaves v_2..v_{n-5}; cycle v -> v_1 -> v_{n-3} -> v_{n-2} -> v_{n-1} -> v_{n-4} -> v
    return 1, list(range(2, n - 4)), [1, n - 3, n - 3, n - 4, n - 4], (
        "edge v v_1 (weight 2) is part of the cycle but absent from the weight list",
    )


def _k6_large(n):
    # v=n-4, v_1=1, v_2=2, v_i=i+1 (3 <= i <= n-5), v_{n-4}=3, v_{n-3}=v_{n-2}=2, v_{n-1}=1
    # leaves v_2..v_{n-5}; cycle v -> v_1 -> v_{n-1} -> v_{n-2} -> v_{n-3} -> v_{n-4} -> v
    leaves = [2] + [i + 1 for i in range(3, n - 4)]
    return n - 4, leaves, [1, 1, 2, 2, 3], ()


def _k7_n8(n):
    # v=1, leaf v_1=1; cycle v -> v_2 -> v_4 -> v_5 -> v_6 -> v_7 -> v_3 -> v
    # with v_2=2, v_3=v_4=v_5=3, v_6=4, v_7=5
    return 1, [1], [2, 3, 3, 4, 5, 3], ()


def _k7_mid(n):
    # v=5, v_1=3, v_i=i+3 (2 <= i <= n-7) are the leaves
    # cycle v -> v_{n-6} -> v_{n-4} -> v_{n-3} -> v_{n-2} -> v_{n-1} -> v_{n-5} -> v
    # with v_{n-6}=v_{n-4}=1, v_{n-3}=v_{n-2}=2, v_{n-1}=3, v_{n-5}=4
    leaves = [3] + [i + 3 for i in range(2, n - 6)]
    return 5, leaves, [1, 1, 2, 2, 3, 4], ()


def _k7_large(n):
    # v=n-5, v_i=i; leaves v_2, v_4, v_5, ..., v_{n-5}
    # cycle v -> v_1 -> v_{n-4} -> v_{n-3} -> v_{n-2} -> v_{n-1} -> v_3 -> v
    # with v_{n-4}=1, v_{n-3}=v_{n-2}=2, v_{n-1}=3
    leaves = [2] + list(range(4, n - 4))
    return n - 5, leaves, [1, 1, 2, 2, 3, 3], (
        "hub-leaf weights are n-5+i over leaves i in {2, 4, ..., n-5}, "
        "not the listed n-1+i",
        "weight 6 comes from edge v_{n-1} v_3 (3+3); v_{n-3} already has two "
        "cycle neighbors, so the listed edge v_{n-3} v_3 cannot exist",
    )


def _pick_case(spec: CycleStarSpec):
    k, n = spec.cycle_len, spec.n
    if k == 3:
        return "k3", _k3
    if k == 4:
        return "k4", _k4
    if k == 5:
        return ("k5-n6", _k5_n6) if n == 6 else ("k5-n>=7", _k5_large)
    if k == 6:
        return ("k6-n7,8", _k6_small) if n <= 8 else ("k6-n>=9", _k6_large)
    if n == 8:
        return "k7-n8", _k7_n8
    if n <= 10:
        return "k7-n9,10", _k7_mid
    return "k7-n>=11", _k7_large


def construct_labeling(spec: CycleStarSpec) -> ConstructionResult:
    """Optimal edge irregular labeling of the canonical ``CS_{k,l}``.

    Raises ``ConstructionError`` if the labeling does not verify or its span
    is not the closed-form value.
    """
    _check_spec(spec)
    tag, builder = _pick_case(spec)
    hub, leaves, cycle, repairs = builder(spec.n)
    if len(leaves) != spec.leaf_count or len(cycle) != spec.cycle_len - 1:
        raise ConstructionError(
            f"{tag}: builder produced {len(leaves)} leaves / {len(cycle)} cycle vertices "
            f"for {spec}"
        )
    phi = VertexLabeling((hub, *leaves, *cycle))
    expected = closed_form_es(spec)
    g = build_cycle_star(spec)
    verdict = is_edge_irregular(g, phi)
    if not verdict:
        i, j = verdict.first_collision
        w = edge_weights(g, phi).weights[i]
        raise ConstructionError(
            f"{tag}: edges {g.edges[i]} and {g.edges[j]} share weight {w} for {spec}"
        )
    if phi.span != expected:
        raise ConstructionError(f"{tag}: span {phi.span} != closed form {expected} for {spec}")
    return ConstructionResult(spec, phi, expected, tag, tuple(repairs))
