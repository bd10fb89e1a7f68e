"""Edge weights, the irregularity check and the degree/size lower bound."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .graph import Graph, VertexLabeling, max_degree


@dataclass(frozen=True)
class WeightProfile:
    """Edge weights in the graph's edge order."""

    weights: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.weights)

    def __iter__(self):
        return iter(self.weights)


@dataclass(frozen=True)
class Verdict:
    irregular: bool
    first_collision: tuple[int, int] | None = None

    def __bool__(self) -> bool:
        return self.irregular


def _labels(g: Graph, phi: VertexLabeling | Sequence[int]) -> np.ndarray:
    labels = np.asarray(tuple(phi), dtype=np.int64)
    if labels.shape != (g.num_vertices,):
        raise ValueError(
            f"labeling has {labels.size} labels, graph has {g.num_vertices} vertices"
        )
    return labels


def edge_weights(g: Graph, phi: VertexLabeling | Sequence[int]) -> WeightProfile:
    labels = _labels(g, phi)
    e = g.edge_array()
    w = labels[e[:, 0]] + labels[e[:, 1]]
    return WeightProfile(tuple(int(x) for x in w))


def is_edge_irregular(g: Graph, phi: VertexLabeling | Sequence[int]) -> Verdict:
    """Check that all edge weights are pairwise distinct.

    On failure ``first_collision`` is the lexicographically smallest pair
    ``(i, j)``, ``i < j``, of edge indices sharing a weight.
    """
    weights = edge_weights(g, phi).weights
    first_at: dict[int, int] = {}
    best = None
    for j, w in enumerate(weights):
        i = first_at.setdefault(w, j)
        if i != j and (best is None or (i, j) < best):
            best = (i, j)
    if best is None:
        return Verdict(True)
    return Verdict(False, best)


def lower_bound(g: Graph) -> int:
    """``max(ceil((m + 1) / 2), max degree)``."""
    m = g.num_edges
    if m < 1:
        raise ValueError("lower bound needs at least one edge")
    return max((m + 2) // 2, max_degree(g))
