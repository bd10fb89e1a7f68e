"""Exact edge irregularity strength by pruned backtracking, plus a brute-force oracle."""
from __future__ import annotations

import time
from collections import deque
from dataclasses import dataclass

import numpy as np

from ..graph import Graph, VertexLabeling
from ..verifier import is_edge_irregular, lower_bound
from . import kernels
from ._accel import USE_NUMBA

# nodes per kernel call between budget checks
_CHUNK = 2_000_000 if USE_NUMBA else 50_000
BRUTE_FORCE_MAX_VERTICES = 9


@dataclass(frozen=True)
class SearchBudget:
    max_nodes: int | None = None
    max_time: float | None = None  # seconds


@dataclass(frozen=True)
class EsResult:
    es_value: int
    witness: VertexLabeling
    nodes_explored: int
    elapsed: float  # seconds
    method: str  # "backtracking" | "brute_force" | "construction"


@dataclass(frozen=True)
class Unknown:
    """Budget ran out before an answer. ``upper`` is None when no witness is known."""

    lower: int
    upper: int | None
    nodes_explored: int
    elapsed: float
    witness: VertexLabeling | None = None


def _check_input(g: Graph) -> None:
    if g.num_edges < 1:
        raise ValueError("graph has no edges")
    if not g.is_connected():
        raise ValueError("graph is disconnected; es is only defined here for connected graphs")


def search_order(g: Graph) -> list[int]:
    """Decreasing degree, ties by BFS discovery from the first max-degree vertex."""
    deg = g.degrees()
    adj = g.adjacency()
    root = max(range(g.num_vertices), key=lambda v: (deg[v], -v))
    rank = {root: 0}
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if w not in rank:
                rank[w] = len(rank)
                queue.append(w)
    for v in range(g.num_vertices):
        rank.setdefault(v, len(rank))
    return sorted(range(g.num_vertices), key=lambda v: (-deg[v], rank[v], v))


def false_twin_classes(g: Graph) -> list[list[int]]:
    """Groups (size >= 2) of vertices with identical open neighborhoods."""
    groups: dict[tuple[int, ...], list[int]] = {}
    for v, nb in enumerate(g.adjacency()):
        groups.setdefault(tuple(nb), []).append(v)
    return [vs for vs in groups.values() if len(vs) > 1]


class Solver:
    """Single-threaded search over one graph. Not safe to share between threads."""

    def __init__(self, g: Graph, budget: SearchBudget | None = None,
                 symmetry_breaking: bool = True):
        _check_input(g)
        self.graph = g
        self.budget = budget or SearchBudget()
        self.symmetry_breaking = symmetry_breaking
        self.nodes_explored = 0
        self._t0 = time.perf_counter()

        self.order = search_order(g)
        pos = {v: p for p, v in enumerate(self.order)}
        adj = g.adjacency()
        ptr = [0]
        back = []
        for v in self.order:
            back.extend(sorted(pos[w] for w in adj[v] if pos[w] < pos[v]))
            ptr.append(len(back))
        self._nbr_ptr = np.asarray(ptr, dtype=np.int64)
        self._nbr_pos = np.asarray(back, dtype=np.int64)
        twin_prev = np.full(g.num_vertices, -1, dtype=np.int64)
        if symmetry_breaking:
            for cls in false_twin_classes(g):
                ps = sorted(pos[v] for v in cls)
                for a, b in zip(ps, ps[1:]):
                    twin_prev[b] = a
        self._twin_prev = twin_prev

    @property
    def elapsed(self) -> float:
        return time.perf_counter() - self._t0

    def find(self, k: int) -> VertexLabeling | None | Unknown:
        """Labeling with span <= k and distinct weights, None if none exists,
        or ``Unknown`` if the budget ran out first."""
        if k < 1:
            raise ValueError(f"k must be >= 1, got {k}")
        n = self.graph.num_vertices
        labels = np.zeros(n, dtype=np.int64)
        used = np.zeros(2 * k + 1, dtype=np.int8)
        state = np.zeros(2, dtype=np.int64)
        while True:
            b = self.budget
            if b.max_time is not None and self.elapsed >= b.max_time:
                return Unknown(1, None, self.nodes_explored, self.elapsed)
            chunk = _CHUNK
            if b.max_nodes is not None:
                chunk = max(0, min(chunk, b.max_nodes - self.nodes_explored))
            before = int(state[1])
            status = kernels.backtrack(self._nbr_ptr, self._nbr_pos, self._twin_prev,
                                       k, labels, used, state, chunk)
            self.nodes_explored += int(state[1]) - before
            if status == kernels.FOUND:
                out = np.empty(n, dtype=np.int64)
                out[self.order] = labels
                return VertexLabeling(tuple(int(x) for x in out))
            if status == kernels.EXHAUSTED:
                return None
            if b.max_nodes is not None and self.nodes_explored >= b.max_nodes:
                return Unknown(1, None, self.nodes_explored, self.elapsed)

    def exact_es(self, seed: VertexLabeling | None = None) -> EsResult | Unknown:
        """Smallest feasible span, searching upward from the lower bound.

        A verified ``seed`` labeling caps the search: if every span below its
        own is infeasible the seed is returned with method "construction".
        """
        g = self.graph
        lo = lower_bound(g)
        cap = None
        if seed is not None:
            if not is_edge_irregular(g, seed):
                raise ValueError("seed labeling is not edge irregular")
            cap = seed.span
        k = lo
        while cap is None or k < cap:
            found = self.find(k)
            if isinstance(found, Unknown):
                return Unknown(k, cap, self.nodes_explored, self.elapsed, seed)
            if found is not None:
                return EsResult(found.span, found, self.nodes_explored, self.elapsed,
                                "backtracking")
            k += 1
        return EsResult(cap, seed, self.nodes_explored, self.elapsed, "construction")


def find_irregular_labeling(g: Graph, k: int, budget: SearchBudget | None = None,
                            symmetry_breaking: bool = True):
    return Solver(g, budget, symmetry_breaking).find(k)


def exact_es(g: Graph, budget: SearchBudget | None = None, symmetry_breaking: bool = True,
             seed: VertexLabeling | None = None) -> EsResult | Unknown:
    return Solver(g, budget, symmetry_breaking).exact_es(seed)


def brute_force_es(g: Graph, max_vertices: int = BRUTE_FORCE_MAX_VERTICES,
                   vectorized: bool | None = None, chunk: int = 1 << 18) -> EsResult:
    """Plain enumeration of all ``k**n`` labelings for k = lower bound, lower bound + 1, ...

    No symmetry breaking, no search order. ``vectorized`` picks the numpy
    scan; by default it is used whenever the JIT is off.
    """
    _check_input(g)
    n = g.num_vertices
    if n > max_vertices:
        raise ValueError(f"brute force capped at {max_vertices} vertices, graph has {n}")
    if vectorized is None:
        vectorized = not USE_NUMBA
    scan = kernels.brute_force_scan_numpy if vectorized else kernels.brute_force_scan
    e = g.edge_array()
    eu = np.ascontiguousarray(e[:, 0])
    ev = np.ascontiguousarray(e[:, 1])
    t0 = time.perf_counter()
    examined = 0
    k = lower_bound(g)
    while True:
        total = k ** n
        seen = np.zeros(2 * k - 1, dtype=np.int8)
        start = 0
        while start < total:
            count = min(chunk, total - start)
            hit = scan(eu, ev, n, k, start, count, seen)
            if hit >= 0:
                examined += hit - start + 1
                digits = [(hit // k ** (n - 1 - j)) % k + 1 for j in range(n)]
                phi = VertexLabeling(tuple(digits))
                # a span-k scan can hit a labeling of smaller span only if k-1 was feasible
                return EsResult(k, phi, examined, time.perf_counter() - t0, "brute_force")
            examined += count
            start += count
        k += 1
