"""Graphs, vertex labelings, the cycle-star generator and their text formats.

Vertex indices are 0-based. The canonical cycle-star layout puts the hub at
index 0, the ``l`` leaves at ``1..l`` and the remaining cycle vertices at
``l+1..l+k-1`` in cyclic order starting from the hub.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np


class GraphFormatError(ValueError):
    """Malformed graph or labeling text. ``line`` is 1-based when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


@dataclass(frozen=True)
class Graph:
    num_vertices: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        n = self.num_vertices
        if n < 1:
            raise ValueError(f"num_vertices must be positive, got {n}")
        edges = tuple((int(u), int(v)) for u, v in self.edges)
        seen = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if u > v:
                raise ValueError(f"edge ({u}, {v}) not normalized (need u < v)")
            if u < 0 or v >= n:
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if (u, v) in seen:
                raise ValueError(f"duplicate edge ({u}, {v})")
            seen.add((u, v))
        object.__setattr__(self, "edges", edges)

    @classmethod
    def from_edges(cls, num_vertices: int, pairs: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph from unordered pairs, keeping their order but orienting u < v."""
        return cls(num_vertices, tuple((min(u, v), max(u, v)) for u, v in pairs))

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def degrees(self) -> list[int]:
        deg = [0] * self.num_vertices
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def adjacency(self) -> list[list[int]]:
        """Neighbor lists, each sorted ascending."""
        adj: list[list[int]] = [[] for _ in range(self.num_vertices)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        for nb in adj:
            nb.sort()
        return adj

    def edge_array(self) -> np.ndarray:
        """Edges as an ``(m, 2)`` int64 array."""
        return np.asarray(self.edges, dtype=np.int64).reshape(-1, 2)

    def is_connected(self) -> bool:
        adj = self.adjacency()
        seen = [False] * self.num_vertices
        seen[0] = True
        queue = deque([0])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
        return all(seen)

    def normalized(self) -> "Graph":
        """Same graph with edges sorted lexicographically."""
        return Graph(self.num_vertices, tuple(sorted(self.edges)))


@dataclass(frozen=True)
class VertexLabeling:
    labels: tuple[int, ...]

    def __post_init__(self):
        labels = tuple(int(x) for x in self.labels)
        if not labels:
            raise ValueError("labeling is empty")
        for i, x in enumerate(labels):
            if x < 1:
                raise ValueError(f"label of vertex {i} is {x}; labels must be >= 1")
        object.__setattr__(self, "labels", labels)

    def __len__(self) -> int:
        return len(self.labels)

    def __iter__(self):
        return iter(self.labels)

    def __getitem__(self, i: int) -> int:
        return self.labels[i]

    @property
    def span(self) -> int:
        return max(self.labels)


@dataclass(frozen=True)
class CycleStarSpec:
    """``CS_{k, l}``: a k-cycle with ``l`` pendant leaves on one cycle vertex."""

    cycle_len: int
    leaf_count: int
    n: int = field(init=False)

    def __post_init__(self):
        if self.cycle_len < 3:
            raise ValueError(f"cycle_len must be >= 3, got {self.cycle_len}")
        if self.leaf_count < 0:
            raise ValueError(f"leaf_count must be >= 0, got {self.leaf_count}")
        object.__setattr__(self, "n", self.cycle_len + self.leaf_count)


def build_cycle_star(spec: CycleStarSpec | tuple[int, int]) -> Graph:
    """Canonical cycle-star graph.

    Hub is vertex 0, leaves are ``1..l``, and the cycle runs
    ``0 -> l+1 -> l+2 -> ... -> l+k-1 -> 0``.

    >>> build_cycle_star(CycleStarSpec(3, 1)).edges
    ((0, 1), (0, 2), (2, 3), (0, 3))
    """
    if not isinstance(spec, CycleStarSpec):
        spec = CycleStarSpec(*spec)
    k, l = spec.cycle_len, spec.leaf_count
    edges = [(0, i) for i in range(1, l + 1)]
    ring = [0] + list(range(l + 1, l + k))
    for a, b in zip(ring, ring[1:] + ring[:1]):
        edges.append((min(a, b), max(a, b)))
    return Graph(spec.n, tuple(edges))


def max_degree(g: Graph) -> int:
    return max(g.degrees())


# -- text formats -----------------------------------------------------------

def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line.split()


def _parse_int(token: str, lineno: int | None, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise GraphFormatError(f"{what} {token!r} is not an integer", lineno) from None


def parse_graph(text: str) -> Graph:
    """Parse ``n m`` followed by ``m`` edge lines ``u v``.

    Edges are returned normalized: ``u < v``, sorted lexicographically.
    """
    lines = list(_content_lines(text))
    if not lines:
        raise GraphFormatError("missing header 'n m'", 1)
    head_no, head = lines[0]
    if len(head) != 2:
        raise GraphFormatError("header must be 'n m'", head_no)
    n = _parse_int(head[0], head_no, "vertex count")
    m = _parse_int(head[1], head_no, "edge count")
    if n < 1 or m < 0:
        raise GraphFormatError(f"bad header values n={n}, m={m}", head_no)
    body = lines[1:]
    if len(body) != m:
        where = body[-1][0] if len(body) > m else (lines[-1][0])
        raise GraphFormatError(f"header declares {m} edges, found {len(body)}", where)

    seen: dict[tuple[int, int], int] = {}
    for lineno, toks in body:
        if len(toks) != 2:
            raise GraphFormatError("edge line must be 'u v'", lineno)
        u = _parse_int(toks[0], lineno, "vertex")
        v = _parse_int(toks[1], lineno, "vertex")
        for x in (u, v):
            if not 0 <= x < n:
                raise GraphFormatError(f"vertex index {x} out of range [0, {n})", lineno)
        if u == v:
            raise GraphFormatError(f"self-loop at vertex {u}", lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphFormatError(
                f"duplicate edge {key[0]} {key[1]} (first on line {seen[key]})", lineno
            )
        seen[key] = lineno
    return Graph(n, tuple(sorted(seen)))


def serialize_graph(g: Graph) -> str:
    g = g.normalized()
    out = [f"{g.num_vertices} {g.num_edges}"]
    out.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(out) + "\n"


def parse_labeling(text: str, expected_len: int | None = None) -> VertexLabeling:
    labels = []
    for lineno, toks in _content_lines(text):
        for tok in toks:
            x = _parse_int(tok, lineno, "label")
            if x < 1:
                raise GraphFormatError(f"non-positive label {x}", lineno)
            labels.append(x)
    if not labels:
        raise GraphFormatError("labeling is empty")
    if expected_len is not None and len(labels) != expected_len:
        raise GraphFormatError(
            f"wrong length: expected {expected_len} labels, found {len(labels)}"
        )
    return VertexLabeling(tuple(labels))


def serialize_labeling(phi: VertexLabeling | Sequence[int]) -> str:
    return " ".join(str(int(x)) for x in phi) + "\n"


def to_dot(g: Graph, phi: VertexLabeling | None = None) -> str:
    """Graphviz text; vertices carry their labels and edges their weights when given."""
    lines = ["graph G {"]
    for i in range(g.num_vertices):
        if phi is None:
            lines.append(f"  {i};")
        else:
            lines.append(f'  {i} [label="{i}:{phi[i]}"];')
    for u, v in g.edges:
        if phi is None:
            lines.append(f"  {u} -- {v};")
        else:
            lines.append(f'  {u} -- {v} [label="{phi[u] + phi[v]}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
