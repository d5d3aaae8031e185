"""Simple undirected graphs, Laplacians, joins and separator bookkeeping.

Vertices are the dense integers ``0..n-1``. A :class:`Graph` is immutable;
every operation here is a pure function of its inputs.
"""
from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

VertexSet = tuple[int, ...]
ComponentPartition = list[VertexSet]

# exhaustive cut search is exponential in n
MAX_CONNECTIVITY_N = 16


class GraphError(ValueError):
    """Invalid graph construction input (bad id, self-loop)."""


class CompleteGraphError(ValueError):
    """Raised by :func:`vertex_connectivity` on complete graphs, which have no vertex cut."""


class EdgeListError(ValueError):
    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass(frozen=True)
class Graph:
    n: int
    adjacency: tuple[tuple[int, ...], ...]

    @cached_property
    def m(self) -> int:
        return sum(len(nb) for nb in self.adjacency) // 2

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> list[int]:
        return [len(nb) for nb in self.adjacency]

    @property
    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adjsets[u]

    @cached_property
    def _adjsets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(nb) for nb in self.adjacency)

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, lexicographically sorted."""
        return [(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        return len(components_after_removal(self, ())) == 1

    def is_complete(self) -> bool:
        return self.m == self.n * (self.n - 1) // 2

    def induced_subgraph(self, vertices: Iterable[int]) -> tuple["Graph", VertexSet]:
        """Subgraph on ``vertices`` relabelled ``0..k-1``; also returns the old ids in order."""
        keep = tuple(sorted(set(vertices)))
        index = {v: i for i, v in enumerate(keep)}
        edges = [(index[u], index[v]) for u, v in self.edges() if u in index and v in index]
        return from_edge_list(len(keep), edges), keep

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    if n < 0:
        raise GraphError(f"negative vertex count {n}")
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        u, v = int(u), int(v)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has a vertex id outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"edge ({u}, {v}) is a self-loop")
        nbrs[u].add(v)
        nbrs[v].add(u)
    return Graph(n, tuple(tuple(sorted(s)) for s in nbrs))


def vertex_set(vertices: Iterable[int], n: int | None = None) -> VertexSet:
    """Normalize to a strictly increasing tuple, checking range when ``n`` is given."""
    out = tuple(sorted(set(int(v) for v in vertices)))
    if n is not None and out and (out[0] < 0 or out[-1] >= n):
        raise GraphError(f"vertex set {out} not within 0..{n - 1}")
    return out


def laplacian(G: Graph) -> np.ndarray:
    L = np.zeros((G.n, G.n))
    for u, nb in enumerate(G.adjacency):
        L[u, u] = len(nb)
        L[u, list(nb)] = -1.0
    return L


def join(G1: Graph, G2: Graph) -> Graph:
    """Disjoint union plus every edge between the two sides; ``G2`` is shifted by ``G1.n``."""
    off = G1.n
    edges = list(G1.edges())
    edges += [(u + off, v + off) for u, v in G2.edges()]
    edges += [(u, v + off) for u in range(G1.n) for v in range(G2.n)]
    return from_edge_list(G1.n + G2.n, edges)


def components_after_removal(G: Graph, X: Iterable[int]) -> ComponentPartition:
    """Connected components of ``G - X``, each sorted, ordered by smallest member."""
    removed = set(X)
    seen = [False] * G.n
    for v in removed:
        seen[v] = True
    comps = []
    for start in range(G.n):
        if seen[start]:
            continue
        seen[start] = True
        comp = [start]
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in G.adjacency[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        comps.append(tuple(sorted(comp)))
    return comps


def cross_edge_count(G: Graph, X: Iterable[int]) -> int:
    """Number of edges with exactly one endpoint in ``X``."""
    xs = set(X)
    return sum(1 for u in xs for w in G.adjacency[u] if w not in xs)


def high_degree_set(G: Graph, threshold: int) -> VertexSet:
    return tuple(v for v in range(G.n) if len(G.adjacency[v]) >= threshold)


def vertex_connectivity(G: Graph) -> int:
    """Smallest vertex cut, by exhaustive search over subsets (small graphs only).

    A disconnected graph has connectivity 0.
    """
    if G.n > MAX_CONNECTIVITY_N:
        raise ValueError(f"vertex_connectivity is exhaustive and limited to n <= {MAX_CONNECTIVITY_N}, got n={G.n}")
    if G.is_complete():
        raise CompleteGraphError(f"complete graph K_{G.n} has no disconnecting vertex set")
    for size in range(G.n - 1):
        for S in itertools.combinations(range(G.n), size):
            if len(components_after_removal(G, S)) > 1:
                return size
    raise AssertionError("unreachable: a non-complete graph has a cut of size n-2")


# -- edge-list text format -------------------------------------------------

def parse_edge_list(text: str) -> Graph:
    """Parse ``"n m"`` followed by ``m`` lines of ``"u v"``."""
    lines = text.splitlines()
    if not lines:
        raise EdgeListError("empty input", 1)
    header = lines[0].split()
    if len(header) != 2:
        raise EdgeListError(f"expected header 'n m', got {lines[0]!r}", 1)
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError:
        raise EdgeListError(f"non-integer header {lines[0]!r}", 1) from None
    if n < 0 or m < 0:
        raise EdgeListError("negative count in header", 1)
    body = [(i + 2, ln) for i, ln in enumerate(lines[1:]) if ln.strip()]
    if len(body) != m:
        raise EdgeListError(f"header declares {m} edges but {len(body)} edge lines follow", len(lines))
    edges = []
    for lineno, ln in body:
        parts = ln.split()
        if len(parts) != 2:
            raise EdgeListError(f"expected 'u v', got {ln!r}", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListError(f"non-integer vertex in {ln!r}", lineno) from None
        if not (0 <= u < n and 0 <= v < n) or u == v:
            raise EdgeListError(f"invalid edge {ln.strip()!r} for n={n}", lineno)
        edges.append((u, v))
    return from_edge_list(n, edges)


def format_edge_list(G: Graph) -> str:
    edges = G.edges()
    return "".join([f"{G.n} {len(edges)}\n"] + [f"{u} {v}\n" for u, v in edges])


def read_edge_list(path: str | Path) -> Graph:
    return parse_edge_list(Path(path).read_text())


def write_edge_list(G: Graph, path: str | Path) -> None:
    Path(path).write_text(format_edge_list(G))


def degree_sequence(G: Graph) -> list[int]:
    return sorted(G.degrees(), reverse=True)


def complement(G: Graph) -> Graph:
    return from_edge_list(
        G.n, [(u, v) for u, v in itertools.combinations(range(G.n), 2) if not G.has_edge(u, v)]
    )


def relabel(G: Graph, perm: Sequence[int]) -> Graph:
    """Graph with vertex ``v`` renamed ``perm[v]``."""
    return from_edge_list(G.n, [(perm[u], perm[v]) for u, v in G.edges()])
