"""Constructive separators: tree centroids, triangulated polygons, refinement.

Triangulated convex polygons (maximal outerplanar graphs) are given by their
diagonals. The interior faces form a tree of maximum degree 3; its centroid
face yields a separator of two or three polygon vertices.
"""
from __future__ import annotations

import math
import random
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path
from typing import Callable, Iterable

from .graph import Graph, VertexSet, components_after_removal, from_edge_list, vertex_set

Finder = Callable[[Graph], Iterable[int]]


class NotATreeError(ValueError):
    pass


class TriangulationError(ValueError):
    pass


class FinderContractError(RuntimeError):
    pass


# -- trees ----------------------------------------------------------------

def is_tree(T: Graph) -> bool:
    return T.n >= 1 and T.m == T.n - 1 and T.is_connected()


def tree_centroid(T: Graph) -> int:
    """Lowest-id vertex whose removal leaves components of at most n/2 vertices."""
    if not is_tree(T):
        raise NotATreeError(f"{T!r} is not a tree")
    n = T.n
    parent = [-1] * n
    order = [0]
    parent[0] = 0
    for u in order:
        for w in T.adjacency[u]:
            if parent[w] == -1:
                parent[w] = u
                order.append(w)
    size = [1] * n
    heaviest = [0] * n
    for u in reversed(order[1:]):
        p = parent[u]
        size[p] += size[u]
        heaviest[p] = max(heaviest[p], size[u])
    for v in range(n):
        if 2 * max(heaviest[v], n - size[v]) <= n:
            return v
    raise AssertionError("unreachable: every tree has a centroid")


def tree_from_pruefer(seq: Iterable[int]) -> Graph:
    seq = list(seq)
    n = len(seq) + 2
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    edges = []
    for v in seq:
        leaf = min(u for u in range(n) if degree[u] == 1)
        edges.append((leaf, v))
        degree[leaf] -= 1
        degree[v] -= 1
    u, w = (x for x in range(n) if degree[x] == 1)
    edges.append((u, w))
    return from_edge_list(n, edges)


def _canonical(T: Graph, root: int, parent: int) -> str:
    kids = sorted(_canonical(T, w, root) for w in T.adjacency[root] if w != parent)
    return "(" + "".join(kids) + ")"


def tree_canonical_form(T: Graph) -> str:
    """Isomorphism invariant of a tree (AHU encoding rooted at its center(s))."""
    if T.n <= 2:
        return f"n{T.n}"
    deg = T.degrees()
    layer = [v for v in range(T.n) if deg[v] == 1]
    left = T.n
    while left > 2:
        left -= len(layer)
        nxt = []
        for v in layer:
            for w in T.adjacency[v]:
                deg[w] -= 1
                if deg[w] == 1:
                    nxt.append(w)
        layer = nxt
    return min(_canonical(T, c, -1) for c in layer)


def nonisomorphic_trees(n: int) -> list[Graph]:
    """One tree per isomorphism class on ``n`` vertices, grown leaf by leaf."""
    if n < 1:
        return []
    level = {tree_canonical_form(from_edge_list(1, [])): from_edge_list(1, [])}
    for k in range(2, n + 1):
        nxt: dict[str, Graph] = {}
        for T in level.values():
            for v in range(T.n):
                U = from_edge_list(k, T.edges() + [(v, k - 1)])
                nxt.setdefault(tree_canonical_form(U), U)
        level = nxt
    return list(level.values())


# -- triangulated polygons ------------------------------------------------

@dataclass(frozen=True)
class MaximalOuterplanarGraph:
    """Convex polygon ``0..n-1`` (cyclic order) triangulated by ``n - 3`` diagonals."""

    n: int
    diagonals: tuple[tuple[int, int], ...]

    def __post_init__(self):
        n = self.n
        if n < 3:
            raise TriangulationError(f"polygon needs at least 3 vertices, got {n}")
        diags = tuple(sorted((min(a, b), max(a, b)) for a, b in self.diagonals))
        object.__setattr__(self, "diagonals", diags)
        if len(diags) != n - 3:
            raise TriangulationError(f"a triangulated {n}-gon has {n - 3} diagonals, got {len(diags)}")
        if len(set(diags)) != len(diags):
            raise TriangulationError("repeated diagonal")
        for a, b in diags:
            if not (0 <= a < b < n) or b - a in (1, n - 1):
                raise TriangulationError(f"({a}, {b}) is not a diagonal of the {n}-gon")
        # chords as intervals on the cyclic order must nest or be disjoint
        stack: list[tuple[int, int]] = []
        for a, b in sorted(diags, key=lambda d: (d[0], -d[1])):
            while stack and stack[-1][1] <= a:
                stack.pop()
            if stack and stack[-1][1] < b:
                raise TriangulationError(f"diagonals {stack[-1]} and {(a, b)} cross")
            stack.append((a, b))

    @cached_property
    def graph(self) -> Graph:
        hull = [(i, (i + 1) % self.n) for i in range(self.n)]
        return from_edge_list(self.n, hull + list(self.diagonals))

    @cached_property
    def faces(self) -> tuple[tuple[int, int, int], ...]:
        """Triangular faces, lexicographically ordered.

        In a triangulated convex polygon every 3-cycle bounds a face.
        """
        G = self.graph
        tris = set()
        for u, v in G.edges():
            for w in G._adjsets[u] & G._adjsets[v]:
                tris.add(tuple(sorted((u, v, w))))
        return tuple(sorted(tris))


@dataclass(frozen=True)
class DualTree:
    tree: Graph
    faces: tuple[tuple[int, int, int], ...]
    # dual edge (i, j), i < j  ->  the shared polygon diagonal
    shared: dict[tuple[int, int], tuple[int, int]]


def build_dual_tree(P: MaximalOuterplanarGraph) -> DualTree:
    faces = P.faces
    if len(faces) != P.n - 2:
        raise TriangulationError(f"expected {P.n - 2} faces, found {len(faces)}")
    by_edge: dict[tuple[int, int], list[int]] = {}
    for idx, (a, b, c) in enumerate(faces):
        for e in ((a, b), (a, c), (b, c)):
            by_edge.setdefault(e, []).append(idx)
    shared = {}
    for e, fs in by_edge.items():
        if len(fs) == 2:
            shared[(fs[0], fs[1])] = e
        elif len(fs) > 2:
            raise TriangulationError(f"edge {e} borders {len(fs)} faces")
    tree = from_edge_list(len(faces), shared.keys())
    if not is_tree(tree) or tree.max_degree > 3:
        raise TriangulationError("face dual is not a tree of maximum degree 3")
    return DualTree(tree, faces, shared)


@dataclass(frozen=True)
class OuterplanarSeparator:
    separator: VertexSet
    case: int
    centroid_face: tuple[int, int, int]
    note: str = ""


def outerplanar_separator(P: MaximalOuterplanarGraph) -> OuterplanarSeparator:
    """Two- or three-vertex separator from the centroid of the face dual.

    Case 1: a branch of the dual at the centroid face holds exactly (n-2)/2
    faces; the diagonal crossed into that branch is the separator. If two
    branches qualify, the one holding the lower face index wins.
    Case 2: otherwise the three corners of the centroid face.
    """
    if P.n < 4:
        raise TriangulationError(f"outerplanar separator needs n >= 4, got {P.n}")
    dual = build_dual_tree(P)
    T = dual.tree
    v = tree_centroid(T)
    branches = components_after_removal(T, (v,))
    total = P.n - 2
    if total % 2 == 0:
        exact = [b for b in branches if 2 * len(b) == total]
        if exact:
            branch = min(exact, key=lambda b: b[0])
            u = next(w for w in T.adjacency[v] if w in branch)
            X = dual.shared[(min(u, v), max(u, v))]
            note = f"case 1 via face {branch[0]} branch" + (" (tie between two branches)" if len(exact) > 1 else "")
            return OuterplanarSeparator(vertex_set(X), 1, dual.faces[v], note)
    return OuterplanarSeparator(vertex_set(dual.faces[v]), 2, dual.faces[v], "case 2")


def fan_triangulation(k: int) -> MaximalOuterplanarGraph:
    """``fan(k)`` as a polygon: path ``0..k-1`` then apex ``k``, diagonals from the apex.

    Vertex ids agree with :func:`fiedlerkit.families.fan`.
    """
    if k < 2:
        raise TriangulationError(f"fan needs k >= 2, got {k}")
    return MaximalOuterplanarGraph(k + 1, tuple((i, k) for i in range(1, k - 1)))


def random_triangulation(n: int, seed: int) -> MaximalOuterplanarGraph:
    """Seeded ear-cutting triangulation of the convex ``n``-gon."""
    rng = random.Random(seed)
    poly = list(range(n))
    diags = []
    while len(poly) > 3:
        i = rng.randrange(len(poly))
        prev, nxt = poly[i - 1], poly[(i + 1) % len(poly)]
        diags.append((prev, nxt))
        del poly[i]
    return MaximalOuterplanarGraph(n, tuple(diags))


def parse_triangulation(text: str) -> MaximalOuterplanarGraph:
    from .graph import EdgeListError

    lines = [(i + 1, ln) for i, ln in enumerate(text.splitlines()) if ln.strip()]
    if not lines:
        raise EdgeListError("empty triangulation", 1)
    try:
        n = int(lines[0][1].split()[0])
    except ValueError:
        raise EdgeListError(f"bad header {lines[0][1]!r}", lines[0][0]) from None
    diags = []
    for lineno, ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise EdgeListError(f"expected 'i j', got {ln!r}", lineno)
        try:
            diags.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise EdgeListError(f"non-integer vertex in {ln!r}", lineno) from None
    try:
        return MaximalOuterplanarGraph(n, tuple(diags))
    except TriangulationError as exc:
        raise EdgeListError(str(exc), lines[-1][0]) from None


def format_triangulation(P: MaximalOuterplanarGraph) -> str:
    return "".join([f"{P.n}\n"] + [f"{a} {b}\n" for a, b in P.diagonals])


def read_triangulation(path: str | Path) -> MaximalOuterplanarGraph:
    return parse_triangulation(Path(path).read_text())


# -- refinement -----------------------------------------------------------

def tree_centroid_finder(H: Graph) -> VertexSet:
    return (tree_centroid(H),)


def bfs_level_finder(H: Graph) -> VertexSet:
    """Smallest BFS layer whose removal leaves no component above |H|/2.

    For a connected graph the layer where the cumulative count first reaches
    half always qualifies, so this meets the 2/3 contract. Every root is
    tried; ties prefer fewer vertices, then the lower root. Trees get their
    centroid instead, which is never worse.
    """
    if is_tree(H):
        return tree_centroid_finder(H)
    best: VertexSet | None = None
    for root in range(H.n):
        dist = [-1] * H.n
        dist[root] = 0
        queue = deque([root])
        layers: list[list[int]] = [[root]]
        while queue:
            u = queue.popleft()
            for w in H.adjacency[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    if dist[w] == len(layers):
                        layers.append([])
                    layers[dist[w]].append(w)
                    queue.append(w)
        before = 0
        reached = sum(len(layer) for layer in layers)
        for layer in layers:
            after = reached - before - len(layer)
            if 2 * before <= H.n and 2 * after <= H.n:
                cand = vertex_set(layer)
                if best is None or len(cand) < len(best):
                    best = cand
            before += len(layer)
    assert best is not None
    return best


def refine_balanced(
    G: Graph,
    X0: Iterable[int],
    finder: Finder,
    max_iterations: int | None = None,
    on_iteration: Callable[[VertexSet], None] | None = None,
) -> VertexSet:
    """Grow ``X0`` until no component of ``G - X`` exceeds ``(n - |X|)/2``.

    The one oversized component is handed to ``finder`` (as an induced,
    relabelled subgraph). Its separator must leave no piece above 2/3 of the
    component, so each round shrinks the worst component geometrically.
    """
    X = set(vertex_set(X0, G.n))
    cap = max_iterations if max_iterations is not None else 4 * G.n + 4
    for _ in range(cap + 1):
        comps = components_after_removal(G, X)
        s = G.n - len(X)
        big = [c for c in comps if 2 * len(c) > s]
        if not big:
            return vertex_set(X)
        comp = big[0]
        H, ids = G.induced_subgraph(comp)
        Y = vertex_set(finder(H), H.n)
        pieces = components_after_removal(H, Y)
        worst = max((len(p) for p in pieces), default=0)
        if not Y or 3 * worst > 2 * H.n:
            raise FinderContractError(
                f"finder returned {list(Y)} on a {H.n}-vertex component, leaving a piece of {worst} vertices"
            )
        X.update(ids[y] for y in Y)
        if on_iteration is not None:
            on_iteration(vertex_set(X))
    raise FinderContractError(f"refinement did not settle within {cap} iterations")


def auto_separator(G: Graph, high_degree: int | None = None) -> VertexSet:
    """High-degree vertices (default threshold ``ceil(2 sqrt n)``), refined to balance.

    Trees start from nothing and refine with centroids.
    """
    if is_tree(G):
        return refine_balanced(G, (), tree_centroid_finder)
    threshold = high_degree if high_degree is not None else math.ceil(2 * math.sqrt(G.n))
    X0 = [v for v in range(G.n) if G.degree(v) >= threshold]
    return refine_balanced(G, X0, bfs_level_finder)
