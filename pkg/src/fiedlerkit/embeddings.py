"""Zero-sum planar embeddings and separator certificates.

A certificate places a separator ``X`` at the origin and each component of
``G - X`` at one point of the unit circle, chosen so that the points weighted
by component size sum to zero. Every cross edge then has length one and all
other edges length zero, so the Rayleigh quotient of the embedding is
``|E(X, G-X)| / (n - |X|)``, an upper bound on the Fiedler value.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple, Sequence

import numpy as np

from .graph import (
    ComponentPartition,
    Graph,
    VertexSet,
    components_after_removal,
    cross_edge_count,
    vertex_set,
)

ZERO_SUM_TOL = 1e-9
REAL_TIE_RTOL = 1e-12


class DegenerateTriangleError(ValueError):
    pass


class PlacementError(ValueError):
    pass


class UnbalancedSeparatorError(ValueError):
    """Separator leaves a component larger than half of the non-separator vertices,
    or fewer than two components."""

    def __init__(self, message: str, component: VertexSet | None = None, size: int | None = None):
        super().__init__(message)
        self.component = component
        self.size = size


class Point(NamedTuple):
    x: float
    y: float


def three_point_placement(a: float, b: float, c: float) -> tuple[Point, Point, Point]:
    """Unit vectors w1, w2, w3 with ``a*w1 + b*w2 + c*w3 = 0``.

    Read (a, b, c) as triangle sides; beta and gamma are the angles opposite b
    and c. Then w1 = (1, 0), w2 is at angle pi + gamma and w3 at pi - beta.
    """
    if not (a > 0 and b > 0 and c > 0):
        raise DegenerateTriangleError(f"sides must be positive, got ({a}, {b}, {c})")
    if not (a < b + c and b < c + a and c < a + b):
        raise DegenerateTriangleError(f"({a}, {b}, {c}) violates the strict triangle inequality")
    # law of cosines; clamp rounding near degeneracy
    cos_beta = min(1.0, max(-1.0, (a * a + c * c - b * b) / (2 * a * c)))
    cos_gamma = min(1.0, max(-1.0, (a * a + b * b - c * c) / (2 * a * b)))
    beta = math.acos(cos_beta)
    gamma = math.acos(cos_gamma)
    w1 = Point(1.0, 0.0)
    w2 = Point(math.cos(math.pi + gamma), math.sin(math.pi + gamma))
    w3 = Point(math.cos(math.pi - beta), math.sin(math.pi - beta))
    return w1, w2, w3


def _all_integral(ws: Sequence[float]) -> bool:
    return all(float(w).is_integer() for w in ws)


def balanced_circle_placement(weights: Sequence[float]) -> list[Point]:
    """Unit-circle points ``v_i`` with ``sum k_i v_i = 0``, returned in input order.

    Requires at least two weights, each at most half the total. Sort the
    weights ascending and take the shortest prefix that outweighs its suffix.
    If the prefix is exactly half the total, the two sides go to (1, 0) and
    (-1, 0). Otherwise the prefix minus its last weight, that last weight and
    the suffix form a triangle, placed by :func:`three_point_placement`.
    """
    ks = [float(k) for k in weights]
    r = len(ks)
    if r < 2:
        raise PlacementError(f"need at least two weights, got {r}")
    if any(k <= 0 for k in ks):
        raise PlacementError(f"weights must be positive, got {list(weights)}")
    s = math.fsum(ks)
    for i, k in enumerate(ks):
        if 2 * k > s:
            raise PlacementError(f"weight k[{i}] = {weights[i]} exceeds half the total {s}")

    order = sorted(range(r), key=lambda i: (ks[i], i))
    sorted_k = [ks[i] for i in order]
    exact = _all_integral(ks)

    placed: list[Point] = [Point(0.0, 0.0)] * r
    prefix = 0.0
    for ell in range(1, r + 1):
        prefix += sorted_k[ell - 1]
        suffix = s - prefix
        half = prefix == suffix if exact else abs(prefix - suffix) <= REAL_TIE_RTOL * s
        if half:
            for j, i in enumerate(order):
                placed[i] = Point(1.0, 0.0) if j < ell else Point(-1.0, 0.0)
            return placed
        if prefix > suffix:
            a = prefix - sorted_k[ell - 1]
            w1, w2, w3 = three_point_placement(a, sorted_k[ell - 1], suffix)
            for j, i in enumerate(order):
                placed[i] = w1 if j < ell - 1 else (w2 if j == ell - 1 else w3)
            return placed
    raise AssertionError("unreachable: the full prefix always outweighs the empty suffix")


@dataclass(frozen=True)
class Embedding:
    points: np.ndarray  # shape (n, 2)
    tolerance: float = ZERO_SUM_TOL

    @property
    def n(self) -> int:
        return self.points.shape[0]

    def total(self) -> np.ndarray:
        return self.points.sum(axis=0)

    def is_zero_sum(self) -> bool:
        return float(np.linalg.norm(self.total())) <= self.tolerance


def embedding_quotient(G: Graph, emb: Embedding) -> float:
    """``sum over edges |v_i - v_j|^2 / sum |v_i|^2`` for a zero-sum embedding."""
    P = np.asarray(emb.points, dtype=float)
    if P.shape != (G.n, 2):
        raise ValueError(f"embedding has shape {P.shape}, expected ({G.n}, 2)")
    denom = float(np.sum(P * P))
    if denom == 0.0:
        raise ValueError("every vertex sits at the origin")
    resid = float(np.linalg.norm(P.sum(axis=0)))
    if resid > emb.tolerance:
        raise ValueError(f"embedding is not zero-sum: |sum v_i| = {resid:.3e} > {emb.tolerance:.1e}")
    E = np.array(G.edges(), dtype=np.intp).reshape(-1, 2)
    diff = P[E[:, 0]] - P[E[:, 1]]
    return float(np.sum(diff * diff)) / denom


def check_balance(G: Graph, X: VertexSet) -> ComponentPartition:
    comps = components_after_removal(G, X)
    s = G.n - len(X)
    for comp in comps:
        if 2 * len(comp) > s:
            raise UnbalancedSeparatorError(
                f"component {list(comp)} has {len(comp)} vertices, more than (n-|X|)/2 = {s}/2",
                comp,
                len(comp),
            )
    if len(comps) < 2:
        raise UnbalancedSeparatorError(f"G - X has {len(comps)} component(s); at least 2 are needed")
    return comps


def separator_embedding(G: Graph, X) -> Embedding:
    X = vertex_set(X, G.n)
    comps = check_balance(G, X)
    pts = balanced_circle_placement([len(c) for c in comps])
    P = np.zeros((G.n, 2))
    for comp, p in zip(comps, pts):
        P[list(comp)] = p
    return Embedding(P, ZERO_SUM_TOL)


@dataclass(frozen=True)
class SeparatorCertificate:
    separator: VertexSet
    partition: ComponentPartition
    cross_edges: int
    remaining: int  # n - |X|
    embedding: Embedding
    quotient: float
    lambda2: float | None = None
    notes: tuple[str, ...] = field(default=())

    @property
    def bound(self) -> float:
        return self.cross_edges / self.remaining

    @property
    def bound_fraction(self) -> Fraction:
        return Fraction(self.cross_edges, self.remaining)

    @property
    def bound_text(self) -> str:
        # unreduced on purpose: reads as |E(X, G-X)| / (n - |X|)
        return f"{self.cross_edges}/{self.remaining}"

    def soundness_errors(self, slack: float = 1e-8, agree: float = 1e-9) -> list[str]:
        errs = []
        if abs(self.quotient - self.bound) > agree:
            errs.append(f"quotient {self.quotient!r} differs from bound {self.bound_text} by more than {agree}")
        if self.lambda2 is not None and self.quotient < self.lambda2 - slack:
            errs.append(f"quotient {self.quotient!r} is below lambda2 {self.lambda2!r}")
        if not self.embedding.is_zero_sum():
            errs.append("embedding is not zero-sum")
        return errs


def certify(G: Graph, X, lambda2: float | None = None, notes: Sequence[str] = ()) -> SeparatorCertificate:
    """Build the separator certificate for ``X``; pass ``lambda2`` to record it for soundness checks."""
    X = vertex_set(X, G.n)
    emb = separator_embedding(G, X)
    return SeparatorCertificate(
        separator=X,
        partition=components_after_removal(G, X),
        cross_edges=cross_edge_count(G, X),
        remaining=G.n - len(X),
        embedding=emb,
        quotient=embedding_quotient(G, emb),
        lambda2=lambda2,
        notes=tuple(notes),
    )


# -- text serialization ---------------------------------------------------

def format_certificate(G: Graph, cert: SeparatorCertificate) -> str:
    lines = [
        "# separator certificate",
        f"n {G.n}",
        f"m {G.m}",
        "separator " + " ".join(map(str, cert.separator)),
        "component_sizes " + " ".join(str(len(c)) for c in cert.partition),
        f"cross_edges {cert.cross_edges}",
        f"bound {cert.bound_text}",
        f"quotient {cert.quotient:.15g}",
    ]
    if cert.lambda2 is not None:
        lines.append(f"lambda2 {cert.lambda2:.15g}")
    lines += [f"note {note}" for note in cert.notes]
    lines += [f"vertex {v} {x:.15g} {y:.15g}" for v, (x, y) in enumerate(cert.embedding.points)]
    return "\n".join(lines) + "\n"


def parse_certificate(text: str) -> dict:
    """Parse :func:`format_certificate` output into plain values."""
    out: dict = {"vertices": {}, "notes": []}
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, _, rest = line.partition(" ")
        parts = rest.split()
        if key in ("n", "m", "cross_edges"):
            out[key] = int(parts[0])
        elif key == "separator":
            out[key] = tuple(int(p) for p in parts)
        elif key == "component_sizes":
            out[key] = [int(p) for p in parts]
        elif key == "bound":
            p, q = parts[0].split("/")
            out[key] = (int(p), int(q))
        elif key in ("quotient", "lambda2"):
            out[key] = float(parts[0])
        elif key == "note":
            out["notes"].append(rest)
        elif key == "vertex":
            out["vertices"][int(parts[0])] = (float(parts[1]), float(parts[2]))
        else:
            raise ValueError(f"unknown certificate line {raw!r}")
    return out


def recheck_certificate(G: Graph, text: str, tol: float = 1e-9) -> list[str]:
    """Re-verify a serialized certificate against ``G`` from its coordinates alone.

    Returns a list of problems; empty means the certificate checks out.
    """
    data = parse_certificate(text)
    errs = []
    if data.get("n") != G.n or data.get("m") != G.m:
        errs.append("graph size does not match the certificate header")
        return errs
    P = np.array([data["vertices"][v] for v in range(G.n)])
    X = set(data["separator"])
    on_origin = {v for v in range(G.n) if np.hypot(*P[v]) <= tol}
    if on_origin != X:
        errs.append("separator vertices and origin-placed vertices differ")
    radii = np.hypot(P[:, 0], P[:, 1])
    if np.any((radii > tol) & (np.abs(radii - 1.0) > 1e-12)):
        errs.append("a non-separator vertex is off the unit circle")
    if np.linalg.norm(P.sum(axis=0)) > tol:
        errs.append("coordinates do not sum to zero")
    cross = cross_edge_count(G, X)
    p, q = data["bound"]
    if (p, q) != (cross, G.n - len(X)):
        errs.append(f"bound {p}/{q} disagrees with recount {cross}/{G.n - len(X)}")
    E = np.array(G.edges(), dtype=np.intp).reshape(-1, 2)
    d = P[E[:, 0]] - P[E[:, 1]]
    quotient = float(np.sum(d * d)) / float(np.sum(P * P))
    if abs(quotient - p / q) > tol or abs(quotient - data["quotient"]) > tol:
        errs.append(f"recomputed quotient {quotient!r} disagrees with the bound or the recorded quotient")
    return errs
