"""Graph families and their closed-form Laplacian spectra.

Labeling conventions (0-based):

* ``cycle(n)``: ``0..n-1`` in cyclic order; ``path(n)`` likewise without the
  closing edge.
* ``star(n)``: center 0, leaves ``1..n-1``.
* ``wheel``, ``doublewheel``, ``fan``: rim (cycle or path) first, apexes last.
* ``quadrangulation(n)``: cycle ``0..n-1``; apex ``n`` is joined to the even
  positions and apex ``n+1`` to the odd ones. With 1-based cycle labels
  ``i+1`` this is the usual "odd labels to the first apex" wiring.
* ``complete_bipartite(a, b)``: side A is ``0..a-1``.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .graph import Graph, from_edge_list, join


class FamilyError(ValueError):
    pass


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise FamilyError(msg)


def cycle(n: int) -> Graph:
    _need(n >= 3, f"cycle needs n >= 3, got {n}")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    _need(n >= 1, f"path needs n >= 1, got {n}")
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def star(n: int) -> Graph:
    """``K_{1,n-1}`` on ``n`` vertices."""
    _need(n >= 1, f"star needs n >= 1, got {n}")
    return from_edge_list(n, [(0, i) for i in range(1, n)])


def empty(n: int) -> Graph:
    _need(n >= 1, f"empty graph needs n >= 1, got {n}")
    return from_edge_list(n, [])


def complete(n: int) -> Graph:
    _need(n >= 1, f"complete graph needs n >= 1, got {n}")
    return from_edge_list(n, itertools.combinations(range(n), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    _need(a >= 1 and b >= 1, f"complete_bipartite needs a, b >= 1, got {a}, {b}")
    return from_edge_list(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def cube() -> Graph:
    """The 3-cube Q_3; vertices are 3-bit strings, edges flip one bit."""
    return from_edge_list(8, [(v, v ^ (1 << k)) for v in range(8) for k in range(3) if v < v ^ (1 << k)])


def grid(rows: int, cols: int) -> Graph:
    _need(rows >= 1 and cols >= 1, f"grid needs positive sides, got {rows}x{cols}")
    edges = []
    for r in range(rows):
        for c in range(cols):
            v = r * cols + c
            if c + 1 < cols:
                edges.append((v, v + 1))
            if r + 1 < rows:
                edges.append((v, v + cols))
    return from_edge_list(rows * cols, edges)


def wheel(n: int) -> Graph:
    """``C_n * K_1``: hub ``n`` on a rim of ``n`` vertices."""
    _need(n >= 3, f"wheel needs a rim of n >= 3, got {n}")
    return join(cycle(n), empty(1))


def doublewheel(n: int) -> Graph:
    """``C_n * 2K_1``: two non-adjacent apexes ``n``, ``n+1`` over an ``n``-cycle."""
    _need(n >= 4 and n % 2 == 0, f"doublewheel needs even n >= 4, got {n}")
    return join(cycle(n), empty(2))


def quadrangulation(n: int) -> Graph:
    _need(n >= 4 and n % 2 == 0, f"quadrangulation needs even n >= 4, got {n}")
    edges = [(i, (i + 1) % n) for i in range(n)]
    edges += [(i, n + (i % 2)) for i in range(n)]
    return from_edge_list(n + 2, edges)


def fan(n: int) -> Graph:
    """``P_n * K_1``: apex ``n`` over the path ``0..n-1``."""
    _need(n >= 2, f"fan needs n >= 2, got {n}")
    return join(path(n), empty(1))


def kh_extremal(h: int, n: int) -> Graph:
    """``K_{h-2, n-h+2}``: K_h-minor-free with Fiedler value h - 2."""
    _need(h >= 4, f"kh_extremal needs h >= 4, got {h}")
    _need(n >= 2 * h - 4, f"kh_extremal needs n >= 2h-4 = {2 * h - 4}, got {n}")
    return complete_bipartite(h - 2, n - h + 2)


# -- family specs ---------------------------------------------------------

_BUILDERS: dict[str, tuple[Callable[..., Graph], int]] = {
    "cycle": (cycle, 1),
    "path": (path, 1),
    "star": (star, 1),
    "empty": (empty, 1),
    "complete": (complete, 1),
    "complete_bipartite": (complete_bipartite, 2),
    "cube": (cube, 0),
    "grid": (grid, 2),
    "wheel": (wheel, 1),
    "doublewheel": (doublewheel, 1),
    "quadrangulation": (quadrangulation, 1),
    "fan": (fan, 1),
    "kh_extremal": (kh_extremal, 2),
}
_ALIASES = {"kh": "kh_extremal", "kbip": "complete_bipartite", "quad": "quadrangulation"}

KINDS = tuple(_BUILDERS)


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    params: tuple[int, ...] = ()

    def __post_init__(self):
        if self.kind not in _BUILDERS:
            raise FamilyError(f"unknown family {self.kind!r}; known: {', '.join(KINDS)}")
        arity = _BUILDERS[self.kind][1]
        if len(self.params) != arity:
            raise FamilyError(f"family {self.kind!r} takes {arity} parameter(s), got {len(self.params)}")

    @classmethod
    def parse(cls, text: str) -> "FamilySpec":
        """Parse ``"family:param[:param]"``, e.g. ``"doublewheel:10"`` or ``"kh:5:20"``."""
        kind, *rest = text.strip().split(":")
        kind = _ALIASES.get(kind, kind)
        try:
            params = tuple(int(p) for p in rest)
        except ValueError:
            raise FamilyError(f"non-integer parameter in {text!r}") from None
        return cls(kind, params)

    def build(self) -> Graph:
        return _BUILDERS[self.kind][0](*self.params)

    @property
    def n(self) -> int:
        """The size parameter the closed forms are written in (last parameter)."""
        return self.params[-1] if self.params else self.build().n

    def __str__(self) -> str:
        return ":".join([self.kind, *map(str, self.params)])


def is_family_spec(text: str) -> bool:
    kind = text.strip().split(":")[0]
    return _ALIASES.get(kind, kind) in _BUILDERS


# -- closed forms ---------------------------------------------------------

@dataclass(frozen=True)
class ClosedForm:
    family: FamilySpec
    lambda2_predicted: float
    full_spectrum_predicted: np.ndarray | None
    valid: bool
    # limit of lambda2 as n grows, and the constant c in lambda2 ~ limit + c / n^2
    limit: float
    scale: float


def _validity(spec: FamilySpec) -> bool:
    n = spec.n
    if spec.kind == "doublewheel":
        return n >= 4 and n % 2 == 0
    if spec.kind == "quadrangulation":
        # at n = 4 the apex branch undercuts the trigonometric eigenvalue
        return n >= 6 and n % 2 == 0
    if spec.kind == "fan":
        return n >= 2
    if spec.kind == "kh_extremal":
        h = spec.params[0]
        return h >= 4 and n >= 2 * h - 4
    return False


def predicted_lambda2(spec: FamilySpec) -> ClosedForm:
    n = spec.n
    if spec.kind == "doublewheel":
        lam, limit, scale = 4 - 2 * math.cos(2 * math.pi / n), 2.0, 4 * math.pi**2
    elif spec.kind == "quadrangulation":
        lam, limit, scale = 3 - 2 * math.cos(2 * math.pi / n), 1.0, 4 * math.pi**2
    elif spec.kind == "fan":
        lam, limit, scale = 3 - 2 * math.cos(math.pi / n), 1.0, math.pi**2
    elif spec.kind == "kh_extremal":
        lam = limit = float(spec.params[0] - 2)
        scale = 0.0
    else:
        raise FamilyError(f"no closed-form Fiedler value for family {spec.kind!r}")
    full = predicted_full_spectrum(spec) if spec.kind in ("doublewheel", "fan") else None
    return ClosedForm(spec, lam, full, _validity(spec), limit, scale)


def predicted_full_spectrum(spec: FamilySpec) -> np.ndarray:
    if spec.kind not in ("cycle", "path", "doublewheel", "fan"):
        raise FamilyError(f"no closed-form spectrum for family {spec.kind!r}")
    n = spec.n
    k = np.arange(1, n)
    if spec.kind == "cycle":
        vals = np.concatenate(([0.0], 2 - 2 * np.cos(2 * np.pi * k / n)))
    elif spec.kind == "path":
        vals = 2 - 2 * np.cos(np.pi * np.arange(n) / n)
    elif spec.kind == "doublewheel":
        _need(n >= 4 and n % 2 == 0, f"doublewheel needs even n >= 4, got {n}")
        half = np.arange(1, n // 2)
        trig = 4 - 2 * np.cos(2 * np.pi * half / n)
        vals = np.concatenate(([0.0, 6.0, n, n + 2.0], trig, trig))
    else:
        _need(n >= 2, f"fan needs n >= 2, got {n}")
        vals = np.concatenate(([0.0, n + 1.0], 3 - 2 * np.cos(np.pi * k / n)))
    return np.sort(vals)


def quadrangulation_trig_eigenpairs(n: int) -> list[tuple[np.ndarray, float]]:
    """Sine and cosine rim vectors (zero on both apexes) with eigenvalue 3 - 2cos(2 pi k / n)."""
    _need(n >= 4 and n % 2 == 0, f"quadrangulation needs even n >= 4, got {n}")
    # 1-based cycle labels i = 1..n sit at 0-based positions 0..n-1
    i = np.arange(1, n + 1)
    pairs = []
    for k in range(1, n // 2):
        lam = 3 - 2 * math.cos(2 * math.pi * k / n)
        for f in (np.sin, np.cos):
            x = np.zeros(n + 2)
            x[:n] = f(2 * np.pi * i * k / n)
            pairs.append((x, lam))
    return pairs


def quadrangulation_apex_eigenpairs(n: int) -> list[tuple[np.ndarray, float]]:
    """The non-trigonometric eigenpairs of ``quadrangulation(n)``.

    The vector that is 1 on the rim and -n/2 on both apexes has eigenvalue
    n/2 + 1. The alternating rim pattern (+1 on the apex-``n`` side, -1 on the
    other) with apex values ``+a``, ``-a`` is an eigenvector iff
    ``a^2 + (n/2 - 5) a - n/2 = 0``, with eigenvalue ``5 - a``.
    """
    _need(n >= 4 and n % 2 == 0, f"quadrangulation needs even n >= 4, got {n}")
    out = []
    v = np.ones(n + 2)
    v[n:] = -n / 2
    out.append((v, n / 2 + 1))
    b = n / 2 - 5
    disc = b * b + 2 * n
    for sign in (1.0, -1.0):
        a = (-b + sign * math.sqrt(disc)) / 2
        u = np.where(np.arange(n) % 2 == 0, 1.0, -1.0)
        u = np.concatenate((u, [a, -a]))
        out.append((u, 5 - a))
    return out
