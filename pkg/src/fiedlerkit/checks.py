"""Inequality checks over graph corpora and closed-form sweeps."""
from __future__ import annotations

import csv
import io
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Sequence, TextIO

from . import families as fam
from .families import FamilySpec
from .graph import Graph, cross_edge_count, high_degree_set, vertex_connectivity
from .separators import nonisomorphic_trees
from .spectra import DEFAULT_TOL, fiedler_value

SLACK = 1e-8


@dataclass(frozen=True)
class CheckReport:
    check: str
    graph: str
    lhs: float
    rhs: float

    @property
    def passed(self) -> bool:
        return self.lhs <= self.rhs + SLACK

    @property
    def slack(self) -> float:
        return self.rhs - self.lhs

    def format(self) -> str:
        flag = "PASS" if self.passed else "FAIL"
        return f"{flag}  {self.check:<14} {self.graph:<26} {self.lhs:>16.10f} <= {self.rhs:<16.10f} slack {self.slack:.3e}"


def _specs(texts: Iterable[str]) -> list[tuple[str, Graph]]:
    out = []
    for t in texts:
        spec = FamilySpec.parse(t)
        out.append((str(spec), spec.build()))
    return out


def planar_corpus() -> list[tuple[str, Graph]]:
    """Planar graphs named in the bounds, each isomorphism class once."""
    texts = ["complete:2", "complete:3", "complete:4", "cube"]
    texts += [f"path:{n}" for n in range(3, 13)]
    texts += [f"cycle:{n}" for n in range(4, 17)]
    texts += [f"star:{n}" for n in range(4, 13)]
    texts += [f"wheel:{n}" for n in range(4, 13)]
    texts += [f"doublewheel:{n}" for n in range(4, 21, 2)]
    texts += [f"quadrangulation:{n}" for n in range(4, 21, 2)]
    texts += [f"fan:{n}" for n in range(3, 15)]
    texts += [f"complete_bipartite:2:{b}" for b in range(3, 11)]
    texts += [f"grid:{r}:{c}" for r in range(2, 6) for c in range(r, 6)]
    return _specs(texts)


def bounded_degree_corpus() -> list[tuple[str, Graph]]:
    texts = [f"grid:{r}:{c}" for r in range(2, 9) for c in range(r, 9)]
    texts += [f"cycle:{n}" for n in range(3, 31)]
    texts.append("cube")
    return _specs(texts)


def small_corpus(max_n: int = 12) -> list[tuple[str, Graph]]:
    """Non-complete connected graphs with at most ``max_n`` vertices, for the cut oracle."""
    items = [(name, G) for name, G in planar_corpus() if G.n <= max_n and not G.is_complete()]
    items += _specs(f"kh:{h}:{n}" for h in (4, 5, 6) for n in range(2 * h - 4, max_n + 1))
    for n in range(3, min(max_n, 9) + 1):
        for i, T in enumerate(nonisomorphic_trees(n)):
            items.append((f"tree{n}#{i}", T))
    return items


def degree_cut_bound(n: int, k: int) -> float:
    """Cap on edges leaving the degree >= k vertices of an n-vertex maximal bipartite planar graph."""
    return n + ((4 * n - 8) / k) ** 2 + (8 * n - 16) / k - 8


class _Lambda2Cache:
    def __init__(self, tol: float):
        self.tol = tol
        self._memo: dict[str, float] = {}

    def __call__(self, name: str, G: Graph) -> float:
        if name not in self._memo:
            self._memo[name] = fiedler_value(G, self.tol)
        return self._memo[name]


def check_fiedler_bound(lam) -> list[CheckReport]:
    items = planar_corpus() + _specs(f"kh:{h}:{n}" for h in range(4, 10) for n in (2 * h - 4, 2 * h, 30))
    return [CheckReport("fiedler-2m/n-1", name, lam(name, G), 2 * G.m / (G.n - 1)) for name, G in items]


def check_planar_four(lam) -> list[CheckReport]:
    return [CheckReport("planar<=4", name, lam(name, G), 4.0) for name, G in planar_corpus()]


def planar_equality_rows(reports: Sequence[CheckReport]) -> list[str]:
    return [r.graph for r in reports if r.check == "planar<=4" and abs(r.lhs - r.rhs) <= SLACK]


def check_bounded_degree(lam) -> list[CheckReport]:
    return [
        CheckReport("8Delta/n", name, lam(name, G), 8 * G.max_degree / G.n) for name, G in bounded_degree_corpus()
    ]


def check_connectivity(lam) -> list[CheckReport]:
    return [
        CheckReport("connectivity", name, lam(name, G), float(vertex_connectivity(G))) for name, G in small_corpus()
    ]


def check_degree_cut(ns: Iterable[int] = range(6, 61, 2)) -> list[CheckReport]:
    rows = []
    for n in ns:
        G = fam.quadrangulation(n)
        N = G.n
        for k in sorted({math.ceil(math.sqrt(N)), math.ceil(N ** (2 / 3))}):
            A = high_degree_set(G, k)
            rows.append(CheckReport("degree-cut", f"quadrangulation:{n} k={k}", float(cross_edge_count(G, A)), degree_cut_bound(N, k)))
    return rows


def check_bipartite(lam) -> list[CheckReport]:
    rows = []
    for name, G in _specs(f"quadrangulation:{n}" for n in range(6, 41, 2)):
        rows.append(CheckReport("bipartite<=2", name, lam(name, G), 2.0))
    for name, G in _specs(f"complete_bipartite:2:{b}" for b in range(2, 31)):
        rows.append(CheckReport("K2n=2", name, abs(lam(name, G) - 2.0), 0.0))
    return rows


CHECKS = ("fiedler", "planar", "bounded-degree", "connectivity", "degree-cut", "bipartite")


def run_checks(selector: str = "all", tol: float = DEFAULT_TOL) -> list[CheckReport]:
    names = CHECKS if selector == "all" else tuple(s.strip() for s in selector.split(","))
    unknown = [s for s in names if s not in CHECKS]
    if unknown:
        raise ValueError(f"unknown check(s) {unknown}; choose from {', '.join(CHECKS)} or 'all'")
    lam = _Lambda2Cache(tol)
    table = {
        "fiedler": lambda: check_fiedler_bound(lam),
        "planar": lambda: check_planar_four(lam),
        "bounded-degree": lambda: check_bounded_degree(lam),
        "connectivity": lambda: check_connectivity(lam),
        "degree-cut": check_degree_cut,
        "bipartite": lambda: check_bipartite(lam),
    }
    rows: list[CheckReport] = []
    for name in names:
        rows += table[name]()
    return rows


# -- sweeps ---------------------------------------------------------------

SWEEP_HEADER = ("family", "n", "lambda2", "closed_form", "abs_gap", "scaled_gap")


@dataclass(frozen=True)
class SweepRow:
    family: str
    n: int
    lambda2: float
    closed_form: float | None
    abs_gap: float | None
    scaled_gap: float


SWEEP_FAMILIES = ("doublewheel", "quadrangulation", "fan", "kh_extremal")


def _family_for(family: str, n: int) -> FamilySpec:
    """``"fan"`` or ``"kh:5"`` plus ``n`` -> ``fan:n`` / ``kh_extremal:5:n``."""
    return FamilySpec.parse(f"{family}:{n}")


def sweep_row(family: str, n: int, tol: float = DEFAULT_TOL) -> SweepRow:
    spec = _family_for(family, n)
    cf = fam.predicted_lambda2(spec)
    lam = fiedler_value(spec.build(), tol)
    closed = cf.lambda2_predicted if cf.valid else None
    gap = abs(lam - closed) if closed is not None else None
    return SweepRow(family, n, lam, closed, gap, (lam - cf.limit) * n * n)


def _sweep_task(args):
    return sweep_row(*args)


def sweep(family: str, ns: Iterable[int], tol: float = DEFAULT_TOL, jobs: int = 1) -> list[SweepRow]:
    """One row per constructible ``n``; rows come back in ascending ``n``."""
    kind = _family_for(family, 0).kind
    if kind not in SWEEP_FAMILIES:
        raise fam.FamilyError(f"no closed form to sweep for {family!r}; choose from {', '.join(SWEEP_FAMILIES)}")
    pending = []
    for n in sorted(set(ns)):
        try:
            _family_for(family, n).build()
        except fam.FamilyError:
            continue
        pending.append((family, n, tol))
    if jobs > 1 and len(pending) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_sweep_task, pending))
    else:
        rows = [_sweep_task(t) for t in pending]
    return sorted(rows, key=lambda r: r.n)


def _fmt(x: float | None) -> str:
    return "" if x is None else repr(float(x))


def write_sweep_csv(rows: Sequence[SweepRow], fh: TextIO) -> None:
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(SWEEP_HEADER)
    for r in rows:
        w.writerow([r.family, r.n, _fmt(r.lambda2), _fmt(r.closed_form), _fmt(r.abs_gap), _fmt(r.scaled_gap)])


def read_sweep_csv(fh: TextIO) -> list[SweepRow]:
    reader = csv.reader(fh)
    header = tuple(next(reader))
    if header != SWEEP_HEADER:
        raise ValueError(f"unexpected sweep header {header}")
    out = []
    for rec in reader:
        opt = [None if v == "" else float(v) for v in rec[3:5]]
        out.append(SweepRow(rec[0], int(rec[1]), float(rec[2]), opt[0], opt[1], float(rec[5])))
    return out


def sweep_csv_text(rows: Sequence[SweepRow]) -> str:
    buf = io.StringIO()
    write_sweep_csv(rows, buf)
    return buf.getvalue()
