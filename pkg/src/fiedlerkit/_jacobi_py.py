"""Pure numpy Jacobi kernel, used when the compiled extension is unavailable.

Each sweep visits every (p, q) pair once in round-robin order: the n - 1
rounds each hold n/2 disjoint pairs, so a whole round of rotations is applied
with a handful of vectorized row/column updates.
"""
from __future__ import annotations

from functools import lru_cache

import numpy as np


@lru_cache(maxsize=64)
def round_robin(n: int) -> tuple[tuple[np.ndarray, np.ndarray], ...]:
    """Circle-method schedule: n - 1 rounds (n even) covering all pairs once."""
    m = n + (n % 2)
    players = list(range(m))
    rounds = []
    for _ in range(m - 1):
        pairs = [(players[i], players[m - 1 - i]) for i in range(m // 2)]
        pairs = [(min(a, b), max(a, b)) for a, b in pairs if a < n and b < n]
        if pairs:
            p, q = zip(*pairs)
            rounds.append((np.array(p, dtype=np.intp), np.array(q, dtype=np.intp)))
        players = [players[0], players[-1]] + players[1:-1]
    return tuple(rounds)


def _offdiag(a: np.ndarray) -> float:
    upper = np.triu(a, 1)
    return float(np.sqrt(2.0 * np.sum(upper * upper)))


def jacobi_sweeps(a, vt, target, max_sweeps, want_vectors):
    """Same contract as the compiled ``jacobi_sweeps``."""
    n = a.shape[0]
    schedule = round_robin(n) if n > 1 else ()
    sweeps = 0
    off = _offdiag(a)
    while off > target and sweeps < max_sweeps:
        for p, q in schedule:
            apq = a[p, q]
            live = apq != 0.0
            if not live.any():
                continue
            app = a[p, p]
            aqq = a[q, q]
            with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
                theta = np.where(live, (aqq - app) / (2.0 * np.where(live, apq, 1.0)), 0.0)
                t = np.sign(theta) / (np.abs(theta) + np.sqrt(1.0 + theta * theta))
            t = np.where(theta == 0.0, 1.0, t)
            t = np.where(live, t, 0.0)
            c = 1.0 / np.sqrt(1.0 + t * t)
            s = t * c

            rp = a[p, :].copy()
            rq = a[q, :].copy()
            a[p, :] = c[:, None] * rp - s[:, None] * rq
            a[q, :] = s[:, None] * rp + c[:, None] * rq
            cp = a[:, p].copy()
            cq = a[:, q].copy()
            a[:, p] = cp * c - cq * s
            a[:, q] = cp * s + cq * c
            a[p, p] = app - t * apq
            a[q, q] = aqq + t * apq
            a[p, q] = 0.0
            a[q, p] = 0.0

            if want_vectors:
                vp = vt[p, :].copy()
                vq = vt[q, :].copy()
                vt[p, :] = c[:, None] * vp - s[:, None] * vq
                vt[q, :] = s[:, None] * vp + c[:, None] * vq
        sweeps += 1
        off = _offdiag(a)
    return sweeps, off
