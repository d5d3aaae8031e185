"""Dense symmetric eigensolver and the spectral quantities built on it.

The solver is cyclic Jacobi. The sweep loop runs in the compiled
``_jacobi_c`` extension when it is importable and in numpy otherwise; set
``FIEDLERKIT_PURE_PYTHON=1`` to force the numpy kernel.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import _jacobi_py
from .graph import Graph, laplacian

try:
    if os.environ.get("FIEDLERKIT_PURE_PYTHON"):
        raise ImportError("pure-python kernel forced by environment")
    from . import _jacobi_c
except ImportError:
    _jacobi_c = None

BACKEND = "c" if _jacobi_c is not None else "python"
_KERNELS = {"python": _jacobi_py.jacobi_sweeps}
if _jacobi_c is not None:
    _KERNELS["c"] = _jacobi_c.jacobi_sweeps

DEFAULT_TOL = 1e-10
MAX_SWEEPS = 100
SYMMETRY_TOL = 1e-12
POLISH_SWEEPS = 3


class NotSymmetricError(ValueError):
    pass


class ConvergenceError(RuntimeError):
    def __init__(self, sweeps: int, achieved: float, target: float):
        super().__init__(
            f"Jacobi did not converge in {sweeps} sweeps: off-diagonal norm {achieved:.3e} > target {target:.3e}"
        )
        self.sweeps = sweeps
        self.achieved = achieved
        self.target = target


@dataclass(frozen=True)
class Spectrum:
    """Ascending eigenvalues, optional orthonormal eigenvector columns, and an error bound.

    ``residual_bound`` is absolute: it bounds the distance of each reported
    eigenvalue from the true one (Weyl) and, when vectors are present, the
    ratio ``||M x - lam x|| / (1 + |lam|)``.
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray | None = None
    residual_bound: float = 0.0
    sweeps: int = 0

    def __len__(self) -> int:
        return len(self.eigenvalues)

    @property
    def lambda2(self) -> float:
        return float(self.eigenvalues[1])


def available_backends() -> list[str]:
    return sorted(_KERNELS)


def eigenvalues_sym(
    M,
    want_vectors: bool = False,
    tol: float = DEFAULT_TOL,
    max_sweeps: int = MAX_SWEEPS,
    backend: str | None = None,
) -> Spectrum:
    """All eigenvalues (and optionally eigenvectors) of a symmetric matrix.

    Sweeps stop once the off-diagonal Frobenius norm is at most
    ``tol * ||M||_F``.
    """
    a = np.array(M, dtype=float, order="C", copy=True)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] < 1:
        raise ValueError(f"expected a non-empty square matrix, got shape {a.shape}")
    asym = np.max(np.abs(a - a.T))
    if asym > SYMMETRY_TOL:
        raise NotSymmetricError(f"matrix is not symmetric (max |M - M^T| = {asym:.3e})")
    a = 0.5 * (a + a.T)
    original = a.copy() if want_vectors else None
    n = a.shape[0]
    kernel = _KERNELS[backend or BACKEND]

    norm = float(np.linalg.norm(a))
    target = tol * norm
    vt = np.eye(n) if want_vectors else np.empty((0, 0))
    sweeps, off = kernel(a, vt, target, max_sweeps, want_vectors)
    if off > target:
        raise ConvergenceError(sweeps, off, target)
    if want_vectors and off > 0.0:
        # eigenvector residuals scale with off; a few more sweeps cost little at this point
        extra, off = kernel(a, vt, target * 1e-4, POLISH_SWEEPS, True)
        sweeps += extra

    diag = np.diagonal(a).copy()
    order = np.argsort(diag, kind="stable")
    values = diag[order]
    # floor for rounding accumulated by the rotations themselves
    bound = max(off, 4.0 * np.finfo(float).eps * max(norm, 1.0) * n)
    vectors = None
    if want_vectors:
        vectors = vt[order].T.copy()
        resid = np.linalg.norm(original @ vectors - vectors * values, axis=0) / (1.0 + np.abs(values))
        bound = max(bound, float(resid.max()))
    return Spectrum(values, vectors, bound, sweeps)


def laplacian_spectrum(G: Graph, want_vectors: bool = False, tol: float = DEFAULT_TOL, **kw) -> Spectrum:
    return eigenvalues_sym(laplacian(G), want_vectors=want_vectors, tol=tol, **kw)


def fiedler_value(G: Graph, tol: float = DEFAULT_TOL) -> float:
    """Second-smallest Laplacian eigenvalue; ~0 for disconnected graphs."""
    if G.n < 2:
        raise ValueError(f"Fiedler value needs at least 2 vertices, got {G.n}")
    return float(laplacian_spectrum(G, tol=tol).eigenvalues[1])


def fiedler_vector(G: Graph, tol: float = DEFAULT_TOL) -> np.ndarray:
    if G.n < 2:
        raise ValueError(f"Fiedler vector needs at least 2 vertices, got {G.n}")
    if not G.is_connected():
        raise ValueError("Fiedler vector requested for a disconnected graph")
    spec = laplacian_spectrum(G, want_vectors=True, tol=tol)
    x = spec.eigenvectors[:, 1]
    # kill any drift toward the constant kernel vector
    x = x - x.mean()
    return x / np.linalg.norm(x)


def rayleigh_quotient(L, x) -> float:
    x = np.asarray(x, dtype=float)
    xx = float(x @ x)
    if xx == 0.0:
        raise ValueError("Rayleigh quotient of the zero vector")
    return float(x @ np.asarray(L) @ x) / xx


def edge_rayleigh_quotient(G: Graph, x) -> float:
    """Same quotient written as a sum of squared differences over edges."""
    x = np.asarray(x, dtype=float)
    xx = float(x @ x)
    if xx == 0.0:
        raise ValueError("Rayleigh quotient of the zero vector")
    return sum((x[u] - x[v]) ** 2 for u, v in G.edges()) / xx


def embedding_residual(L, x, lam: float) -> float:
    x = np.asarray(x, dtype=float)
    nx = float(np.linalg.norm(x))
    if nx == 0.0:
        raise ValueError("residual of the zero vector")
    return float(np.linalg.norm(np.asarray(L) @ x - lam * x)) / nx


def join_spectrum(s1, n1: int, s2, n2: int, tol: float = 1e-8) -> Spectrum:
    """Laplacian spectrum of ``G1 * G2`` from the spectra of the parts.

    Keeps 0, shifts the nonzero eigenvalues of each side by the other side's
    order, and adds ``n1 + n2``.
    """
    e1 = np.sort(np.asarray(getattr(s1, "eigenvalues", s1), dtype=float))
    e2 = np.sort(np.asarray(getattr(s2, "eigenvalues", s2), dtype=float))
    if len(e1) != n1 or len(e2) != n2 or n1 < 1 or n2 < 1:
        raise ValueError("spectrum lengths must match the vertex counts n1, n2 >= 1")
    for e in (e1, e2):
        if abs(e[0]) > tol:
            raise ValueError(f"smallest eigenvalue {e[0]:.3e} is not 0: not a Laplacian spectrum")
    values = np.concatenate(([0.0], e1[1:] + n2, e2[1:] + n1, [float(n1 + n2)]))
    bound = max(getattr(s1, "residual_bound", 0.0), getattr(s2, "residual_bound", 0.0))
    return Spectrum(np.sort(values), None, bound)


def multiset_close(a: Sequence[float], b: Sequence[float], atol: float = 1e-8) -> bool:
    """Sorted pairwise comparison of two eigenvalue multisets."""
    a, b = np.sort(np.asarray(a, dtype=float)), np.sort(np.asarray(b, dtype=float))
    return a.shape == b.shape and bool(np.all(np.abs(a - b) <= atol))
