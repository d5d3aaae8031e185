# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Cyclic Jacobi sweeps on a dense symmetric matrix (compiled kernel)."""
from libc.math cimport sqrt


cdef double _offdiag(double[:, ::1] a, Py_ssize_t n) noexcept nogil:
    cdef double acc = 0.0
    cdef Py_ssize_t i, j
    for i in range(n):
        for j in range(i + 1, n):
            acc += a[i, j] * a[i, j]
    return sqrt(2.0 * acc)


def jacobi_sweeps(double[:, ::1] a, double[:, ::1] vt, double target, int max_sweeps, bint want_vectors):
    """Rotate ``a`` in place until its off-diagonal Frobenius norm is <= ``target``.

    ``vt`` accumulates the rotations row-wise (eigenvectors end up as its rows).
    Returns ``(sweeps, off)``.
    """
    cdef Py_ssize_t n = a.shape[0]
    cdef Py_ssize_t p, q, r
    cdef double apq, app, aqq, theta, t, c, s, arp, arq
    cdef int sweeps = 0
    cdef double off
    with nogil:
        off = _offdiag(a, n)
        while off > target and sweeps < max_sweeps:
            for p in range(n - 1):
                for q in range(p + 1, n):
                    apq = a[p, q]
                    if apq == 0.0:
                        continue
                    app = a[p, p]
                    aqq = a[q, q]
                    theta = (aqq - app) / (2.0 * apq)
                    if theta >= 0.0:
                        t = 1.0 / (theta + sqrt(1.0 + theta * theta))
                    else:
                        t = -1.0 / (-theta + sqrt(1.0 + theta * theta))
                    c = 1.0 / sqrt(1.0 + t * t)
                    s = t * c
                    a[p, p] = app - t * apq
                    a[q, q] = aqq + t * apq
                    a[p, q] = 0.0
                    a[q, p] = 0.0
                    for r in range(n):
                        if r == p or r == q:
                            continue
                        arp = a[r, p]
                        arq = a[r, q]
                        a[r, p] = c * arp - s * arq
                        a[p, r] = a[r, p]
                        a[r, q] = s * arp + c * arq
                        a[q, r] = a[r, q]
                    if want_vectors:
                        for r in range(n):
                            arp = vt[p, r]
                            arq = vt[q, r]
                            vt[p, r] = c * arp - s * arq
                            vt[q, r] = s * arp + c * arq
            sweeps += 1
            off = _offdiag(a, n)
    return sweeps, off
