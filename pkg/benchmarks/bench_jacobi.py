"""Time the Jacobi backends against LAPACK on doublewheel Laplacians.

    python3 benchmarks/bench_jacobi.py [--sizes 20 50 100 200] [--repeat 3] [--vectors]
"""
import argparse
import time

import numpy as np

from fiedlerkit import families as fam
from fiedlerkit.graph import laplacian
from fiedlerkit.spectra import available_backends, eigenvalues_sym


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[20, 50, 100, 200])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--vectors", action="store_true", help="also accumulate eigenvectors")
    args = ap.parse_args()

    backends = available_backends()
    cols = backends + ["lapack"]
    print(f"{'n':>5} " + " ".join(f"{c:>12}" for c in cols) + "   speedup  max|dev|")
    for n in args.sizes:
        L = laplacian(fam.doublewheel(n if n % 2 == 0 else n + 1))
        ref = np.linalg.eigvalsh(L)
        row, dev = {}, 0.0
        for b in backends:
            row[b], s = best_of(lambda: eigenvalues_sym(L, want_vectors=args.vectors, backend=b), args.repeat)
            dev = max(dev, float(np.abs(s.eigenvalues - ref).max()))
        row["lapack"], _ = best_of(lambda: np.linalg.eigvalsh(L), args.repeat)
        speed = row["python"] / row["c"] if "c" in row else float("nan")
        print(f"{L.shape[0]:>5} " + " ".join(f"{row[c]:>11.4f}s" for c in cols) + f"   {speed:>6.1f}x  {dev:.1e}")


if __name__ == "__main__":
    main()
