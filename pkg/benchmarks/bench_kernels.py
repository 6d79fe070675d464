"""Compare the compiled and pure-Python arithmetic kernels.

Micro-benchmarks call both kernel modules directly on the same data; the
end-to-end run times ``find-foci`` on the ellipse in a subprocess per backend
(``CONCHOIDAL_PURE`` is read once, at import).

    python3 benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import os
import random
import subprocess
import sys
import timeit

from conchoidal._kernel import _pykernel as py

try:
    from conchoidal._kernel import _ckernel as ck
except ImportError:
    ck = None

K = (5, 0, 2, 1, 10, 5)

E2E = (
    "import time\n"
    "from conchoidal.foci import find_double_rational_foci\n"
    "from conchoidal.geometry import ParamCurve\n"
    "from conchoidal.ratfn import RatFn\n"
    "from conchoidal._kernel import BACKEND\n"
    "t = RatFn.x()\n"
    "P = ParamCurve(4*t/(t**2+1), (3*t**2-3)/(t**2+1))\n"
    "t0 = time.perf_counter(); find_double_rational_foci(P)\n"
    "print(BACKEND, time.perf_counter() - t0)\n"
)


def _data(rng, bound, n):
    def elem():
        c = tuple(rng.randint(-bound, bound) for _ in range(8))
        return py.normalize(c, rng.randint(1, bound))

    return [elem() for _ in range(n)], [elem() for _ in range(n)]


def micro(repeat):
    rng = random.Random(0)
    rows = []
    for label, bound in (("small", 100), ("large", 10 ** 25)):
        A, B = _data(rng, bound, 24)
        pairs = list(zip(A, B))
        for name, fn in (
            ("mul", lambda m: [m.mul(a[0], a[1], b[0], b[1], K, 2) for a, b in pairs]),
            ("add", lambda m: [m.add(a[0], a[1], b[0], b[1]) for a, b in pairs]),
            ("poly_mul", lambda m: m.poly_mul(A, B, K, 2)),
        ):
            tp = min(timeit.repeat(lambda: fn(py), number=20, repeat=repeat))
            tc = min(timeit.repeat(lambda: fn(ck), number=20, repeat=repeat)) if ck else float("nan")
            rows.append((f"{name}/{label}", tp, tc))
    return rows


def end_to_end():
    out = {}
    for pure in ("1", "0"):
        env = dict(os.environ, CONCHOIDAL_PURE=pure)
        res = subprocess.run([sys.executable, "-c", E2E], env=env, capture_output=True, text=True, check=True)
        backend, secs = res.stdout.split()
        out[backend] = float(secs)
    return out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    if ck is None:
        print("compiled kernel not built; only the fallback is timed")
    print(f"{'kernel':<18}{'python (ms)':>12}{'cython (ms)':>12}{'speedup':>9}")
    for name, tp, tc in micro(args.repeat):
        print(f"{name:<18}{tp * 1e3:>12.2f}{tc * 1e3:>12.2f}{tp / tc:>9.2f}")
    e2e = end_to_end()
    print()
    for backend, secs in e2e.items():
        print(f"find-foci ellipse [{backend}]: {secs:.3f} s")


if __name__ == "__main__":
    main()
