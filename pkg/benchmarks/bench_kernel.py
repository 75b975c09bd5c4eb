"""Compare the compiled and pure-Python cyclotomic kernels.

Usage: python benchmarks/bench_kernel.py [--repeat N]

Part one times the raw kernel functions on random field elements; part two
builds a full cocycle table end to end in a subprocess per backend.
"""

from __future__ import annotations

import argparse
import os
import random
import subprocess
import sys
import timeit

from a2cocycles import _pykernel
from a2cocycles.scalar import CyclotomicField

try:
    from a2cocycles import _ckernel
except ImportError:
    _ckernel = None

END_TO_END = (
    "import time;"
    "from a2cocycles import _kernel;"
    "from a2cocycles.algebra import Braiding, DeformationParams;"
    "from a2cocycles.section import LiftSetting;"
    "from a2cocycles.cocycle import sigma_table;"
    "t = time.perf_counter();"
    "br = Braiding(5, 1, 1);"
    "sigma_table(LiftSetting(br, DeformationParams.from_values(5, [2, 3, 5]), 'generic'));"
    "print(_kernel.BACKEND, time.perf_counter() - t)"
)


def kernel_timings(mod, L: int, repeat: int) -> dict:
    rng = random.Random(0)
    fld = CyclotomicField.get(L)
    d, red = fld.degree, fld.red

    def elem():
        return _pykernel.normalize(tuple(rng.randint(-999, 999) for _ in range(d)), rng.randint(1, 50))

    pairs = [(elem(), elem()) for _ in range(500)]
    out = {}
    out["mul"] = min(timeit.repeat(lambda: [mod.mul(a, ad, b, bd, red) for (a, ad), (b, bd) in pairs],
                                   number=1, repeat=repeat))
    out["add"] = min(timeit.repeat(lambda: [mod.add(a, ad, b, bd) for (a, ad), (b, bd) in pairs],
                                   number=1, repeat=repeat))
    out["dot"] = min(timeit.repeat(lambda: mod.dot(pairs, d, red), number=1, repeat=repeat))
    return out


def end_to_end(pure: bool) -> str:
    env = dict(os.environ)
    env["A2COCYCLES_PURE_PYTHON"] = "1" if pure else "0"
    proc = subprocess.run([sys.executable, "-c", END_TO_END], env=env, capture_output=True, text=True, check=True)
    backend, seconds = proc.stdout.split()
    return f"{backend:>7}: {float(seconds):.2f}s"


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args(argv)
    if _ckernel is None:
        print("compiled kernel not built; only the pure backend is available")
    print("kernel functions, 500 random pairs (best of %d)" % args.repeat)
    print(f"{'L':>3} {'op':>4} {'python':>10} {'cython':>10} {'speedup':>8}")
    for L in (3, 5, 12):
        py = kernel_timings(_pykernel, L, args.repeat)
        cy = kernel_timings(_ckernel, L, args.repeat) if _ckernel else None
        for op, t in py.items():
            if cy:
                print(f"{L:>3} {op:>4} {t * 1e3:>8.2f}ms {cy[op] * 1e3:>8.2f}ms {t / cy[op]:>7.2f}x")
            else:
                print(f"{L:>3} {op:>4} {t * 1e3:>8.2f}ms")
    print("full table, generic N = 5")
    print(end_to_end(pure=True))
    if _ckernel is not None:
        print(end_to_end(pure=False))
    return 0


if __name__ == "__main__":
    sys.exit(main())
