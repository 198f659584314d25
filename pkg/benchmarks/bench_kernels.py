"""Compiled core vs pure-Python fallback on the hot kernels.

    python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import random
import sys
import timeit
from fractions import Fraction

from starmat._kernels import _fallback, compiled_module


def _flat(rng, n, frac):
    vals = (-2, -1, 0, 1, 2) if not frac else tuple(Fraction(k, d) for k in range(-2, 3) for d in (1, 2))
    return tuple(rng.choice(vals) for _ in range(n * n))


def cases():
    rng = random.Random(0)
    a2f, b2f = _flat(rng, 2, True), _flat(rng, 2, True)
    a5f, b5f = _flat(rng, 5, True), _flat(rng, 5, True)
    a5i, b5i = _flat(rng, 5, False), _flat(rng, 5, False)
    yield "star2_flat  2x2 Fraction", 20_000, lambda m: m.star2_flat(a2f, b2f)
    yield "star_flat   5x5 Fraction", 2_000, lambda m: m.star_flat(a5f, b5f, 5)
    yield "star_flat   5x5 int", 20_000, lambda m: m.star_flat(a5i, b5i, 5)
    yield "matmul_flat 5x5 int", 20_000, lambda m: m.matmul_flat(a5i, b5i, 5)
    yield "assoc2_exhaustive {-1,0,1}", 1, lambda m: m.assoc2_exhaustive((-1, 0, 1))


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)

    core = compiled_module()
    if core is None:
        print("compiled core not built; only the fallback can be timed", file=sys.stderr)
    print(f"{'kernel':32} {'calls':>7} {'python s':>10} {'compiled s':>11} {'speedup':>8}")
    for name, number, call in cases():
        py = min(timeit.repeat(lambda: call(_fallback), number=number, repeat=args.repeat))
        if core is None:
            print(f"{name:32} {number:>7} {py:>10.4f} {'-':>11} {'-':>8}")
            continue
        if call(core) != call(_fallback):
            raise SystemExit(f"{name}: implementations disagree")
        c = min(timeit.repeat(lambda: call(core), number=number, repeat=args.repeat))
        print(f"{name:32} {number:>7} {py:>10.4f} {c:>11.4f} {py / c:>7.1f}x")


if __name__ == "__main__":
    main()
