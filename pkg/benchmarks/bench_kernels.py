"""Benchmark the three kernel implementations on realistic workloads.

Usage: python3 benchmarks/bench_kernels.py [--repeat N]

Workloads: a large character product, a Demazure sweep over a full character,
and the exact-division round trip that gamma performs, each in every available
kernel mode.  All modes must agree exactly; the script asserts that.
"""

import argparse
import time

from weylkit import _kernels
from weylkit.char_ring import Character
from weylkit.root_system import build
from weylkit.weyl_formula import big_lambda, gamma
from weylkit.weyl_group import WeylGroup
from weylkit import demazure as dz


def timed(fn, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t0)
    return best, result


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--type", default="B3")
    parser.add_argument("--coord", type=int, default=3)
    args = parser.parse_args()

    group = WeylGroup(build(args.type))
    rs = group.rs
    psi = (args.coord,) * rs.rank
    chi = gamma(group, Character.exponential(rs, psi))
    lam = big_lambda(rs)
    print(f"type {args.type}, base character of {psi}: {len(chi)} terms "
          f"(dim {chi.dimension()}), Lambda: {len(lam)} terms")

    modes = ["python", "numpy"]
    if _kernels.numba_available():
        modes.append("numba")
        # warm the JIT outside the timed region
        _kernels.set_mode("numba")
        (chi * lam)
        dz.demazure(rs, 0, chi)
        (chi * lam).divide_exact(rs.positive_roots[0])
        _kernels.set_mode(None)

    workloads = {
        "product  chi * chi": lambda: chi * chi,
        "numerator chi * Lambda": lambda: chi * lam,
        "demazure sweep": lambda: dz.demazure(rs, 0, chi * chi),
        "exact division": lambda: _divide_all(chi * lam, rs),
    }

    reference = {}
    for name, fn in workloads.items():
        print(f"\n{name}:")
        for mode in modes:
            _kernels.set_mode(mode)
            try:
                best, result = timed(fn, args.repeat)
            finally:
                _kernels.set_mode(None)
            key = sorted(result.terms.items())[:5] if hasattr(result, "terms") else result
            if name in reference:
                assert key == reference[name], f"{mode} disagrees on {name}"
            else:
                reference[name] = key
            print(f"  {mode:>7}: {best * 1000:9.2f} ms")


def _divide_all(x, rs):
    for root in rs.positive_roots:
        x = x.divide_exact(root)
    return x


if __name__ == "__main__":
    main()
