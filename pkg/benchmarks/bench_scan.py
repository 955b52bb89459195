#!/usr/bin/env python3
"""Benchmark the compiled bracket-scan kernel against the pure-Python twin.

The workload is the full Lie-metabelian scan (bracket generation plus the
pairwise commutation phase) on groups where the verdict is positive, so both
kernels run to completion with no early exit.  Dihedral groups give the
worst-case generator counts at a given order.

Usage: python benchmarks/bench_scan.py [--orders 64 128 256] [--repeat 3]
"""

from __future__ import annotations

import argparse
import time

from liemetab.brute import _to_arrays, x_plus_generators
from liemetab.catalog import cyclic, dihedral, elementary_abelian
from liemetab.groups import direct_product
from liemetab import _scan_py

try:
    from liemetab import _scan_c
except ImportError:
    _scan_c = None


def cases(orders):
    for n in orders:
        yield f"D{n}", dihedral(n)
    yield "D8xC2^4", direct_product(dihedral(8), elementary_abelian(4))
    yield "C3xD32", direct_product(cyclic(3), dihedral(32))


def best_time(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--orders", type=int, nargs="*", default=[64, 128, 256])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    if _scan_c is None:
        print("compiled kernel not available; build with `pip install -e .`")

    header = f"{'group':<10} {'order':>5} {'|X+|':>5} {'brackets':>8} {'python':>10}"
    if _scan_c is not None:
        header += f" {'cython':>10} {'speedup':>8}"
    print(header)

    for name, G in cases(args.orders):
        supports, coeffs = _to_arrays(x_plus_generators(G).plus_gens)

        result_py = _scan_py.lie_metabelian_scan(G.table, G.inverse, supports, coeffs)
        t_py = best_time(
            lambda: _scan_py.lie_metabelian_scan(G.table, G.inverse, supports, coeffs),
            args.repeat,
        )
        row = (
            f"{name:<10} {G.order:>5} {len(supports):>5} {result_py[2]:>8} "
            f"{t_py * 1e3:>8.1f}ms"
        )
        if _scan_c is not None:
            result_c = _scan_c.lie_metabelian_scan(G.table, G.inverse, supports, coeffs)
            assert result_c == result_py, f"kernel mismatch on {name}"
            t_c = best_time(
                lambda: _scan_c.lie_metabelian_scan(G.table, G.inverse, supports, coeffs),
                args.repeat,
            )
            row += f" {t_c * 1e3:>8.2f}ms {t_py / t_c:>7.1f}x"
        print(row)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
