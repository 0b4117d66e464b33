"""Cohomology of the loop-group bundle over SU(3)/SO(3).

Prints the Betti table, the representatives and the [y2]-power products,
and repeats the computation for a few rescalings of the class d(y4).
"""

import argparse
import time
from dataclasses import dataclass, field
from fractions import Fraction

from loopcohom import betti, ring_structure, su3_so3_example
from loopcohom.graded import format_fraction


@dataclass
class Config:
    max_degree: int = 20
    scales: list = field(default_factory=lambda: [Fraction(1), Fraction(7, 3), Fraction(-2)])


def main(cfg: Config):
    spec = su3_so3_example(cfg.max_degree)
    t0 = time.perf_counter()
    res = ring_structure(spec, cfg.max_degree)
    dt = time.perf_counter() - t0
    print(f"ring structure through degree {cfg.max_degree} in {dt * 1000:.1f} ms")
    print(" n  dim C^n  rank d_n  betti  representative")
    for n in range(cfg.max_degree + 1):
        reps = ", ".join(str(r) for r in res.representatives[n]) or "-"
        print(f"{n:2d}  {res.dims[n]:7d}  {res.ranks[n]:8d}  {res.betti[n]:5d}  {reps}")

    print("\n[y2] * [y2^k]:")
    for n in range(2, cfg.max_degree - 1, 2):
        coeffs = res.product(2, 0, n, 0)
        print(f"  deg {n + 2:2d}: {' '.join(format_fraction(c) for c in coeffs)}")

    print("\nbetti under d(y4) = s * x5:")
    for s in cfg.scales:
        b = betti(su3_so3_example(cfg.max_degree, scale=s), cfg.max_degree)
        print(f"  s = {format_fraction(s):>4}: {[b[n] for n in sorted(b)]}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-degree", type=int, default=Config.max_degree)
    args = ap.parse_args()
    main(Config(max_degree=args.max_degree))
