"""Poincare table of every built-in fixture, cross-checked with the oracle."""

import argparse

from loopcohom import betti
from loopcohom.models import FIXTURES, fixture
from loopcohom.oracle import dense_betti


def main(max_degree: int, check: bool):
    width = max(len(name) for name in FIXTURES)
    print(" " * width, " ".join(f"{n:2d}" for n in range(max_degree + 1)))
    for name in FIXTURES:
        spec = fixture(name, max_degree)
        b = betti(spec, max_degree)
        flag = ""
        if check:
            flag = "  ok" if dense_betti(spec, max_degree) == b else "  MISMATCH"
        print(name.ljust(width), " ".join(f"{b[n]:2d}" for n in range(max_degree + 1)) + flag)


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-degree", type=int, default=20)
    ap.add_argument("--no-oracle", action="store_true")
    args = ap.parse_args()
    main(args.max_degree, not args.no_oracle)
