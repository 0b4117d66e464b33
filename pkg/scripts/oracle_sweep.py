"""Compare the sparse engine with the dense oracle on seeded random specs."""

import argparse
import time
from collections import Counter
from dataclasses import dataclass

from loopcohom import betti
from loopcohom.oracle import dense_betti
from loopcohom.randomspec import random_spec


@dataclass
class SweepConfig:
    count: int = 100
    seed: int = 0
    max_generators: int = 4
    max_generator_degree: int = 6
    max_base_dim: int = 4
    truncation: int = 10


def sweep(cfg: SweepConfig):
    mismatches = []
    sizes = Counter()
    t_engine = t_oracle = 0.0
    for seed in range(cfg.seed, cfg.seed + cfg.count):
        spec = random_spec(seed, cfg.max_generators, cfg.max_generator_degree, cfg.max_base_dim, cfg.truncation)
        sizes[len(spec.base), len(spec.generators)] += 1
        t0 = time.perf_counter()
        mine = betti(spec, cfg.truncation)
        t1 = time.perf_counter()
        theirs = dense_betti(spec, cfg.truncation)
        t2 = time.perf_counter()
        t_engine += t1 - t0
        t_oracle += t2 - t1
        if mine != theirs:
            mismatches.append(seed)
    return mismatches, sizes, t_engine, t_oracle


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--count", type=int, default=SweepConfig.count)
    ap.add_argument("--seed", type=int, default=SweepConfig.seed)
    ap.add_argument("--truncation", type=int, default=SweepConfig.truncation)
    args = ap.parse_args()
    cfg = SweepConfig(count=args.count, seed=args.seed, truncation=args.truncation)

    mismatches, sizes, te, to = sweep(cfg)
    print(f"{cfg.count - len(mismatches)}/{cfg.count} agree (engine {te:.2f}s, oracle {to:.2f}s)")
    print("(base dim, generators) -> count")
    for key in sorted(sizes):
        print(f"  {key}: {sizes[key]}")
    if mismatches:
        print("mismatching seeds:", mismatches)
        raise SystemExit(3)


if __name__ == "__main__":
    main()
