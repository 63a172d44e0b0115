"""Normalization throughput by term size.

Generates seeded well-typed terms, buckets them by size, and reports the
mean and worst normalization time per bucket.

    python scripts/bench_normalize.py --terms 5000 --seed 0
"""

from __future__ import annotations

import argparse
import statistics
import time
from collections import defaultdict
from dataclasses import dataclass

from normspace.gen import RandomChooser, gen_typed_term
from normspace.nbe import normalize
from normspace.syntax import term_size


@dataclass(frozen=True)
class BenchConfig:
    terms: int = 2000
    max_size: int = 40
    max_type_depth: int = 4
    bucket: int = 5
    seed: int = 0


def run(cfg: BenchConfig) -> dict[int, list[float]]:
    choose = RandomChooser(cfg.seed)
    buckets: dict[int, list[float]] = defaultdict(list)
    for _ in range(cfg.terms):
        ctx, ty, t = gen_typed_term(choose, cfg.max_size, cfg.max_type_depth)
        s = time.perf_counter()
        normalize(ctx, ty, t)
        ms = (time.perf_counter() - s) * 1000
        buckets[term_size(t) // cfg.bucket * cfg.bucket].append(ms)
    return buckets


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--terms", type=int, default=BenchConfig.terms)
    ap.add_argument("--max-size", type=int, default=BenchConfig.max_size)
    ap.add_argument("--seed", type=int, default=BenchConfig.seed)
    args = ap.parse_args()
    cfg = BenchConfig(terms=args.terms, max_size=args.max_size, seed=args.seed)
    buckets = run(cfg)
    print(f"{'size':>9} {'count':>6} {'mean ms':>9} {'max ms':>9}")
    for lo in sorted(buckets):
        xs = buckets[lo]
        print(f"{lo:>4}-{lo + cfg.bucket - 1:<4} {len(xs):>6} {statistics.mean(xs):>9.4f} {max(xs):>9.4f}")


if __name__ == "__main__":
    main()
