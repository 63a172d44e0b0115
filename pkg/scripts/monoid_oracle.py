"""Compare the evaluation-based decision procedure for free-monoid
expressions with bounded rewriting, and report how large the rewrite
closures get.

    python scripts/monoid_oracle.py --max-size 6 --slack 4
"""

from __future__ import annotations

import argparse
import itertools
import time
from dataclasses import dataclass

from normspace.monoid import ClosureOracle, expr_eq, expr_size, exprs_up_to, rewrite_closure_oracle


@dataclass(frozen=True)
class OracleConfig:
    alphabet: str = "ab"
    max_size: int = 6
    slack: int = 4


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--alphabet", default=OracleConfig.alphabet)
    ap.add_argument("--max-size", type=int, default=OracleConfig.max_size)
    ap.add_argument("--slack", type=int, default=OracleConfig.slack)
    args = ap.parse_args()
    cfg = OracleConfig(args.alphabet, args.max_size, args.slack)

    es = exprs_up_to(cfg.alphabet, cfg.max_size)
    oracle = ClosureOracle()
    start = time.perf_counter()
    agree = equal = 0
    for u, v in itertools.product(es, repeat=2):
        bound = expr_size(u) + expr_size(v) + cfg.slack
        decided = expr_eq(u, v)
        agree += decided == oracle.reachable(u, v, bound)
        equal += decided
    pairs = len(es) ** 2
    print(f"{len(es)} expressions, {pairs} pairs, {equal} equal, {agree}/{pairs} agree")
    print(f"pairwise check {time.perf_counter() - start:.2f} s")
    largest = max(es, key=expr_size)
    for bound in range(expr_size(largest), expr_size(largest) + cfg.slack + 1):
        print(f"closure of a size-{expr_size(largest)} expression within size {bound}: "
              f"{len(rewrite_closure_oracle(largest, bound))}")


if __name__ == "__main__":
    main()
