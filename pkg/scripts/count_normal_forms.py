"""Count eta-long normal forms by size, and check the section property on
every one of them.

    python scripts/count_normal_forms.py --type "(O -> O) -> O -> O" --max-size 14
    python scripts/count_normal_forms.py --type O --ctx "f : O -> O -> O, x : O"
"""

from __future__ import annotations

import argparse
import time
from dataclasses import dataclass

from normspace.gen import enum_nf
from normspace.nbe import normalize
from normspace.nf import erase_nftm
from normspace.surface import parse_type
from normspace.syntax import Context, Type


@dataclass(frozen=True)
class CountConfig:
    ctx: Context
    ty: Type
    max_size: int = 12


def parse_ctx(src: str) -> tuple[tuple[str, ...], Context]:
    """``"f : O -> O, x : O"`` with the last entry innermost."""
    names, tys = [], []
    for part in filter(None, (p.strip() for p in src.split(","))):
        name, _, ty = part.partition(":")
        names.append(name.strip())
        tys.append(parse_type(ty))
    return tuple(reversed(names)), tuple(reversed(tys))


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--type", default="(O -> O) -> O -> O")
    ap.add_argument("--ctx", default="")
    ap.add_argument("--max-size", type=int, default=12)
    args = ap.parse_args()
    _, ctx = parse_ctx(args.ctx)
    cfg = CountConfig(ctx, parse_type(args.type), args.max_size)
    total = 0
    start = time.perf_counter()
    print(f"{'size':>4} {'count':>8} section")
    for size in range(1, cfg.max_size + 1):
        nfs = enum_nf(cfg.ctx, cfg.ty, size)
        ok = all(normalize(cfg.ctx, cfg.ty, erase_nftm(cfg.ctx, n)) == n for n in nfs)
        total += len(nfs)
        print(f"{size:>4} {len(nfs):>8} {'ok' if ok else 'FAILED'}")
    print(f"total {total} in {time.perf_counter() - start:.2f} s")


if __name__ == "__main__":
    main()
