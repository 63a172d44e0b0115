"""Generators for types, contexts, and well-typed terms, plus an exhaustive
enumerator of eta-long normal forms.

Random generators draw every decision through a ``choose(n) -> int`` callable
returning a value in ``range(n)``. :class:`RandomChooser` drives them from a
seeded RNG; the test suite drives them from hypothesis so failures shrink.
"""

from __future__ import annotations

import random
from functools import lru_cache
from typing import Callable, Iterator

from . import nf as N
from .nbe import normalize_tp
from .syntax import O, App, Context, Fun, Lam, No, Term, Type, Var, Yes, type_depth

Chooser = Callable[[int], int]


class RandomChooser:
    def __init__(self, seed: int | random.Random):
        self.rng = seed if isinstance(seed, random.Random) else random.Random(seed)

    def __call__(self, n: int) -> int:
        return self.rng.randrange(n)


def _between(choose: Chooser, lo: int, hi: int) -> int:
    return lo + choose(hi - lo + 1)


# --------------------------------------------------------------------------
# Types and contexts


def all_types(max_depth: int) -> list[Type]:
    """Every type of depth at most ``max_depth`` (``O`` has depth 1)."""
    if max_depth < 1:
        return []
    smaller = all_types(max_depth - 1)
    return [O] + [Fun(a, b) for a in smaller for b in smaller]


def gen_type(choose: Chooser, max_depth: int) -> Type:
    if max_depth <= 1 or choose(3) == 0:
        return O
    return Fun(gen_type(choose, max_depth - 1), gen_type(choose, max_depth - 1))


def gen_ctx(choose: Chooser, max_len: int = 3, max_depth: int = 3) -> Context:
    return tuple(gen_type(choose, max_depth) for _ in range(choose(max_len + 1)))


# --------------------------------------------------------------------------
# Terms


def min_size(a: Type) -> int:
    """Size of the smallest closed inhabitant of ``a``."""
    if isinstance(a, Fun):
        return 1 + min_size(a.cod)
    return 1


def _spine(a: Type, target: Type) -> list[Type] | None:
    """Argument types ``A1..Ak`` with ``a == A1 -> ... -> Ak -> target``, k >= 1."""
    args: list[Type] = []
    while isinstance(a, Fun):
        args.append(a.dom)
        a = a.cod
        if a == target:
            return list(args)
    return None


def gen_term(choose: Chooser, ctx: Context, ty: Type, size: int, aux_depth: int = 2) -> Term:
    """A term of type ``ty`` under ``ctx`` with at most ``size`` nodes.

    Mixes introductions, variables, neutral spines, explicit beta-redexes,
    and applications of arbitrary generated functions. Auxiliary types
    introduced by redexes and applications have depth at most ``aux_depth``.
    """
    if size < min_size(ty):
        raise ValueError(f"size {size} too small for {ty!r}")

    options: list[str] = []
    if isinstance(ty, Fun):
        options += ["lam", "lam"]
    else:
        options += ["const"]
    if any(a == ty for a in ctx):
        options.append("var")
    spines = [(i, s) for i, a in enumerate(ctx) if (s := _spine(a, ty)) is not None]
    spines = [(i, s) for i, s in spines if 1 + len(s) + sum(min_size(b) for b in s) <= size]
    # compound forms are weighted up so terms tend to use their budget
    if spines:
        options += ["spine"] * 2
    if size >= 3 + min_size(ty):
        options += ["redex", "app"] * 2

    match options[choose(len(options))]:
        case "lam":
            assert isinstance(ty, Fun)
            return Lam(ty.dom, gen_term(choose, (ty.dom, *ctx), ty.cod, size - 1, aux_depth))
        case "const":
            return Yes() if choose(2) == 0 else No()
        case "var":
            hits = [i for i, a in enumerate(ctx) if a == ty]
            return Var(hits[choose(len(hits))])
        case "spine":
            i, args = spines[choose(len(spines))]
            need = [min_size(b) for b in args]
            spare = size - 1 - len(args) - sum(need)
            t: Term = Var(i)
            for b, m in zip(args, need):
                extra = choose(spare + 1)
                spare -= extra
                t = App(t, gen_term(choose, ctx, b, m + extra, aux_depth))
            return t
        case "redex":
            c = _fitting_type(choose, aux_depth, size - 2 - min_size(ty))
            body_size = _between(choose, min_size(ty), size - 2 - min_size(c))
            body = gen_term(choose, (c, *ctx), ty, body_size, aux_depth)
            arg = gen_term(choose, ctx, c, size - 2 - body_size, aux_depth)
            return App(Lam(c, body), arg)
        case "app":
            c = _fitting_type(choose, aux_depth, size - 2 - min_size(ty))
            f_size = _between(choose, 1 + min_size(ty), size - 1 - min_size(c))
            f = gen_term(choose, ctx, Fun(c, ty), f_size, aux_depth)
            u = gen_term(choose, ctx, c, size - 1 - f_size, aux_depth)
            return App(f, u)
    raise AssertionError("unreachable")


def _fitting_type(choose: Chooser, max_depth: int, budget: int) -> Type:
    for _ in range(8):
        c = gen_type(choose, max_depth)
        if min_size(c) <= budget:
            return c
    return O


def gen_typed_term(
    choose: Chooser,
    max_size: int = 40,
    max_type_depth: int = 4,
    max_ctx: int = 3,
    closed: bool = False,
    ty: Type | None = None,
) -> tuple[Context, Type, Term]:
    ctx: Context = () if closed else gen_ctx(choose, max_ctx, max_type_depth - 1)
    if ty is None:
        ty = gen_type(choose, max_type_depth)
    lo = min_size(ty)
    size = _between(choose, lo, max(lo, max_size))
    return ctx, ty, gen_term(choose, ctx, ty, size)


# --------------------------------------------------------------------------
# Exhaustive enumeration of normal forms


def enum_nf(ctx: Context, ty: Type, size: int) -> list[N.NfTm]:
    """All eta-long normal forms of type ``ty`` under ``ctx`` with exactly
    ``size`` nodes (as counted by :func:`normspace.nf.nf_size`)."""
    return list(_enum_nf(tuple(ctx), ty, size))


def enum_nf_up_to(ctx: Context, ty: Type, max_size: int) -> Iterator[N.NfTm]:
    for s in range(1, max_size + 1):
        yield from _enum_nf(tuple(ctx), ty, s)


@lru_cache(maxsize=None)
def _enum_nf(ctx: Context, ty: Type, size: int) -> tuple[N.NfTm, ...]:
    if size < 1:
        return ()
    if isinstance(ty, Fun):
        dom, cod = normalize_tp(ty.dom), normalize_tp(ty.cod)
        return tuple(N.NfLam(dom, cod, b) for b in _enum_nf((ty.dom, *ctx), ty.cod, size - 1))
    out: list[N.NfTm] = []
    if size == 1:
        out += [N.NfYes(), N.NfNo()]
    out += [N.NfNeO(e) for e in _enum_ne(ctx, ty, size - 1)]
    return tuple(out)


def _enum_ne(ctx: Context, target: Type, size: int) -> list[N.NeTm]:
    out: list[N.NeTm] = []
    depth = len(ctx)
    for i, a in enumerate(ctx):
        level = N.index_to_level(depth, i)
        head: N.NeTm = N.NeVar(normalize_tp(a), level)
        if a == target and size == 1:
            out.append(head)
        args = _spine(a, target)
        if args is None:
            continue
        # head var + one NeApp node per argument
        budget = size - 1 - len(args)
        for parts in _arg_sizes(len(args), budget):
            out.extend(_apply_spine(ctx, head, a, args, parts))
    return out


def _arg_sizes(k: int, total: int) -> Iterator[tuple[int, ...]]:
    if k == 0:
        if total == 0:
            yield ()
        return
    for first in range(1, total - (k - 1) + 1):
        for rest in _arg_sizes(k - 1, total - first):
            yield (first, *rest)


def _apply_spine(
    ctx: Context, head: N.NeTm, head_ty: Type, args: list[Type], sizes: tuple[int, ...]
) -> Iterator[N.NeTm]:
    if not args:
        yield head
        return
    assert isinstance(head_ty, Fun)
    dom, cod = normalize_tp(head_ty.dom), normalize_tp(head_ty.cod)
    for x in _enum_nf(ctx, args[0], sizes[0]):
        yield from _apply_spine(ctx, N.NeApp(dom, cod, head, x), head_ty.cod, args[1:], sizes[1:])


def gen_nf(choose: Chooser, ctx: Context, ty: Type, size: int) -> N.NfTm:
    """A random normal form of type ``ty`` with at most about ``size`` nodes.

    Unlike the enumerator this never materializes the full space, so it
    reaches sizes where enumeration is infeasible.
    """
    if isinstance(ty, Fun):
        body = gen_nf(choose, (ty.dom, *ctx), ty.cod, max(size - 1, 1))
        return N.NfLam(normalize_tp(ty.dom), normalize_tp(ty.cod), body)
    depth = len(ctx)
    heads = []
    for i, a in enumerate(ctx):
        if a == ty:
            heads.append((i, []))
        s = _spine(a, ty)
        if s is not None:
            heads.append((i, s))
    if size <= 1 or not heads or choose(4) == 0:
        if heads and choose(2) == 0:
            plain = [i for i, s in heads if not s]
            if plain:
                i = plain[choose(len(plain))]
                return N.NfNeO(N.NeVar(normalize_tp(ctx[i]), N.index_to_level(depth, i)))
        return N.NfYes() if choose(2) == 0 else N.NfNo()
    i, args = heads[choose(len(heads))]
    a = ctx[i]
    e: N.NeTm = N.NeVar(normalize_tp(a), N.index_to_level(depth, i))
    spare = max(size - 2 - len(args), len(args))
    for b in args:
        assert isinstance(a, Fun)
        share = 1 + choose(max(spare // max(len(args), 1), 1))
        e = N.NeApp(normalize_tp(a.dom), normalize_tp(a.cod), e, gen_nf(choose, ctx, b, share))
        a = a.cod
    return N.NfNeO(e)


__all__ = [
    "Chooser",
    "RandomChooser",
    "all_types",
    "enum_nf",
    "enum_nf_up_to",
    "gen_ctx",
    "gen_nf",
    "gen_term",
    "gen_type",
    "gen_typed_term",
    "min_size",
    "type_depth",
]
