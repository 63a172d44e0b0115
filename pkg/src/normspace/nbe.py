"""Normalization by evaluation.

Every object type is interpreted as a semantic type that knows how to
*reflect* neutral terms into values and *reify* values back into eta-long
normal forms. Values at ``O`` are normal forms at ``O``; values at arrow
types are closures, either from evaluating a lambda or from reflecting a
neutral head.

Fresh variables are de Bruijn levels, so reification needs to know how many
variables are in scope. Applying a reflected neutral to a function-typed
argument therefore cannot build the argument's normal form on the spot: the
spine keeps the argument as a value (:class:`SemApp`) and it is reified only
when the enclosing neutral is read back, at the depth where it actually
lands. Arguments at ``O`` are already normal and are stored directly.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Union

from . import nf as N
from .nf import NeApp, NeTm, NeVar, NfFun, NfLam, NfNeO, NfNo, NfTm, NfTp, NfYes
from .syntax import App, Context, Fun, Lam, No, Term, Type, Var, Yes, check


# --------------------------------------------------------------------------
# Semantic types


@dataclass(frozen=True, slots=True)
class SO:
    def __repr__(self) -> str:
        return "SO"


@dataclass(frozen=True, slots=True)
class SFun:
    dom: SemType
    cod: SemType


SemType = Union[SO, SFun]
S_O = SO()


@lru_cache(maxsize=4096)
def sem_of_type(a: Type) -> SemType:
    if isinstance(a, Fun):
        return SFun(sem_of_type(a.dom), sem_of_type(a.cod))
    return S_O


@lru_cache(maxsize=4096)
def sem_to_nftp(s: SemType) -> NfTp:
    if isinstance(s, SFun):
        return NfFun(sem_to_nftp(s.dom), sem_to_nftp(s.cod))
    return N.NF_O


@lru_cache(maxsize=4096)
def normalize_tp(a: Type) -> NfTp:
    if isinstance(a, Fun):
        return NfFun(normalize_tp(a.dom), normalize_tp(a.cod))
    return N.NF_O


# --------------------------------------------------------------------------
# Values


@dataclass(frozen=True, slots=True)
class VO:
    nf: NfTm


@dataclass(frozen=True, slots=True)
class VNe:
    """A stuck value at ``O`` whose spine still holds unreified arguments."""

    neutral: SemApp


@dataclass(frozen=True, slots=True)
class VFun:
    closure: Closure


@dataclass(frozen=True, slots=True)
class TermClosure:
    env: Env
    annot: SemType
    body: Term


@dataclass(frozen=True, slots=True)
class NeutralClosure:
    dom: SemType
    cod: SemType
    head: SemNe


@dataclass(frozen=True, slots=True)
class SemApp:
    dom: SemType
    cod: SemType
    head: SemNe
    arg: Value


Value = Union[VO, VNe, VFun]
Closure = Union[TermClosure, NeutralClosure]
SemNe = Union[NeTm, SemApp]
Env = tuple  # tuple[Value, ...], position i holds Var i


class NotApplicable(Exception):
    pass


# --------------------------------------------------------------------------
# Evaluation


def eval(env: Env, t: Term) -> Value:  # noqa: A001
    match t:
        case Yes():
            return VO(NfYes())
        case No():
            return VO(NfNo())
        case Var(i):
            return env[i]
        case Lam(a, body):
            return VFun(TermClosure(env, sem_of_type(a), body))
        case App(f, u):
            return apply(eval(env, f), eval(env, u))
    raise TypeError(f"not a term: {t!r}")


def apply(f: Value, u: Value) -> Value:
    if not isinstance(f, VFun):
        raise NotApplicable(f"cannot apply {f!r}")
    match f.closure:
        case TermClosure(env, _, body):
            return eval((u, *env), body)
        case NeutralClosure(dom, cod, head):
            if isinstance(u, VO) and not isinstance(head, SemApp):
                e = NeApp(sem_to_nftp(dom), sem_to_nftp(cod), head, u.nf)
            else:
                e = SemApp(dom, cod, head, u)
            return reflect(cod, e)
    raise TypeError(f"not a closure: {f.closure!r}")


def reflect(a: SemType, e: SemNe) -> Value:
    if isinstance(a, SFun):
        return VFun(NeutralClosure(a.dom, a.cod, e))
    if isinstance(e, SemApp):
        return VNe(e)
    return VO(NfNeO(e))


def reify(depth: int, a: SemType, v: Value) -> NfTm:
    if isinstance(a, SFun):
        x = hydrate(a.dom, depth)
        body = reify(depth + 1, a.cod, apply(v, x))
        return NfLam(sem_to_nftp(a.dom), sem_to_nftp(a.cod), body)
    match v:
        case VO(n):
            return n
        case VNe(e):
            return NfNeO(readback_ne(depth, e))
    raise TypeError(f"value {v!r} does not inhabit the base type")


def readback_ne(depth: int, e: SemNe) -> NeTm:
    if isinstance(e, SemApp):
        return NeApp(
            sem_to_nftp(e.dom),
            sem_to_nftp(e.cod),
            readback_ne(depth, e.head),
            reify(depth, e.dom, e.arg),
        )
    return e


def hydrate(a: SemType, level: int) -> Value:
    return reflect(a, NeVar(sem_to_nftp(a), level))


def initial_env(ctx: Context) -> Env:
    n = len(ctx)
    return tuple(hydrate(sem_of_type(a), n - 1 - i) for i, a in enumerate(ctx))


# --------------------------------------------------------------------------
# Normalization and conversion


def normalize(ctx: Context, a: Type, t: Term) -> NfTm:
    """Eta-long beta-normal form of ``t``; assumes ``ctx |- t : a``."""
    return reify(len(ctx), sem_of_type(a), eval(initial_env(ctx), t))


def conv(ctx: Context, a: Type, t: Term, u: Term) -> bool:
    """Decide beta-eta equality of two terms of type ``a``."""
    check(ctx, t, a)
    check(ctx, u, a)
    return normalize(ctx, a, t) == normalize(ctx, a, u)


@dataclass(frozen=True, slots=True)
class EqualWithComponents:
    dom: NfTp
    cod: NfTp


@dataclass(frozen=True, slots=True)
class Unequal:
    pass


Injectivity = Union[EqualWithComponents, Unequal]


_nf_arrow = lru_cache(maxsize=65536)(NfFun)


def fun_tp_injective(a: Type, b: Type, a2: Type, b2: Type) -> Injectivity:
    """Compare ``a -> b`` with ``a2 -> b2`` through their normal forms and,
    when they agree, recover the components from the normal form alone."""
    # normalize_tp(Fun(a, b)), assembled from the cached components so the
    # result is shared and differing normal forms are told apart by hash
    n = _nf_arrow(normalize_tp(a), normalize_tp(b))
    n2 = _nf_arrow(normalize_tp(a2), normalize_tp(b2))
    if hash(n) != hash(n2) or n != n2:
        return Unequal()
    parts: Optional[tuple[NfTp, NfTp]] = N.decompose_fun(n)
    assert parts is not None
    return EqualWithComponents(*parts)
