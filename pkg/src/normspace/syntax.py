"""Object-language syntax: simple types over a base type ``O`` with constants
``yes``/``no``, de Bruijn-indexed terms, bidirectional typing, and a one-step
beta reducer used as a testing oracle.

Contexts are tuples of types; position 0 is the most recent binding.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union


# --------------------------------------------------------------------------
# Types


@dataclass(frozen=True, slots=True)
class BaseO:
    def __repr__(self) -> str:
        return "O"


@dataclass(frozen=True, slots=True)
class Fun:
    dom: Type
    cod: Type
    # Exhaustive type enumerations hash the same trees many times.
    _hash: int = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "_hash", hash((Fun, self.dom, self.cod)))

    def __hash__(self) -> int:
        return self._hash


Type = Union[BaseO, Fun]
O = BaseO()

Context = tuple  # tuple[Type, ...], index 0 innermost


def type_depth(a: Type) -> int:
    """Height of a type tree; ``O`` has depth 1."""
    if isinstance(a, Fun):
        return 1 + max(type_depth(a.dom), type_depth(a.cod))
    return 1


def arrows(*tys: Type) -> Type:
    """``arrows(A, B, C)`` is ``A -> B -> C``."""
    out = tys[-1]
    for a in reversed(tys[:-1]):
        out = Fun(a, out)
    return out


# --------------------------------------------------------------------------
# Terms


@dataclass(frozen=True, slots=True)
class Var:
    index: int


@dataclass(frozen=True, slots=True)
class Lam:
    annot: Type
    body: Term


@dataclass(frozen=True, slots=True)
class App:
    fun: Term
    arg: Term


@dataclass(frozen=True, slots=True)
class Yes:
    pass


@dataclass(frozen=True, slots=True)
class No:
    pass


Term = Union[Var, Lam, App, Yes, No]


def term_size(t: Term) -> int:
    match t:
        case Lam(_, body):
            return 1 + term_size(body)
        case App(f, u):
            return 1 + term_size(f) + term_size(u)
        case _:
            return 1


# --------------------------------------------------------------------------
# Typing


class TypingError(Exception):
    pass


class UnboundVariable(TypingError):
    def __init__(self, index: int):
        super().__init__(f"unbound variable #{index}")
        self.index = index


class NotAFunction(TypingError):
    def __init__(self, ty: Type):
        super().__init__(f"not a function: term has type {ty!r}")
        self.ty = ty


class ArgumentMismatch(TypingError):
    def __init__(self, expected: Type, got: Type):
        super().__init__(f"argument mismatch: expected {expected!r}, got {got!r}")
        self.expected = expected
        self.got = got


class TypeMismatch(TypingError):
    def __init__(self, expected: Type, inferred: Type):
        super().__init__(f"type mismatch: expected {expected!r}, inferred {inferred!r}")
        self.expected = expected
        self.inferred = inferred


def infer(ctx: Context, t: Term) -> Type:
    match t:
        case Yes() | No():
            return O
        case Var(i):
            if not 0 <= i < len(ctx):
                raise UnboundVariable(i)
            return ctx[i]
        case Lam(a, body):
            return Fun(a, infer((a, *ctx), body))
        case App(f, u):
            tf = infer(ctx, f)
            if not isinstance(tf, Fun):
                raise NotAFunction(tf)
            tu = infer(ctx, u)
            if tu != tf.dom:
                raise ArgumentMismatch(tf.dom, tu)
            return tf.cod
    raise TypeError(f"not a term: {t!r}")


def check(ctx: Context, t: Term, a: Type) -> None:
    got = infer(ctx, t)
    if got != a:
        raise TypeMismatch(a, got)


# --------------------------------------------------------------------------
# Shifting and substitution


def shift(t: Term, by: int, cutoff: int = 0) -> Term:
    """Add ``by`` to every free index ``>= cutoff``."""
    match t:
        case Var(k):
            return Var(k + by) if k >= cutoff else t
        case Lam(a, body):
            return Lam(a, shift(body, by, cutoff + 1))
        case App(f, u):
            return App(shift(f, by, cutoff), shift(u, by, cutoff))
        case _:
            return t


def subst(t: Term, index: int, s: Term) -> Term:
    """Replace ``Var(index)`` by ``s`` in ``t``; other indices are untouched.

    ``s`` is shifted as it passes under binders, so its free variables are
    never captured.
    """
    match t:
        case Var(k):
            return s if k == index else t
        case Lam(a, body):
            return Lam(a, subst(body, index + 1, shift(s, 1)))
        case App(f, u):
            return App(subst(f, index, s), subst(u, index, s))
        case _:
            return t


def instantiate(body: Term, arg: Term) -> Term:
    """Contract ``App(Lam(A, body), arg)``: drop the binder of ``body``."""
    return shift(subst(body, 0, shift(arg, 1)), -1)


def beta_reducts(t: Term) -> list[Term]:
    """All one-step beta reducts of ``t``, in a fixed positional order."""
    match t:
        case App(f, u):
            out = []
            if isinstance(f, Lam):
                out.append(instantiate(f.body, u))
            out.extend(App(f2, u) for f2 in beta_reducts(f))
            out.extend(App(f, u2) for u2 in beta_reducts(u))
            return out
        case Lam(a, body):
            return [Lam(a, b2) for b2 in beta_reducts(body)]
        case _:
            return []


def step_beta(t: Term) -> frozenset[Term]:
    return frozenset(beta_reducts(t))


def beta_normalize(t: Term, max_steps: int | None = None) -> Term:
    """Reduce by repeatedly contracting the first redex until none remain.

    Only for testing; relies on strong normalization of well-typed terms.
    """
    steps = 0
    while True:
        nxt = beta_reducts(t)
        if not nxt:
            return t
        t = nxt[0]
        steps += 1
        if max_steps is not None and steps > max_steps:
            raise RuntimeError(f"no beta normal form within {max_steps} steps")
