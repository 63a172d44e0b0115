"""Free monoids: expressions modulo the monoid laws, decided by evaluating
into lists.

Lists are plain tuples of generator symbols. ``retract_p`` maps a list back
to a right-nested expression; ``eval_expr(retract_p(m)) == m`` is what makes
injectivity of ``cons`` on lists transfer to expressions.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from typing import Iterator, Sequence, Union

DEFAULT_ALPHABET = ("a", "b", "c")


@dataclass(frozen=True, slots=True)
class Gen:
    a: str


@dataclass(frozen=True, slots=True)
class Eps:
    pass


@dataclass(frozen=True, slots=True)
class Mu:
    left: MonExpr
    right: MonExpr


MonExpr = Union[Gen, Eps, Mu]
FreeList = tuple  # tuple[str, ...]


def list_eta(a: str) -> FreeList:
    return (a,)


def list_eps() -> FreeList:
    return ()


def list_mu(m: FreeList, n: FreeList) -> FreeList:
    # mu([], n) = n ; mu(a : m, n) = a : mu(m, n)
    return tuple(m) + tuple(n)


def cons(a: str, m: FreeList) -> FreeList:
    return (a, *m)


def eval_expr(e: MonExpr) -> FreeList:
    match e:
        case Gen(a):
            return list_eta(a)
        case Eps():
            return list_eps()
        case Mu(u, v):
            return list_mu(eval_expr(u), eval_expr(v))
    raise TypeError(f"not a monoid expression: {e!r}")


def retract_p(m: FreeList) -> MonExpr:
    out: MonExpr = Eps()
    for a in reversed(m):
        out = Mu(Gen(a), out)
    return out


def expr_eq(u: MonExpr, v: MonExpr) -> bool:
    return eval_expr(u) == eval_expr(v)


def expr_size(e: MonExpr) -> int:
    if isinstance(e, Mu):
        return 1 + expr_size(e.left) + expr_size(e.right)
    return 1


# --------------------------------------------------------------------------
# Enumeration


def all_lists(alphabet: Sequence[str], max_len: int) -> Iterator[FreeList]:
    for n in range(max_len + 1):
        yield from itertools.product(alphabet, repeat=n)


def exprs_of_size(alphabet: Sequence[str], size: int) -> list[MonExpr]:
    """All expressions with exactly ``size`` nodes."""
    return list(_exprs_of_size(tuple(alphabet), size))


def _exprs_of_size(alphabet: tuple[str, ...], size: int) -> Iterator[MonExpr]:
    if size == 1:
        yield Eps()
        for a in alphabet:
            yield Gen(a)
        return
    for left in range(1, size - 1):
        right = size - 1 - left
        for u in _exprs_of_size(alphabet, left):
            for v in _exprs_of_size(alphabet, right):
                yield Mu(u, v)


def exprs_up_to(alphabet: Sequence[str], max_size: int) -> list[MonExpr]:
    out: list[MonExpr] = []
    for s in range(1, max_size + 1):
        out.extend(exprs_of_size(alphabet, s))
    return out


# --------------------------------------------------------------------------
# Rewrite-closure oracle
#
# Independent of eval_expr: explores the congruence generated by the unit and
# associativity laws, applied in both directions at every position, keeping
# only expressions within the size bound. Expressions are encoded as nested
# tuples internally: ("g", a), ("e",), ("m", l, r).

_E = ("e",)


def _encode(e: MonExpr) -> tuple:
    match e:
        case Gen(a):
            return ("g", a)
        case Eps():
            return _E
        case Mu(u, v):
            return ("m", _encode(u), _encode(v))
    raise TypeError(f"not a monoid expression: {e!r}")


def _decode(t: tuple) -> MonExpr:
    if t[0] == "g":
        return Gen(t[1])
    if t[0] == "e":
        return Eps()
    return Mu(_decode(t[1]), _decode(t[2]))


def _size(t: tuple) -> int:
    if t[0] == "m":
        return 1 + _size(t[1]) + _size(t[2])
    return 1


def _root_rewrites(t: tuple) -> Iterator[tuple]:
    # unit laws, introduced at any node
    yield ("m", _E, t)
    yield ("m", t, _E)
    if t[0] == "m":
        _, l, r = t
        if l == _E:
            yield r
        if r == _E:
            yield l
        if l[0] == "m":
            yield ("m", l[1], ("m", l[2], r))
        if r[0] == "m":
            yield ("m", ("m", l, r[1]), r[2])


def _one_step(t: tuple) -> Iterator[tuple]:
    yield from _root_rewrites(t)
    if t[0] == "m":
        _, l, r = t
        for l2 in _one_step(l):
            yield ("m", l2, r)
        for r2 in _one_step(r):
            yield ("m", l, r2)


def _closure(start: tuple, bound: int) -> frozenset:
    seen = {start}
    todo = deque([start])
    while todo:
        t = todo.popleft()
        for t2 in _one_step(t):
            if t2 not in seen and _size(t2) <= bound:
                seen.add(t2)
                todo.append(t2)
    return frozenset(seen)


def rewrite_closure_oracle(u: MonExpr, bound: int) -> set[MonExpr]:
    """Every expression of size at most ``bound`` reachable from ``u`` by the
    monoid laws used as two-way rewrite rules at any subterm."""
    if bound < expr_size(u):
        raise ValueError("bound must be at least the size of the start expression")
    return {_decode(t) for t in _closure(_encode(u), bound)}


class ClosureOracle:
    """Memoizing wrapper for pairwise queries.

    Bounded reachability is symmetric (every rule runs both ways), so one
    closure answers queries for every expression it contains.
    """

    def __init__(self) -> None:
        self._components: dict[int, list[frozenset]] = {}

    def reachable(self, u: MonExpr, v: MonExpr, bound: int) -> bool:
        tu, tv = _encode(u), _encode(v)
        if _size(tv) > bound:
            return False
        comps = self._components.setdefault(bound, [])
        for comp in comps:
            if tu in comp:
                return tv in comp
        comp = _closure(tu, bound)
        comps.append(comp)
        return tv in comp


# --------------------------------------------------------------------------
# Prefix text form: (mu (gen a) eps)


class MonoidSyntaxError(ValueError):
    def __init__(self, pos: int, message: str):
        super().__init__(f"at offset {pos}: {message}")
        self.pos = pos
        self.message = message


def _tokens(src: str) -> list[tuple[str, int]]:
    out = []
    i = 0
    while i < len(src):
        c = src[i]
        if c.isspace():
            i += 1
        elif c in "()":
            out.append((c, i))
            i += 1
        else:
            j = i
            while j < len(src) and not src[j].isspace() and src[j] not in "()":
                j += 1
            out.append((src[i:j], i))
            i = j
    return out


def parse_mon(src: str) -> MonExpr:
    toks = _tokens(src)
    pos = 0

    def peek() -> tuple[str, int]:
        return toks[pos] if pos < len(toks) else ("", len(src))

    def take(expected: str | None = None) -> tuple[str, int]:
        nonlocal pos
        tok = peek()
        if not tok[0]:
            raise MonoidSyntaxError(tok[1], "unexpected end of input")
        if expected is not None and tok[0] != expected:
            raise MonoidSyntaxError(tok[1], f"expected {expected!r}, found {tok[0]!r}")
        pos += 1
        return tok

    def expr() -> MonExpr:
        tok, at = take()
        if tok == "eps":
            return Eps()
        if tok != "(":
            raise MonoidSyntaxError(at, f"unexpected {tok!r}")
        head, at = take()
        if head == "eps":
            out: MonExpr = Eps()
        elif head == "gen":
            sym, at = take()
            if not sym.isidentifier() or sym in ("gen", "mu", "eps"):
                raise MonoidSyntaxError(at, f"bad generator {sym!r}")
            out = Gen(sym)
        elif head == "mu":
            left = expr()
            out = Mu(left, expr())
        else:
            raise MonoidSyntaxError(at, f"unknown form {head!r}")
        take(")")
        return out

    e = expr()
    if pos != len(toks):
        raise MonoidSyntaxError(toks[pos][1], "trailing input")
    return e


def print_mon(e: MonExpr) -> str:
    match e:
        case Gen(a):
            return f"(gen {a})"
        case Eps():
            return "eps"
        case Mu(u, v):
            return f"(mu {print_mon(u)} {print_mon(v)})"
    raise TypeError(f"not a monoid expression: {e!r}")


def print_list(m: FreeList) -> str:
    return "[" + ", ".join(m) + "]"
