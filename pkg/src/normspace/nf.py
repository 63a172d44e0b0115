"""Normal forms of types and terms, erasure back to syntax, and a validator
for the well-formedness discipline the constructors do not enforce by
themselves.

Neutral variables are named by de Bruijn *levels* (0 = outermost binding);
erasure converts them to indices against the ambient context.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Optional, Union

from .syntax import O, App, Context, Fun, Lam, No, Term, Type, Var, Yes


# --------------------------------------------------------------------------
# Normal types


@dataclass(frozen=True, slots=True)
class NfO:
    def __repr__(self) -> str:
        return "NfO"


@dataclass(frozen=True, slots=True)
class NfFun:
    dom: NfTp
    cod: NfTp
    _hash: int = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "_hash", hash((NfFun, self.dom, self.cod)))

    def __hash__(self) -> int:
        return self._hash


NfTp = Union[NfO, NfFun]
NF_O = NfO()


# --------------------------------------------------------------------------
# Neutral and normal terms


@dataclass(frozen=True, slots=True)
class NeVar:
    ty: NfTp
    level: int


@dataclass(frozen=True, slots=True)
class NeApp:
    dom: NfTp
    cod: NfTp
    fun: NeTm
    arg: NfTm


@dataclass(frozen=True, slots=True)
class NfNeO:
    neutral: NeTm


@dataclass(frozen=True, slots=True)
class NfYes:
    def __repr__(self) -> str:
        return "NfYes"


@dataclass(frozen=True, slots=True)
class NfNo:
    def __repr__(self) -> str:
        return "NfNo"


@dataclass(frozen=True, slots=True)
class NfLam:
    dom: NfTp
    cod: NfTp
    body: NfTm


NeTm = Union[NeVar, NeApp]
NfTm = Union[NfNeO, NfYes, NfNo, NfLam]


def nf_size(n: NfTm | NeTm) -> int:
    """Node count, ignoring type annotations."""
    match n:
        case NfNeO(e):
            return 1 + nf_size(e)
        case NfLam(_, _, body):
            return 1 + nf_size(body)
        case NeApp(_, _, f, x):
            return 1 + nf_size(f) + nf_size(x)
        case _:
            return 1


# --------------------------------------------------------------------------
# Erasure


class LevelOutOfRange(Exception):
    def __init__(self, level: int, depth: int):
        super().__init__(f"level {level} out of range for context of length {depth}")
        self.level = level
        self.depth = depth


def level_to_index(depth: int, level: int) -> int:
    return depth - 1 - level


def index_to_level(depth: int, index: int) -> int:
    return depth - 1 - index


def erase_nftp(n: NfTp) -> Type:
    if isinstance(n, NfFun):
        return Fun(erase_nftp(n.dom), erase_nftp(n.cod))
    return O


def _erase_ne(depth: int, e: NeTm) -> Term:
    match e:
        case NeVar(_, level):
            if not 0 <= level < depth:
                raise LevelOutOfRange(level, depth)
            return Var(level_to_index(depth, level))
        case NeApp(_, _, f, x):
            return App(_erase_ne(depth, f), _erase_nf(depth, x))
    raise TypeError(f"not a neutral: {e!r}")


def _erase_nf(depth: int, n: NfTm) -> Term:
    match n:
        case NfYes():
            return Yes()
        case NfNo():
            return No()
        case NfNeO(e):
            return _erase_ne(depth, e)
        case NfLam(dom, _, body):
            return Lam(erase_nftp(dom), _erase_nf(depth + 1, body))
    raise TypeError(f"not a normal form: {n!r}")


def erase_nftm(ctx: Context, n: NfTm) -> Term:
    return _erase_nf(len(ctx), n)


def erase_netm(ctx: Context, e: NeTm) -> Term:
    return _erase_ne(len(ctx), e)


def decompose_fun(n: NfTp) -> Optional[tuple[NfTp, NfTp]]:
    if isinstance(n, NfFun):
        return n.dom, n.cod
    return None


# --------------------------------------------------------------------------
# Well-formedness


class IllFormedNormal(Exception):
    def __init__(self, path: tuple[str, ...], reason: str):
        where = "/".join(path) or "<root>"
        super().__init__(f"{where}: {reason}")
        self.path = path
        self.reason = reason


def _infer_ne(ctx: Context, e: NeTm, path: tuple[str, ...]) -> NfTp:
    match e:
        case NeVar(ty, level):
            if not 0 <= level < len(ctx):
                raise IllFormedNormal(path, f"level {level} unbound in context of length {len(ctx)}")
            declared = ctx[level_to_index(len(ctx), level)]
            if erase_nftp(ty) != declared:
                raise IllFormedNormal(path, f"variable annotated {ty!r} but bound at {declared!r}")
            return ty
        case NeApp(dom, cod, f, x):
            head = _infer_ne(ctx, f, path + ("fun",))
            if head != NfFun(dom, cod):
                raise IllFormedNormal(path, f"head has type {head!r}, annotation says {NfFun(dom, cod)!r}")
            _validate(ctx, erase_nftp(dom), x, path + ("arg",))
            return cod
    raise IllFormedNormal(path, f"not a neutral: {e!r}")


def _validate(ctx: Context, ty: Type, n: NfTm, path: tuple[str, ...]) -> None:
    match n:
        case NfLam(dom, cod, body):
            if not isinstance(ty, Fun):
                raise IllFormedNormal(path, f"abstraction at non-function type {ty!r}")
            if erase_nftp(dom) != ty.dom or erase_nftp(cod) != ty.cod:
                raise IllFormedNormal(path, f"abstraction annotated {NfFun(dom, cod)!r} at type {ty!r}")
            _validate((ty.dom, *ctx), ty.cod, body, path + ("body",))
        case _ if isinstance(ty, Fun):
            raise IllFormedNormal(path, f"not eta-long: {type(n).__name__} at function type {ty!r}")
        case NfYes() | NfNo():
            pass
        case NfNeO(e):
            got = _infer_ne(ctx, e, path + ("neutral",))
            if got != NF_O:
                raise IllFormedNormal(path, f"nfNeO wraps a neutral of type {got!r}")
        case _:
            raise IllFormedNormal(path, f"not a normal form: {n!r}")


def validate_nf(ctx: Context, ty: Type, n: NfTm) -> None:
    """Raise :class:`IllFormedNormal` unless ``n`` is an eta-long normal form
    of type ``ty`` under ``ctx``."""
    _validate(ctx, ty, n, ())


def is_valid_nf(ctx: Context, ty: Type, n: NfTm) -> bool:
    try:
        validate_nf(ctx, ty, n)
    except IllFormedNormal:
        return False
    return True


# --------------------------------------------------------------------------
# JSON trees, tagged by constructor name


def nftp_to_json(n: NfTp) -> dict[str, Any]:
    if isinstance(n, NfFun):
        return {"con": "nfFun", "dom": nftp_to_json(n.dom), "cod": nftp_to_json(n.cod)}
    return {"con": "nfO"}


def nf_to_json(n: NfTm | NeTm) -> dict[str, Any]:
    match n:
        case NfYes():
            return {"con": "nfYes"}
        case NfNo():
            return {"con": "nfNo"}
        case NfNeO(e):
            return {"con": "nfNeO", "neutral": nf_to_json(e)}
        case NfLam(dom, cod, body):
            return {
                "con": "nfLam",
                "dom": nftp_to_json(dom),
                "cod": nftp_to_json(cod),
                "body": nf_to_json(body),
            }
        case NeVar(ty, level):
            return {"con": "neVar", "ty": nftp_to_json(ty), "level": level}
        case NeApp(dom, cod, f, x):
            return {
                "con": "neApp",
                "dom": nftp_to_json(dom),
                "cod": nftp_to_json(cod),
                "fun": nf_to_json(f),
                "arg": nf_to_json(x),
            }
    raise TypeError(f"not a normal form: {n!r}")


def nftp_from_json(obj: dict[str, Any]) -> NfTp:
    con = obj.get("con")
    if con == "nfO":
        return NF_O
    if con == "nfFun":
        return NfFun(nftp_from_json(obj["dom"]), nftp_from_json(obj["cod"]))
    raise ValueError(f"bad normal type tag: {con!r}")


def nf_from_json(obj: dict[str, Any]) -> NfTm | NeTm:
    con = obj.get("con")
    if con == "nfYes":
        return NfYes()
    if con == "nfNo":
        return NfNo()
    if con == "nfNeO":
        return NfNeO(nf_from_json(obj["neutral"]))
    if con == "nfLam":
        return NfLam(nftp_from_json(obj["dom"]), nftp_from_json(obj["cod"]), nf_from_json(obj["body"]))
    if con == "neVar":
        level = obj["level"]
        if not isinstance(level, int) or level < 0:
            raise ValueError(f"bad level: {level!r}")
        return NeVar(nftp_from_json(obj["ty"]), level)
    if con == "neApp":
        return NeApp(
            nftp_from_json(obj["dom"]),
            nftp_from_json(obj["cod"]),
            nf_from_json(obj["fun"]),
            nf_from_json(obj["arg"]),
        )
    raise ValueError(f"bad normal form tag: {con!r}")
