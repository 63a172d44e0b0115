"""Concrete syntax.

    type ::= "O" | type "->" type | "(" type ")"          (-> is right-assoc)
    term ::= "yes" | "no" | ident | "\\" ident ":" type "." term
           | term term | "(" term ")"

Application is left-associative and a lambda body extends as far right as
possible, so a lambda may appear unparenthesized as the last argument of an
application (``f \\x:O. x``). The printer emits exactly the parentheses this
parser needs.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Sequence, Union

from . import nf as N
from .syntax import O, App, Fun, Lam, No, Term, Type, Var, Yes

KEYWORDS = frozenset({"yes", "no", "O"})


@dataclass(frozen=True)
class SourceSpan:
    start: int
    end: int


class ParseError(Exception):
    def __init__(self, span: SourceSpan, message: str):
        super().__init__(f"{span.start}-{span.end}: {message}")
        self.span = span
        self.message = message


class UnknownIdentifier(Exception):
    def __init__(self, name: str, span: SourceSpan):
        super().__init__(f"{span.start}-{span.end}: unknown identifier {name!r}")
        self.name = name
        self.span = span


# --------------------------------------------------------------------------
# Named terms (parser output, before de Bruijn resolution)


@dataclass(frozen=True)
class NVar:
    name: str
    span: SourceSpan


@dataclass(frozen=True)
class NLam:
    name: str
    annot: Type
    body: NamedTerm


@dataclass(frozen=True)
class NApp:
    fun: NamedTerm
    arg: NamedTerm


@dataclass(frozen=True)
class NYes:
    pass


@dataclass(frozen=True)
class NNo:
    pass


NamedTerm = Union[NVar, NLam, NApp, NYes, NNo]


# --------------------------------------------------------------------------
# Lexer

_TOKEN = re.compile(
    r"(?P<ws>\s+)|(?P<arrow>->)|(?P<ident>[A-Za-z][A-Za-z0-9_]*)|(?P<punct>[\\:.()=])"
)


@dataclass(frozen=True)
class Token:
    kind: str  # "ident", "yes", "no", "O", or the punctuation itself; "eof" at end
    text: str
    span: SourceSpan


def tokenize(src: str) -> list[Token]:
    out = []
    pos = 0
    while pos < len(src):
        m = _TOKEN.match(src, pos)
        if m is None:
            raise ParseError(SourceSpan(pos, pos + 1), f"unexpected character {src[pos]!r}")
        text = m.group()
        span = SourceSpan(pos, m.end())
        if m.lastgroup == "ident":
            out.append(Token(text if text in KEYWORDS else "ident", text, span))
        elif m.lastgroup != "ws":
            out.append(Token(text, text, span))
        pos = m.end()
    out.append(Token("eof", "", SourceSpan(len(src), len(src))))
    return out


# --------------------------------------------------------------------------
# Parser


class Parser:
    """Recursive-descent parser over a token list; the CLI drives it directly
    to read directives that mix terms and types on one line."""

    def __init__(self, src: str):
        self.src = src
        self.toks = tokenize(src)
        self.pos = 0

    @property
    def peek(self) -> Token:
        return self.toks[self.pos]

    def at(self, kind: str) -> bool:
        return self.peek.kind == kind

    def advance(self) -> Token:
        tok = self.toks[self.pos]
        if tok.kind != "eof":
            self.pos += 1
        return tok

    def expect(self, kind: str) -> Token:
        tok = self.peek
        if tok.kind != kind:
            found = "end of input" if tok.kind == "eof" else repr(tok.text)
            raise ParseError(tok.span, f"expected {kind!r}, found {found}")
        return self.advance()

    def end(self) -> None:
        if not self.at("eof"):
            raise ParseError(self.peek.span, f"unexpected {self.peek.text!r}")

    # types

    def type(self) -> Type:
        dom = self._type_atom()
        if self.at("->"):
            self.advance()
            return Fun(dom, self.type())
        return dom

    def _type_atom(self) -> Type:
        tok = self.peek
        if tok.kind == "O":
            self.advance()
            return O
        if tok.kind == "(":
            self.advance()
            a = self.type()
            self.expect(")")
            return a
        found = "end of input" if tok.kind == "eof" else repr(tok.text)
        raise ParseError(tok.span, f"expected a type, found {found}")

    # terms

    _ATOM_START = frozenset({"ident", "yes", "no", "("})

    def term(self) -> NamedTerm:
        if self.at("\\"):
            return self._lambda()
        t = self._atom()
        while True:
            if self.peek.kind in self._ATOM_START:
                t = NApp(t, self._atom())
            elif self.at("\\"):
                return NApp(t, self._lambda())
            else:
                return t

    def _lambda(self) -> NamedTerm:
        self.expect("\\")
        name = self.expect("ident").text
        self.expect(":")
        annot = self.type()
        self.expect(".")
        return NLam(name, annot, self.term())

    def _atom(self) -> NamedTerm:
        tok = self.peek
        if tok.kind == "yes":
            self.advance()
            return NYes()
        if tok.kind == "no":
            self.advance()
            return NNo()
        if tok.kind == "ident":
            self.advance()
            return NVar(tok.text, tok.span)
        if tok.kind == "(":
            self.advance()
            t = self.term()
            self.expect(")")
            return t
        found = "end of input" if tok.kind == "eof" else repr(tok.text)
        raise ParseError(tok.span, f"expected a term, found {found}")


def parse_type(src: str) -> Type:
    p = Parser(src)
    a = p.type()
    p.end()
    return a


def parse_term(src: str) -> NamedTerm:
    p = Parser(src)
    t = p.term()
    p.end()
    return t


def resolve(t: NamedTerm, names: Sequence[str] = ()) -> Term:
    """Replace names by de Bruijn indices; ``names[0]`` is the innermost."""
    match t:
        case NVar(name, span):
            for i, n in enumerate(names):
                if n == name:
                    return Var(i)
            raise UnknownIdentifier(name, span)
        case NLam(name, annot, body):
            return Lam(annot, resolve(body, (name, *names)))
        case NApp(f, u):
            return App(resolve(f, names), resolve(u, names))
        case NYes():
            return Yes()
        case NNo():
            return No()
    raise TypeError(f"not a named term: {t!r}")


def read_term(src: str, names: Sequence[str] = ()) -> Term:
    return resolve(parse_term(src), tuple(names))


# --------------------------------------------------------------------------
# Printer


def print_type(a: Type) -> str:
    if isinstance(a, Fun):
        dom = print_type(a.dom)
        if isinstance(a.dom, Fun):
            dom = f"({dom})"
        return f"{dom} -> {print_type(a.cod)}"
    return "O"


def print_nftp(n: N.NfTp) -> str:
    return print_type(N.erase_nftp(n))


def fresh_name(names: Sequence[str], base: str = "x") -> str:
    taken = set(names)
    if base not in taken:
        return base
    k = 1
    while f"{base}{k}" in taken:
        k += 1
    return f"{base}{k}"


def print_term(names: Sequence[str], t: Term) -> str:
    return _print(tuple(names), t, tail=True)


def _print(names: tuple[str, ...], t: Term, tail: bool) -> str:
    # tail: nothing follows this term in its enclosing application, so a
    # trailing lambda needs no parentheses.
    match t:
        case Yes():
            return "yes"
        case No():
            return "no"
        case Var(i):
            if not 0 <= i < len(names):
                raise ValueError(f"variable #{i} not in scope of {len(names)} names")
            return names[i]
        case Lam(a, body):
            x = fresh_name(names)
            s = f"\\{x}:{print_type(a)}. {_print((x, *names), body, True)}"
            return s if tail else f"({s})"
        case App(f, u):
            head = _print(names, f, False)
            if isinstance(u, App):
                arg = f"({_print(names, u, True)})"
            else:
                arg = _print(names, u, tail)
            return f"{head} {arg}"
    raise TypeError(f"not a term: {t!r}")


def print_nf(names: Sequence[str], n: N.NfTm) -> str:
    names = tuple(names)
    return print_term(names, N.erase_nftm(names, n))
