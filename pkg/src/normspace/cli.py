"""Batch driver.

A script holds one directive per line; ``#`` starts a comment::

    assume f : O -> O
    norm (\\z:O. z) yes : O            --expect yes
    conv f = \\x:O. f x : O -> O        --expect true
    injtp (O -> O) = (O -> O)          --expect equal O, O
    moneq (mu (gen a) eps) = (gen a)   --expect true
    monnorm (mu (gen a) (gen b))       --expect [a, b]

A directive with ``--expect`` fails the run when its printed outcome differs
from the expected text.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Optional, Sequence, Union

from . import monoid as M
from . import nbe
from .nf import nf_to_json, nftp_to_json
from .surface import (
    NamedTerm,
    ParseError,
    Parser,
    UnknownIdentifier,
    print_nf,
    print_nftp,
    print_type,
    resolve,
)
from .syntax import Fun, Type, TypingError, check


class ScriptParseError(Exception):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line
        self.message = message


class DirectiveTypeError(Exception):
    def __init__(self, line: int, detail: str):
        super().__init__(f"line {line}: {detail}")
        self.line = line
        self.detail = detail


# --------------------------------------------------------------------------
# Directives


@dataclass(frozen=True)
class Assume:
    name: str
    ty: Type


@dataclass(frozen=True)
class Norm:
    term: NamedTerm
    ty: Type


@dataclass(frozen=True)
class Conv:
    left: NamedTerm
    right: NamedTerm
    ty: Type


@dataclass(frozen=True)
class InjTp:
    left: Type
    right: Type


@dataclass(frozen=True)
class MonEq:
    left: M.MonExpr
    right: M.MonExpr


@dataclass(frozen=True)
class MonNorm:
    expr: M.MonExpr


Directive = Union[Assume, Norm, Conv, InjTp, MonEq, MonNorm]
MONOID_DIRECTIVES = (MonEq, MonNorm)

_EXPECT = re.compile(r"(?:^|\s)--expect(?:\s+(.*?))?\s*$")
_KEYWORD = re.compile(r"\s*([a-z]+)\b\s*(.*)$", re.S)


def split_expect(text: str) -> tuple[str, Optional[str]]:
    m = _EXPECT.search(text)
    if m is None:
        return text.strip(), None
    return text[: m.start()].strip(), (m.group(1) or "").strip()


def parse_directive(text: str) -> Directive:
    """Parse one directive (without comment or ``--expect`` suffix).

    Raises :class:`ParseError` or :class:`ValueError` on malformed input.
    """
    m = _KEYWORD.match(text)
    if m is None:
        raise ValueError("expected a directive keyword")
    kw, rest = m.group(1), m.group(2)
    if kw in ("moneq", "monnorm"):
        if kw == "monnorm":
            return MonNorm(M.parse_mon(rest))
        left, sep, right = rest.partition("=")
        if not sep:
            raise ValueError("moneq needs '<expr> = <expr>'")
        return MonEq(M.parse_mon(left), M.parse_mon(right))

    p = Parser(rest)
    if kw == "assume":
        name = p.expect("ident").text
        p.expect(":")
        ty = p.type()
        p.end()
        return Assume(name, ty)
    if kw == "norm":
        t = p.term()
        p.expect(":")
        ty = p.type()
        p.end()
        return Norm(t, ty)
    if kw == "conv":
        t = p.term()
        p.expect("=")
        u = p.term()
        p.expect(":")
        ty = p.type()
        p.end()
        return Conv(t, u, ty)
    if kw == "injtp":
        a = p.type()
        p.expect("=")
        b = p.type()
        p.end()
        return InjTp(a, b)
    raise ValueError(f"unknown directive {kw!r}")


# --------------------------------------------------------------------------
# Execution


@dataclass
class Entry:
    line: int
    directive: str
    outcome: dict[str, Any]
    text: str
    ms: float
    expect: Optional[str] = None
    error: Optional[Exception] = None

    @property
    def expect_ok(self) -> bool:
        return self.expect is None or (self.error is None and self.text == self.expect)

    def to_json(self, timing: bool = True) -> dict[str, Any]:
        out: dict[str, Any] = {"directive": self.directive, "outcome": self.outcome}
        if self.expect is not None:
            out["expect"] = {"value": self.expect, "ok": self.expect_ok}
        out["ms"] = round(self.ms, 3) if timing else 0
        return out


@dataclass
class Report:
    entries: list[Entry] = field(default_factory=list)

    @property
    def errors(self) -> list[Exception]:
        return [e.error for e in self.entries if e.error is not None]

    @property
    def ok(self) -> bool:
        return not self.errors and all(e.expect_ok for e in self.entries)

    def to_json(self, timing: bool = True) -> list[dict[str, Any]]:
        return [e.to_json(timing) for e in self.entries]


class Session:
    """The ambient context accumulated by ``assume`` directives."""

    def __init__(self) -> None:
        self.ctx: tuple[Type, ...] = ()
        self.names: tuple[str, ...] = ()

    def run(self, d: Directive, line: int) -> tuple[dict[str, Any], str]:
        match d:
            case Assume(name, ty):
                if name in self.names:
                    raise ScriptParseError(line, f"{name!r} is already assumed")
                self.ctx = (ty, *self.ctx)
                self.names = (name, *self.names)
                return {"kind": "assume", "name": name, "type": print_type(ty)}, "ok"
            case Norm(t, ty):
                term = self._typed(t, ty, line)
                n = nbe.normalize(self.ctx, ty, term)
                text = print_nf(self.names, n)
                return {"kind": "norm", "text": text, "nf": nf_to_json(n)}, text
            case Conv(t, u, ty):
                left = self._typed(t, ty, line)
                right = self._typed(u, ty, line)
                value = nbe.conv(self.ctx, ty, left, right)
                return {"kind": "conv", "value": value}, _bool(value)
            case InjTp(a, b):
                for side in (a, b):
                    if not isinstance(side, Fun):
                        raise DirectiveTypeError(line, f"injtp expects function types, got {print_type(side)}")
                assert isinstance(a, Fun) and isinstance(b, Fun)
                verdict = nbe.fun_tp_injective(a.dom, a.cod, b.dom, b.cod)
                if isinstance(verdict, nbe.EqualWithComponents):
                    text = f"equal {print_nftp(verdict.dom)}, {print_nftp(verdict.cod)}"
                    comps = [nftp_to_json(verdict.dom), nftp_to_json(verdict.cod)]
                    return {"kind": "injtp", "verdict": "equal", "components": comps}, text
                return {"kind": "injtp", "verdict": "unequal"}, "unequal"
            case MonEq(u, v):
                value = M.expr_eq(u, v)
                return {"kind": "moneq", "value": value}, _bool(value)
            case MonNorm(e):
                m = M.eval_expr(e)
                return {"kind": "monnorm", "list": list(m)}, M.print_list(m)
        raise TypeError(f"not a directive: {d!r}")

    def _typed(self, t: NamedTerm, ty: Type, line: int):
        try:
            term = resolve(t, self.names)
            check(self.ctx, term, ty)
        except (UnknownIdentifier, TypingError) as exc:
            raise DirectiveTypeError(line, str(exc)) from exc
        return term


def _bool(b: bool) -> str:
    return "true" if b else "false"


def run_script(
    source: str | Path,
    keep_going: bool = False,
    allowed: Optional[tuple[type, ...]] = None,
) -> Report:
    """Execute every directive of a script, in order.

    ``source`` is script text or a path. Without ``keep_going`` the run stops
    at the first parse or type error; either way the error is recorded in the
    returned report.
    """
    text = source.read_text() if isinstance(source, Path) else source
    session = Session()
    report = Report()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if not body:
            continue
        body, expect = split_expect(body)
        start = time.perf_counter()
        try:
            try:
                d = parse_directive(body)
            except (ParseError, ValueError) as exc:
                raise ScriptParseError(lineno, str(exc)) from exc
            if allowed is not None and not isinstance(d, allowed):
                raise ScriptParseError(lineno, "directive not allowed here")
            outcome, shown = session.run(d, lineno)
            err = None
        except (ScriptParseError, DirectiveTypeError) as exc:
            outcome, shown, err = {"kind": "error", "message": str(exc)}, f"error: {exc}", exc
        ms = (time.perf_counter() - start) * 1000
        report.entries.append(Entry(lineno, body, outcome, shown, ms, expect, err))
        if err is not None and not keep_going:
            break
    return report


# --------------------------------------------------------------------------
# Output


def _color(enabled: bool, code: str, s: str) -> str:
    return f"\x1b[{code}m{s}\x1b[0m" if enabled else s


def render_human(report: Report, color: bool = False) -> str:
    lines = []
    for e in report.entries:
        if e.error is not None:
            lines.append(_color(color, "31", e.text))
            continue
        shown = e.text
        if e.expect is not None:
            if e.expect_ok:
                shown = _color(color, "32", shown)
            else:
                shown = _color(color, "31", f"{shown}  (expected {e.expect})")
        lines.append(f"{e.directive}\n  => {shown}")
    return "\n".join(lines)


def render_json(report: Report, timing: bool = True) -> str:
    return json.dumps(report.to_json(timing), indent=2)


def _emit(report: Report, args: argparse.Namespace, single: bool = False) -> int:
    if args.json:
        print(render_json(report, timing=not args.no_timing))
    elif single and report.entries and report.entries[0].error is None:
        print(report.entries[0].text)
    else:
        color = os.environ.get("NBE_COLOR", "0") == "1"
        out = render_human(report, color)
        if out:
            print(out)
    if args.json:
        for err in report.errors:
            print(str(err), file=sys.stderr)
    return 0 if report.ok else 1


def _parse_ctx(src: str) -> str:
    # "f : O -> O, x : O" -> assume lines
    out = []
    for part in filter(None, (p.strip() for p in src.split(","))):
        out.append(f"assume {part}")
    return "\n".join(out)


def _query(args: argparse.Namespace, directive: str) -> int:
    prefix = _parse_ctx(args.ctx) if getattr(args, "ctx", None) else ""
    report = run_script(prefix + "\n" + directive)
    # hide the context-building assumptions unless they failed
    report.entries = [e for e in report.entries if e.error is not None or e.outcome.get("kind") != "assume"]
    return _emit(report, args, single=True)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON report")
    common.add_argument("--keep-going", action="store_true", help="continue past errors")
    common.add_argument("--no-timing", action="store_true", help="report 0 ms for every directive")

    parser = argparse.ArgumentParser(prog="normspace", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[common], help="run a script")
    p.add_argument("file", type=Path)

    p = sub.add_parser("monoid", parents=[common], help="run a script of monoid directives")
    p.add_argument("file", type=Path)

    p = sub.add_parser("norm", parents=[common], help="normalize one term")
    p.add_argument("-e", dest="term", required=True)
    p.add_argument("-t", dest="type", required=True)
    p.add_argument("-c", dest="ctx", default="", help='context, e.g. "f : O -> O, x : O"')

    p = sub.add_parser("conv", parents=[common], help="decide conversion of two terms")
    p.add_argument("-e", dest="term", required=True)
    p.add_argument("-e2", dest="term2", required=True)
    p.add_argument("-t", dest="type", required=True)
    p.add_argument("-c", dest="ctx", default="")

    p = sub.add_parser("injtp", parents=[common], help="decompose an equation of function types")
    p.add_argument("-a", dest="left", required=True)
    p.add_argument("-b", dest="right", required=True)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command in ("check", "monoid"):
        try:
            text = args.file.read_text()
        except OSError as exc:
            print(f"normspace: {exc}", file=sys.stderr)
            return 1
        allowed = MONOID_DIRECTIVES if args.command == "monoid" else None
        return _emit(run_script(text, keep_going=args.keep_going, allowed=allowed), args)
    if args.command == "norm":
        return _query(args, f"norm {args.term} : {args.type}")
    if args.command == "conv":
        return _query(args, f"conv {args.term} = {args.term2} : {args.type}")
    if args.command == "injtp":
        return _query(args, f"injtp ({args.left}) = ({args.right})")
    raise AssertionError(args.command)


if __name__ == "__main__":
    sys.exit(main())
