"""Normalization by evaluation for simple types over a two-constant base type,
with a decidable conversion checker and a free-monoid companion."""

from .nbe import (
    EqualWithComponents,
    Unequal,
    conv,
    eval,
    fun_tp_injective,
    normalize,
    normalize_tp,
)
from .surface import parse_type, print_nf, print_term, read_term
from .syntax import O, App, Fun, Lam, No, Var, Yes, check, infer

__all__ = [
    "App",
    "EqualWithComponents",
    "Fun",
    "Lam",
    "No",
    "O",
    "Unequal",
    "Var",
    "Yes",
    "check",
    "conv",
    "eval",
    "fun_tp_injective",
    "infer",
    "normalize",
    "normalize_tp",
    "parse_type",
    "print_nf",
    "print_term",
    "read_term",
]
