import pytest
from hypothesis import given

from conftest import typed_terms
from normspace.syntax import (
    O,
    App,
    ArgumentMismatch,
    Fun,
    Lam,
    No,
    NotAFunction,
    TypeMismatch,
    UnboundVariable,
    Var,
    Yes,
    beta_reducts,
    check,
    infer,
    instantiate,
    shift,
    step_beta,
    subst,
    term_size,
)

OO = Fun(O, O)
ID = Lam(O, Var(0))


@pytest.mark.parametrize(
    "ctx, term, expected",
    [
        ((), Yes(), O),
        ((O,), Var(0), O),
        ((), ID, OO),
        ((OO, O), App(Var(0), Var(1)), O),
        ((), Lam(OO, Lam(O, App(Var(1), App(Var(1), Var(0))))), Fun(OO, OO)),
    ],
)
def test_infer(ctx, term, expected):
    assert infer(ctx, term) == expected


def test_infer_errors():
    with pytest.raises(NotAFunction) as exc:
        infer((), App(Yes(), No()))
    assert exc.value.ty == O
    with pytest.raises(UnboundVariable) as exc:
        infer((O,), Var(1))
    assert exc.value.index == 1
    with pytest.raises(ArgumentMismatch) as exc:
        infer((), App(ID, ID))
    assert (exc.value.expected, exc.value.got) == (O, OO)


def test_check():
    check((), ID, OO)
    check((OO,), App(Var(0), Yes()), O)
    with pytest.raises(TypeMismatch):
        check((), Yes(), OO)


@pytest.mark.parametrize(
    "t, index, s, expected",
    [
        (Var(0), 0, Yes(), Yes()),
        (Lam(O, Var(1)), 0, Yes(), Lam(O, Yes())),
        (App(Var(0), Var(1)), 0, ID, App(ID, Var(1))),
        # the substituted term is shifted under the binder, so Var 0 in s
        # keeps pointing outside
        (Lam(O, Var(1)), 0, Var(0), Lam(O, Var(1))),
        (Lam(O, App(Var(1), Var(2))), 1, No(), Lam(O, App(Var(1), No()))),
    ],
)
def test_subst(t, index, s, expected):
    assert subst(t, index, s) == expected


def test_shift_respects_cutoff():
    assert shift(Lam(O, App(Var(0), Var(1))), 2) == Lam(O, App(Var(0), Var(3)))
    assert shift(Var(0), 1, cutoff=1) == Var(0)


def test_instantiate_drops_binder():
    # in context [w]: (\y. \z. y w) w  ~>  \z. w w
    body = Lam(O, App(Var(1), Var(2)))
    assert instantiate(body, Var(0)) == Lam(O, App(Var(1), Var(1)))


def test_step_beta_examples():
    assert step_beta(App(ID, Yes())) == {Yes()}
    assert step_beta(Yes()) == frozenset()
    t = App(App(Lam(OO, Var(0)), ID), Yes())
    assert step_beta(t) == {App(ID, Yes())}


def test_step_beta_finds_every_position():
    # redexes at the root, in the function part, and inside the argument
    inner = App(ID, No())
    t = App(Lam(O, Var(0)), inner)
    assert step_beta(t) == {inner, App(Lam(O, Var(0)), No())}
    assert step_beta(Lam(O, App(ID, Var(0)))) == {Lam(O, Var(0))}


@given(typed_terms())
def test_subject_reduction(triple):
    ctx, ty, t = triple
    assert infer(ctx, t) == ty
    for t2 in beta_reducts(t):
        assert infer(ctx, t2) == ty


@given(typed_terms())
def test_inference_is_deterministic(triple):
    ctx, _, t = triple
    assert infer(ctx, t) == infer(tuple(ctx), t)


@given(typed_terms())
def test_scope_safety(triple):
    ctx, _, t = triple
    top = _max_free(t)
    if top >= 0:
        # drop the binding of the outermost free variable the term uses
        with pytest.raises(UnboundVariable):
            infer(ctx[:top], t)


def _max_free(t, depth=0):
    match t:
        case Var(i):
            return i - depth
        case Lam(_, b):
            return _max_free(b, depth + 1)
        case App(f, u):
            return max(_max_free(f, depth), _max_free(u, depth))
    return -1


@given(typed_terms())
def test_substitution_lemma(triple):
    # every redex's contraction keeps the type of its body
    ctx, _, t = triple
    for sub_ctx, redex in _redexes(ctx, t):
        lam, arg = redex.fun, redex.arg
        assert infer(sub_ctx, instantiate(lam.body, arg)) == infer((lam.annot, *sub_ctx), lam.body)


def _redexes(ctx, t):
    match t:
        case App(f, u):
            if isinstance(f, Lam):
                yield ctx, t
            yield from _redexes(ctx, f)
            yield from _redexes(ctx, u)
        case Lam(a, b):
            yield from _redexes((a, *ctx), b)


@given(typed_terms(max_size=30))
def test_term_size_bounded(triple):
    assert term_size(triple[2]) <= 30
