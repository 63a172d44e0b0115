import pytest
from hypothesis import given

from conftest import arrow_terms, normal_forms, term_families, types, typed_terms
from oracles import reference_normal_form
from normspace.nbe import (
    S_O,
    EqualWithComponents,
    NeutralClosure,
    NotApplicable,
    SFun,
    TermClosure,
    Unequal,
    VFun,
    VO,
    apply,
    conv,
    eval,
    fun_tp_injective,
    hydrate,
    initial_env,
    normalize,
    normalize_tp,
    reflect,
    reify,
    sem_of_type,
    sem_to_nftp,
)
from normspace.nf import NF_O, NeApp, NeVar, NfFun, NfLam, NfNeO, NfNo, NfYes, erase_nftm, erase_nftp, validate_nf
from normspace.syntax import O, App, Fun, Lam, No, TypeMismatch, Var, Yes, beta_reducts, shift

OO = Fun(O, O)
NOO = NfFun(NF_O, NF_O)
SOO = SFun(S_O, S_O)
ID = Lam(O, Var(0))
F0 = NeVar(NOO, 0)
# eta-long form of a variable f : O -> O at level 0, read back at depth 1
ETA_F = NfLam(NF_O, NF_O, NfNeO(NeApp(NF_O, NF_O, F0, NfNeO(NeVar(NF_O, 1)))))


def test_semantic_types():
    assert sem_of_type(O) == S_O
    assert sem_of_type(OO) == SOO
    assert sem_to_nftp(SOO) == NOO


@given(types(max_depth=4))
def test_sem_type_round_trip(a):
    assert sem_to_nftp(sem_of_type(a)) == normalize_tp(a)
    assert erase_nftp(sem_to_nftp(sem_of_type(a))) == a


def test_eval_examples():
    assert eval((), Yes()) == VO(NfYes())
    assert eval((VO(NfYes()),), Var(0)) == VO(NfYes())
    assert eval((), App(ID, Yes())) == VO(NfYes())
    assert eval((), ID) == VFun(TermClosure((), S_O, Var(0)))


def test_apply_examples():
    assert apply(eval((), ID), VO(NfYes())) == VO(NfYes())
    f = VFun(NeutralClosure(S_O, S_O, F0))
    assert apply(f, VO(NfYes())) == VO(NfNeO(NeApp(NF_O, NF_O, F0, NfYes())))
    c = TermClosure((), S_O, No())
    assert apply(eval((), Lam(OO, Var(0))), VFun(c)) == VFun(c)
    with pytest.raises(NotApplicable):
        apply(VO(NfYes()), VO(NfNo()))


def test_reflect_examples():
    assert reflect(S_O, NeVar(NF_O, 0)) == VO(NfNeO(NeVar(NF_O, 0)))
    assert reflect(SOO, F0) == VFun(NeutralClosure(S_O, S_O, F0))
    assert apply(reflect(SOO, F0), VO(NfNo())) == VO(NfNeO(NeApp(NF_O, NF_O, F0, NfNo())))


def test_reify_examples():
    assert reify(0, S_O, VO(NfYes())) == NfYes()
    assert reify(0, SOO, eval((), ID)) == NfLam(NF_O, NF_O, NfNeO(NeVar(NF_O, 0)))
    assert reify(1, SOO, reflect(SOO, F0)) == ETA_F


def test_hydrate_examples():
    assert hydrate(S_O, 0) == VO(NfNeO(NeVar(NF_O, 0)))
    assert hydrate(SOO, 2) == VFun(NeutralClosure(S_O, S_O, NeVar(NOO, 2)))
    assert reify(1, S_O, hydrate(S_O, 0)) == NfNeO(NeVar(NF_O, 0))


def test_initial_env_examples():
    assert initial_env(()) == ()
    assert initial_env((O,)) == (VO(NfNeO(NeVar(NF_O, 0))),)
    assert initial_env((O, OO)) == (hydrate(S_O, 1), hydrate(SOO, 0))


def test_normalize_examples():
    assert normalize((), O, App(ID, Yes())) == NfYes()
    assert normalize((), O, Yes()) == NfYes()
    assert normalize((OO,), OO, Var(0)) == ETA_F


def test_normalize_tp_examples():
    assert normalize_tp(O) == NF_O
    assert normalize_tp(OO) == NOO
    assert erase_nftp(normalize_tp(Fun(OO, O))) == Fun(OO, O)


def test_conv_examples():
    assert conv((), OO, ID, ID)
    assert conv((), O, App(ID, Yes()), Yes())
    assert conv((OO,), OO, Var(0), Lam(O, App(Var(1), Var(0))))
    assert not conv((), O, Yes(), No())
    with pytest.raises(TypeMismatch):
        conv((), O, ID, Yes())


def test_fun_tp_injective_examples():
    assert fun_tp_injective(O, O, O, O) == EqualWithComponents(NF_O, NF_O)
    assert fun_tp_injective(O, O, OO, O) == Unequal()
    assert fun_tp_injective(OO, O, OO, O) == EqualWithComponents(NOO, NF_O)


def test_function_argument_read_back_under_later_binders():
    # g : (O -> O) -> O.  In (\v:O. \z:O. v) (g (\y:O. y)) the neutral
    # g (\y. y) is built outside the binder for z but read back inside it, so
    # y must get the level of its final position (3), not of its birth (2).
    gty = Fun(OO, O)
    ctx = (O, gty)  # x : O at level 1, g at level 0
    t = App(Lam(O, Lam(O, Var(1))), App(Var(1), Lam(O, Var(0))))
    n = normalize(ctx, OO, t)
    validate_nf(ctx, OO, n)
    inner = NfLam(NF_O, NF_O, NfNeO(NeVar(NF_O, 3)))
    assert n == NfLam(NF_O, NF_O, NfNeO(NeApp(NOO, NF_O, NeVar(NfFun(NOO, NF_O), 0), inner)))
    assert erase_nftm(ctx, n) == Lam(O, App(Var(2), Lam(O, Var(0))))


def test_higher_order_neutral_spine():
    # h : (O -> O) -> O -> O applied to a variable f : O -> O and yes
    h = Fun(OO, OO)
    ctx = (OO, h)
    n = normalize(ctx, O, App(App(Var(1), Var(0)), Yes()))
    validate_nf(ctx, O, n)
    assert erase_nftm(ctx, n) == App(App(Var(1), Lam(O, App(Var(1), Var(0)))), Yes())


@given(typed_terms())
def test_agrees_with_reduction_oracle(triple):
    ctx, ty, t = triple
    assert erase_nftm(ctx, normalize(ctx, ty, t)) == reference_normal_form(ctx, ty, t)


@given(typed_terms())
def test_output_is_well_formed(triple):
    ctx, ty, t = triple
    validate_nf(ctx, ty, normalize(ctx, ty, t))


@given(typed_terms())
def test_beta_invariance(triple):
    ctx, ty, t = triple
    n = normalize(ctx, ty, t)
    for t2 in beta_reducts(t):
        assert normalize(ctx, ty, t2) == n


@given(arrow_terms())
def test_eta_law(triple):
    ctx, ty, t = triple
    expanded = Lam(ty.dom, App(shift(t, 1), Var(0)))
    assert normalize(ctx, ty, t) == normalize(ctx, ty, expanded)


@given(normal_forms())
def test_section_property(triple):
    ctx, ty, n = triple
    assert normalize(ctx, ty, erase_nftm(ctx, n)) == n


@given(typed_terms())
def test_idempotence(triple):
    ctx, ty, t = triple
    n = normalize(ctx, ty, t)
    assert normalize(ctx, ty, erase_nftm(ctx, n)) == n


@given(term_families(3))
def test_conv_is_an_equivalence(family):
    ctx, ty, (a, b, c) = family
    assert conv(ctx, ty, a, a)
    assert conv(ctx, ty, a, b) == conv(ctx, ty, b, a)
    if conv(ctx, ty, a, b) and conv(ctx, ty, b, c):
        assert conv(ctx, ty, a, c)


@given(term_families(2, ty=O))
def test_conv_is_a_congruence(family):
    ctx, _, (t, u) = family
    same = conv(ctx, O, t, u)
    # application context: f t vs f u for a fresh f : O -> O
    f_ctx = (OO, *ctx)
    assert conv(f_ctx, O, App(Var(0), shift(t, 1)), App(Var(0), shift(u, 1))) == same
    # lambda context
    assert conv(ctx, OO, Lam(O, shift(t, 1)), Lam(O, shift(u, 1))) == same
    # argument of a lambda
    assert conv(ctx, O, App(ID, t), App(ID, u)) == same


@given(typed_terms(closed=True, ty=O))
def test_closed_base_terms_are_constants(triple):
    _, _, t = triple
    assert normalize((), O, t) in (NfYes(), NfNo())


@given(types(), types(), types(), types())
def test_injectivity(a, b, a2, b2):
    v = fun_tp_injective(a, b, a2, b2)
    if isinstance(v, EqualWithComponents):
        assert (v.dom, v.cod) == (normalize_tp(a), normalize_tp(b))
        assert (v.dom, v.cod) == (normalize_tp(a2), normalize_tp(b2))
        assert (a, b) == (a2, b2)
    else:
        assert (a, b) != (a2, b2)
