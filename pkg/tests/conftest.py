import os
import sys

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from normspace.syntax import Fun  # noqa: E402
from normspace.gen import gen_ctx, gen_nf, gen_term, gen_type, gen_typed_term, min_size  # noqa: E402

settings.register_profile(
    "default",
    max_examples=150,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large],
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


def _chooser(draw):
    return lambda n: draw(st.integers(0, n - 1)) if n > 1 else 0


@st.composite
def types(draw, max_depth=3):
    return gen_type(_chooser(draw), max_depth)


@st.composite
def typed_terms(draw, max_size=25, max_type_depth=3, closed=False, ty=None):
    """(ctx, type, term) triples with ``ctx |- term : type``."""
    return gen_typed_term(
        _chooser(draw), max_size=max_size, max_type_depth=max_type_depth, closed=closed, ty=ty
    )


@st.composite
def arrow_terms(draw, max_size=25):
    """Like :func:`typed_terms` but always at a function type."""
    choose = _chooser(draw)
    ctx = gen_ctx(choose, 3, 3)
    ty = Fun(gen_type(choose, 2), gen_type(choose, 2))
    size = draw(st.integers(min_size(ty), max_size))
    return ctx, ty, gen_term(choose, ctx, ty, size)


@st.composite
def normal_forms(draw, max_size=20):
    """(ctx, type, normal form) triples produced without the normalizer."""
    choose = _chooser(draw)
    ctx = gen_ctx(choose, 3, 3)
    ty = gen_type(choose, 3)
    return ctx, ty, gen_nf(choose, ctx, ty, draw(st.integers(1, max_size)))


@st.composite
def term_families(draw, count, max_size=20, ty=None):
    """``count`` terms sharing one context and type."""
    choose = _chooser(draw)
    ctx = gen_ctx(choose, 3, 3)
    if ty is None:
        ty = gen_type(choose, 3)
    terms = []
    for _ in range(count):
        size = draw(st.integers(min_size(ty), max(min_size(ty), max_size)))
        terms.append(gen_term(choose, ctx, ty, size))
    return ctx, ty, tuple(terms)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in RESULTS:
        terminalreporter.write_line(line)
