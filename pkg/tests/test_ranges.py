from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from dpsocle.errors import InvalidInput
from dpsocle.ranges import classify_range, range_predicates, range_report
from dpsocle.theta import DFMParam


@pytest.mark.parametrize("m, n, h, label", [
    ((1, 1), (1, 1), (2, 0), "good"),
    ((1, 1), (1, 1), (0, 2), "weakly_fair"),
    ((1, 2), (0, 1), (0, 3), "mediocre"),
    ((1, 0), (0, 1), (0, 2), "outside"),
])
def test_classify(m, n, h, label):
    assert classify_range(DFMParam.of(m, n, h)) == label


def test_mediocre_report_carries_note():
    rep = range_report(DFMParam.of((1, 2), (0, 1), (0, 3)))
    assert rep["label"] == "mediocre" and "note" in rep
    assert rep["h"] == ["0", "3"]


def test_non_integral_h_rejected():
    with pytest.raises(InvalidInput):
        range_predicates(DFMParam.of((1, 0), (0, 1), (Fraction(1, 2), 0)))


def test_weakly_fair_boundary_is_inclusive():
    # blocks (1,2): the wall sits at h_1 - h_2 = -3/2, unreachable for integers
    assert classify_range(DFMParam.of((1, 1), (0, 1), (0, 1))) == "weakly_fair"
    assert classify_range(DFMParam.of((1, 1), (0, 1), (0, 2))) == "mediocre"


@st.composite
def params(draw):
    ell = draw(st.integers(1, 5))
    c = draw(st.lists(st.integers(1, 4), min_size=ell, max_size=ell))
    ms = [draw(st.integers(0, x)) for x in c]
    h = draw(st.lists(st.integers(-10, 10), min_size=ell, max_size=ell))
    return DFMParam.of(ms, [x - a for x, a in zip(c, ms)], h)


@given(params())
def test_nesting(param):
    pr = range_predicates(param)
    assert not pr["good"] or pr["weakly_fair"]
    assert not pr["weakly_fair"] or pr["mediocre"]


@given(params(), st.integers(-5, 5))
def test_invariant_under_common_shift(param, t):
    shifted = DFMParam(param.pair, tuple(x + t for x in param.h))
    assert range_predicates(shifted) == range_predicates(param)


@given(params())
def test_single_block_is_always_good(param):
    if param.pair.length == 1:
        assert classify_range(param) == "good"
