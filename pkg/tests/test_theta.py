import pytest
from hypothesis import given, strategies as st

from dpsocle.diagrams import SignedYoungDiagram, enumerate_signed, young_from_composition
from dpsocle.errors import InvalidInput
from dpsocle.theta import (
    DFMParam, SignedPair, _associated_rows, associated_shape, enumerate_pairs,
    gk_dimension, is_normal, nilrad_dimension, omega_set, phi_map, trapa_add,
)


def P(m, n):
    return SignedPair(tuple(m), tuple(n))


@st.composite
def pairs(draw, max_len=5, max_block=3):
    ell = draw(st.integers(1, max_len))
    blocks = draw(st.lists(st.integers(1, max_block), min_size=ell, max_size=ell))
    ms = [draw(st.integers(0, b)) for b in blocks]
    return P(ms, [b - a for b, a in zip(blocks, ms)])


@pytest.mark.parametrize("m, n, c, expected", [
    (1, 1, (1, 1), [P((0, 1), (1, 0)), P((1, 0), (0, 1))]),
    (2, 0, (1, 1), [P((1, 1), (0, 0))]),
    (1, 1, (2,), [P((1,), (1,))]),
])
def test_enumerate_pairs(m, n, c, expected):
    assert enumerate_pairs(m, n, c) == expected


def test_enumerate_pairs_sum_mismatch():
    with pytest.raises(InvalidInput):
        enumerate_pairs(1, 1, (3,))


@pytest.mark.parametrize("pair, dim", [
    (P((1, 0), (0, 1)), 1), (P((1,), (1,)), 0), (P((1, 1, 0), (0, 0, 1)), 3),
])
def test_nilrad_dimension(pair, dim):
    assert nilrad_dimension(pair) == dim


@pytest.mark.parametrize("start, p, q, expected", [
    ("", 1, 0, "+"), ("+", 0, 1, "+-"), ("+-", 1, 1, "+-+/-"),
])
def test_trapa_add(start, p, q, expected):
    assert str(trapa_add(SignedYoungDiagram.parse(start), p, q)) == expected


@pytest.mark.parametrize("pair, diagram, normal", [
    (P((1, 0), (0, 1)), "+-", True),
    (P((1, 1), (0, 0)), "+/+", False),
    (P((1, 0, 1), (0, 1, 0)), "+-+", True),
    (P((1,), (1,)), "+/-", True),
])
def test_associated_shape_and_normality(pair, diagram, normal):
    assert str(associated_shape(pair)) == diagram
    assert is_normal(pair) is normal


@pytest.mark.parametrize("m, n, c, size", [
    (1, 1, (1, 1), 2), (2, 0, (1, 1), 0), (2, 1, (1, 1, 1), 1),
])
def test_omega_set_sizes(m, n, c, size):
    assert len(omega_set(m, n, c)) == size


def test_omega_set_unique_chain():
    assert omega_set(2, 1, (1, 1, 1)) == [P((1, 0, 1), (0, 1, 0))]


def test_phi_map_examples():
    assert {str(k): str(v) for k, v in phi_map(1, 1, (1, 1)).items()} == {
        "m=1,0 n=0,1": "+-", "m=0,1 n=1,0": "-+"}
    assert {str(k): str(v) for k, v in phi_map(1, 1, (2,)).items()} == {"m=1 n=1": "+/-"}


@pytest.mark.parametrize("pair, gk", [
    (P((1, 0), (0, 1)), 1),
    # shape (1,1) is the zero orbit of gl(2), so these two have GK dimension 0
    (P((1,), (1,)), 0),
    (P((1, 1), (0, 0)), 0),
])
def test_gk_dimension(pair, gk):
    assert gk_dimension(pair) == gk


def test_pair_parse_and_validation():
    assert SignedPair.parse("m=1,0,1 n=0,1,0") == P((1, 0, 1), (0, 1, 0))
    for bad in ("m=1 n=0,1", "m=0 n=0", "x=1 n=0"):
        with pytest.raises(InvalidInput):
            SignedPair.parse(bad)


def test_dfm_param_length_check():
    with pytest.raises(InvalidInput):
        DFMParam(P((1, 0), (0, 1)), (1,))


@given(pairs())
def test_shape_has_right_signature(pair):
    t = associated_shape(pair)
    assert t.signature == pair.signature


@given(pairs())
def test_gk_bounded_by_richardson(pair):
    assert gk_dimension(pair) <= nilrad_dimension(pair)
    assert (gk_dimension(pair) == nilrad_dimension(pair)) == is_normal(pair)


@given(pairs(), st.randoms())
def test_equal_rows_may_be_visited_in_any_order(pair, rnd):
    def shuffle_ties(rows):
        groups = {}
        for r in rows:
            groups.setdefault(len(r), []).append(r)
        out = []
        for length in sorted(groups, reverse=True):
            g = groups[length]
            rnd.shuffle(g)
            out += g
        return out

    shuffled = SignedYoungDiagram(tuple(_associated_rows(pair, shuffle_ties)))
    assert shuffled == associated_shape(pair)


@given(pairs())
def test_swap_flips_signs(pair):
    assert associated_shape(pair.swapped()) == associated_shape(pair).flipped()


@pytest.mark.parametrize("c", [(1, 2), (2, 1, 1), (1, 1, 1, 1), (2, 2), (3, 1, 2)])
def test_phi_is_bijective(c):
    y = young_from_composition(c)
    total = sum(c)
    for m in range(total + 1):
        mapping = phi_map(m, total - m, c)
        assert set(mapping.values()) == set(enumerate_signed(y, m, total - m))
