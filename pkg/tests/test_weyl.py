import pytest
from hypothesis import given, strategies as st

from dpsocle.errors import InvalidInput
from dpsocle.weyl import (
    Composition, Permutation, assumption_a_typeA, compositions, is_involution,
    longest_element, parabolic_longest,
)


def perms(max_n=7):
    return st.integers(1, max_n).flatmap(
        lambda n: st.permutations(range(1, n + 1)).map(lambda p: Permutation(tuple(p))))


@pytest.mark.parametrize("n, expected", [(1, [1]), (3, [3, 2, 1]), (4, [4, 3, 2, 1])])
def test_longest_element(n, expected):
    assert list(longest_element(n).images) == expected


def test_longest_element_rejects_zero():
    with pytest.raises(InvalidInput):
        longest_element(0)


@pytest.mark.parametrize("c, expected", [
    ((1, 1, 1), [1, 2, 3]),
    ((3,), [3, 2, 1]),
    ((2, 1), [2, 1, 3]),
])
def test_parabolic_longest(c, expected):
    assert list(parabolic_longest(Composition(c)).images) == expected


@pytest.mark.parametrize("images, expected", [
    ((2, 1, 3), True), ((2, 3, 1), False), ((1,), True),
])
def test_is_involution(images, expected):
    assert is_involution(Permutation(images)) is expected


@pytest.mark.parametrize("c, flag", [((2, 1, 2), True), ((2, 1), False), ((1, 1), True)])
def test_assumption_a(c, flag):
    rec = assumption_a_typeA(Composition(c))
    assert rec == {"palindrome": flag, "involution": flag, "duflo": flag, "assumption_a": flag}


def test_assumption_a_rejects_other_types():
    with pytest.raises(InvalidInput):
        assumption_a_typeA(Composition((1, 1)), type_="B")


def test_w0_wc_for_21_is_a_three_cycle():
    prod = longest_element(3) * parabolic_longest(Composition((2, 1)))
    assert list(prod.images) == [2, 3, 1]


def test_permutation_validation():
    with pytest.raises(InvalidInput):
        Permutation((1, 1))
    with pytest.raises(InvalidInput):
        Permutation.parse("[1,x]")


def test_composition_parse_and_str():
    c = Composition.parse("2,1,2")
    assert c.parts == (2, 1, 2) and str(c) == "2,1,2" and c.total == 5
    assert Composition.parse("()").parts == ()
    with pytest.raises(InvalidInput):
        Composition.parse("2,0")


@pytest.mark.parametrize("n", range(0, 9))
def test_composition_count(n):
    cs = list(compositions(n))
    assert len(cs) == (2 ** (n - 1) if n else 1)
    assert len(set(cs)) == len(cs)
    assert all(c.total == n for c in cs)


@given(perms(), perms())
def test_product_applies_right_factor_first(p, q):
    if len(p.images) != len(q.images):
        return
    pq = p * q
    assert all(pq(i) == p(q(i)) for i in range(1, len(p.images) + 1))


@given(perms())
def test_inverse(p):
    n = len(p.images)
    assert p * p.inverse() == Permutation.identity(n)
    assert p.inverse().length() == p.length()


@given(st.integers(1, 9))
def test_w0_is_involution_of_maximal_length(n):
    w0 = longest_element(n)
    assert is_involution(w0)
    assert w0.length() == n * (n - 1) // 2


@given(st.lists(st.integers(1, 4), min_size=1, max_size=6))
def test_palindrome_iff_involution(parts):
    rec = assumption_a_typeA(Composition(tuple(parts)))
    assert rec["palindrome"] == (parts == parts[::-1]) == rec["involution"]
