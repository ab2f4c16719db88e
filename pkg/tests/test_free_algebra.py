import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import braidings, elements, homogeneous_elements, spec_of
from nichols_bichar.expr import parse_element
from nichols_bichar.free_algebra import (
    FreeElement,
    ad_power,
    bichar_words,
    bracket,
    braided_commutator,
    canonical_kind,
    circ_L,
    circ_R,
    content,
    format_element,
    format_word,
    nested_bracket,
    pair,
    skew_derivation,
)
from nichols_bichar.scalars import Cyclotomic

W = FreeElement.word


@pytest.fixture
def s():
    return spec_of(12, [[1, 5], [7, 2]])


def x(i):
    return FreeElement.letter(i)


def test_canonical_form_drops_zeros():
    u = FreeElement({(1, 2): 3, (2, 1): 0})
    assert u.terms == {(1, 2): Cyclotomic(3)}
    assert (u - u).is_zero()
    assert W((1,)) + W((1,)) == W((1,), 2)
    assert FreeElement.scalar(0).is_zero()


def test_products_and_powers():
    u = x(1) + x(2)
    assert u * u == W((1, 1)) + W((1, 2)) + W((2, 1)) + W((2, 2))
    assert x(1) ** 3 == W((1, 1, 1))
    assert x(1) ** 0 == FreeElement.scalar(1)
    assert 2 * x(1) == W((1,), 2)


def test_components_by_degree():
    u = W((1, 2)) + W((2, 1), 3) + W((1,))
    comps = u.components()
    assert set(comps) == {(1, 2), (1,)}
    assert comps[(1, 2)] == W((1, 2)) + W((2, 1), 3)
    assert not u.is_homogeneous()
    assert comps[(1, 2)].is_homogeneous()
    assert content((2, 1, 2)) == (1, 2, 2)


def test_bracket_definitions(s):
    p12, p21 = s.p(1, 2), s.p(2, 1)
    assert bracket(s, "R", x(1), x(2)) == W((1, 2), p12) - W((2, 1), p21)
    assert bracket(s, "L", x(1), x(2)) == W((1, 2), p21) - W((2, 1), p12)
    assert bracket(s, "minus", x(1), x(2)) == W((1, 2)) - W((2, 1))
    assert bracket(s, "-", x(1), x(2)) == bracket(s, "minus", x(1), x(2))
    assert bracket(s, "c", x(1), x(2)) == W((2, 1)) - W((1, 2), p21)
    assert braided_commutator(s, x(1), x(2)) == W((1, 2)) - W((2, 1), p12)
    with pytest.raises(ValueError):
        canonical_kind("Q")


def test_braided_and_commutator_closures_use_the_same_pairs(s):
    # the two braided conventions differ only by the order of the arguments
    for u, v in [(x(1), x(2)), (x(1), W((1, 2))), (W((2, 2)), x(1))]:
        assert bracket(s, "c", u, v) == braided_commutator(s, v, u)


def test_twisted_products(s):
    assert circ_R(s, x(1), x(2)) == W((1, 2), s.p(1, 2))
    assert circ_L(s, x(1), x(2)) == W((1, 2), s.p(2, 1))
    # [u,v]_R = u o_R v - v o_R u
    u, v = W((1, 2)), W((2,))
    assert bracket(s, "R", u, v) == circ_R(s, u, v) - circ_R(s, v, u)
    assert bracket(s, "L", u, v) == circ_L(s, u, v) - circ_L(s, v, u)


def test_bracket_extends_over_homogeneous_parts(s):
    u = x(1) + W((2, 2))
    assert bracket(s, "R", u, x(2)) == bracket(s, "R", x(1), x(2)) + bracket(s, "R", W((2, 2)), x(2))


def test_ad_power_and_nested(s):
    assert ad_power(s, "R", "left", x(1), x(2), 0) == x(2)
    l2 = ad_power(s, "L", "left", x(1), x(2), 2)
    assert l2 == bracket(s, "L", x(1), bracket(s, "L", x(1), x(2)))
    r2 = ad_power(s, "L", "right", x(1), x(2), 2)
    assert r2 == bracket(s, "L", bracket(s, "L", x(2), x(1)), x(1))
    assert nested_bracket(s, "R", [x(1), x(2), x(1)]) == bracket(s, "R", x(1), bracket(s, "R", x(2), x(1)))
    with pytest.raises(ValueError):
        ad_power(s, "R", "left", x(1), x(2), -1)


def test_skew_derivation_values(s):
    p12, p21 = s.p(1, 2), s.p(2, 1)
    assert skew_derivation(s, 1, x(1)) == FreeElement.scalar(1)
    assert skew_derivation(s, 1, x(2)).is_zero()
    # d_1(x2 x1) = p_12^{-1} x2
    assert skew_derivation(s, 1, W((2, 1))) == W((2,), p12.inverse())
    # <y1, [x1, x2]_L> = (p_21 - 1) x2
    assert pair(s, [1], bracket(s, "L", x(1), x(2))) == W((2,), p21 - 1)
    # pairing applies the rightmost y first
    u = W((1, 2)) + W((2, 1), 3)
    assert pair(s, [1, 2], u) == skew_derivation(s, 1, skew_derivation(s, 2, u))


def test_formatting():
    assert format_word(()) == "1"
    assert format_word((1, 1, 2)) == "x1^2 x2"
    u = W((1, 2), 1 + Cyclotomic(-1)) + W((2, 1), Cyclotomic(1) / 2)
    assert format_element(u) == "1/2 x2 x1"
    assert format_element(FreeElement.zero()) == "0"


# -- properties ---------------------------------------------------------------------


@st.composite
def spec_elements(draw, k=3, **kw):
    spec = draw(braidings(n_max=3))
    return (spec, *[draw(elements(spec, **kw)) for _ in range(k)])


@st.composite
def spec_homogeneous(draw, k=3):
    spec = draw(braidings(n_max=3))
    return (spec, *[draw(homogeneous_elements(spec)) for _ in range(k)])


@given(spec_elements())
def test_associative_distributive(data):
    s, a, b, c = data
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert sum(a.components().values(), FreeElement.zero()) == a


@given(spec_homogeneous())
def test_lie_brackets_antisymmetric_and_jacobi(data):
    s, a, b, c = data
    for kind in ("L", "R", "minus"):
        br = lambda u, v: bracket(s, kind, u, v)  # noqa: E731
        assert br(a, b) == -br(b, a)
        jac = br(a, br(b, c)) + br(b, br(c, a)) + br(c, br(a, b))
        assert jac.is_zero()


@given(spec_homogeneous(k=2), st.integers(1, 3))
def test_skew_derivation_twisted_leibniz(data, i):
    s, u, v = data
    if i > s.n or not u:
        return
    lhs = skew_derivation(s, i, u * v)
    p = bichar_words(s, (i,), u.content())
    rhs = skew_derivation(s, i, u) * v + (u * skew_derivation(s, i, v)).scale(p.inverse())
    assert lhs == rhs


@given(spec_elements(k=1, max_len=3))
def test_printed_form_reparses(data):
    s, u = data
    assert parse_element(u.to_string(s.conductor), s) == u
