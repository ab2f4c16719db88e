import pytest

from conftest import spec_of
from nichols_bichar.expr import Bracket, ExprError, Pairing, Power, parse_element, parse_expr
from nichols_bichar.free_algebra import FreeElement, bracket, pair
from nichols_bichar.scalars import Cyclotomic

W = FreeElement.word


@pytest.fixture
def s():
    return spec_of(12, [[1, 5], [7, 2]])


def test_spec_examples(s):
    p12, p21 = s.p(1, 2), s.p(2, 1)
    assert parse_element("[x1, x2]_R", s) == W((1, 2), p12) - W((2, 1), p21)
    assert parse_element("<y1, [x1,x2]_L>", s) == W((2,), p21 - 1)
    assert parse_element("x1^2", s) == W((1, 1))


def test_precedence(s):
    # power binds tighter than juxtaposition, juxtaposition tighter than sum
    assert parse_element("x1 x2^2 + x2", s) == W((1, 2, 2)) + W((2,))
    assert parse_element("2 x1 - z^3 x2", s) == W((1,), 2) - W((2,), s.zeta(3))
    assert parse_element("(x1 + x2)^2", s) == W((1, 1)) + W((1, 2)) + W((2, 1)) + W((2, 2))


def test_brackets_and_pairings_nest(s):
    x1, x2 = FreeElement.letter(1), FreeElement.letter(2)
    inner = bracket(s, "L", x1, x2)
    assert parse_element("[x1, [x1, x2]_L]_L", s) == bracket(s, "L", x1, inner)
    assert parse_element("[x1, x2]_c", s) == bracket(s, "c", x1, x2)
    assert parse_element("[x1, x2]_-", s) == parse_element("[x1, x2]_minus", s)
    assert parse_element("<y1 y2, x1 x2>", s) == pair(s, [1, 2], W((1, 2)))
    assert isinstance(parse_expr("[x1,x2]_R", 2), Bracket)
    assert isinstance(parse_expr("<y1, x1>", 2), Pairing)
    assert isinstance(parse_expr("x1^3", 2), Power)


def test_scalars(s):
    assert parse_element("1/2 x1", s) == W((1,), Cyclotomic(1) / 2)
    assert parse_element("z^-1 z x1", s) == W((1,))
    assert parse_element("(1 - z)^-1 (1 - z) x2", s) == W((2,))
    assert parse_element("0", s).is_zero()


@pytest.mark.parametrize(
    "src,pos",
    [("x1 +", 4), ("[x1, x2]", 8), ("x1 ] x2", 3), ("x1 $ x2", 3), ("<y1, x1", 7)],
)
def test_syntax_errors_carry_position(src, pos):
    with pytest.raises(ExprError) as info:
        parse_expr(src, 2)
    assert info.value.position == pos
    assert f"at position {pos}" in str(info.value)


def test_semantic_errors(s):
    with pytest.raises(ExprError):
        parse_element("x3", s)
    with pytest.raises(ValueError, match="negative powers"):
        parse_element("x1^-1", s)
    with pytest.raises(ZeroDivisionError):
        parse_element("(z^12 - 1)^-1", s)
