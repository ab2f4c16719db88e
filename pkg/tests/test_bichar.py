import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import braidings, spec_of
from nichols_bichar.bichar import (
    BraidingSpec,
    CapExceeded,
    bichar_eval,
    is_connected,
    is_quantum_linear_space,
    is_symmetric,
    unit_vector,
)
from nichols_bichar.scalars import root_of_unity


def test_entries_are_powers_of_zeta():
    s = spec_of(8, [[4, 2], [2, 4]])
    assert s.p(1, 1) == -1 and s.p(2, 2) == -1
    assert s.p(1, 2) == root_of_unity(4) and s.p(2, 1) == root_of_unity(4)
    assert spec_of(2, [[1]]).p(1, 1) == -1


def test_exponents_reduced_mod_conductor():
    assert spec_of(6, [[7, -1], [0, 12]]) == spec_of(6, [[1, 5], [0, 0]])
    assert spec_of(6, [[7, -1], [0, 12]]).fingerprint == spec_of(6, [[1, 5], [0, 0]]).fingerprint


def test_invalid_specs_rejected():
    with pytest.raises(ValueError):
        BraidingSpec(2, 4, ((1, 2),))
    with pytest.raises(ValueError):
        BraidingSpec(2, 4, ((1, 2), (3,)))
    with pytest.raises(ValueError):
        BraidingSpec(0, 4, ())
    with pytest.raises(ValueError):
        BraidingSpec(1, 0, ((0,),))


def test_bichar_on_unit_vectors():
    s = spec_of(12, [[1, 5], [7, 2]])
    for i in (1, 2):
        for j in (1, 2):
            assert bichar_eval(s, unit_vector(2, i), unit_vector(2, j)) == s.p(i, j)
    # p_{x1 x1 x2, x2} = p_12^2 p_22
    assert bichar_eval(s, (2, 1), (0, 1)) == s.p(1, 2) ** 2 * s.p(2, 2)
    assert bichar_eval(s, (-1, 0), (0, 1)) == s.p(1, 2).inverse()


def test_symmetry_connectedness_quantum_linear_space():
    omega = spec_of(3, [[0, 1], [2, 0]])
    assert is_quantum_linear_space(omega)
    assert not is_connected(omega)
    both_i = spec_of(4, [[0, 1], [1, 0]])
    assert not is_quantum_linear_space(both_i)
    assert is_connected(both_i)
    assert is_symmetric(both_i) and not is_symmetric(omega)
    one = spec_of(2, [[1]])
    assert is_connected(one) and is_quantum_linear_space(one)
    # a path 1 - 2 - 3 is connected, 1 and 3 not adjacent
    path = spec_of(4, [[2, 1, 0], [1, 2, 1], [0, 1, 2]])
    assert is_connected(path)
    split = spec_of(4, [[2, 1, 0], [1, 2, 0], [0, 0, 2]])
    assert not is_connected(split)


def test_degree_cap():
    s = spec_of(4, [[2]], cap=3)
    s.check_degree(3)
    with pytest.raises(CapExceeded, match="exceeds the degree cap 3"):
        s.check_degree(4)
    assert s.with_cap(10).cap == 10
    assert s.with_cap(10) == s.with_cap(10)


def test_fingerprint_ignores_cap_and_labels():
    a = spec_of(8, [[4, 2], [2, 4]], cap=5)
    b = BraidingSpec(2, 8, ((4, 2), (2, 4)), 9, ("a", "b"))
    assert a.fingerprint == b.fingerprint
    assert len(a.fingerprint) == 16


@st.composite
def spec_and_vectors(draw):
    s = draw(braidings())
    vec = st.lists(st.integers(-3, 3), min_size=s.n, max_size=s.n)
    return s, draw(vec), draw(vec), draw(vec)


@given(spec_and_vectors())
def test_biadditive(data):
    s, d1, d2, e = data
    add = [a + b for a, b in zip(d1, d2)]
    assert bichar_eval(s, add, e) == bichar_eval(s, d1, e) * bichar_eval(s, d2, e)
    assert bichar_eval(s, e, add) == bichar_eval(s, e, d1) * bichar_eval(s, e, d2)


@given(spec_and_vectors())
def test_negation_inverts(data):
    s, d, e, _ = data
    assert bichar_eval(s, d, e) * bichar_eval(s, [-a for a in d], e) == 1
