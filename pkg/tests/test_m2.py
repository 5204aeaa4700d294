from hypothesis import given, strategies as st

from equigrass.m2 import (ONE, RHO, TAU, THETA, M2Element, Neg, Pos, in_support, m2_forget,
                          m2_mul, monomial_at, parse_m2)

small = st.integers(0, 4)
monomials = st.one_of(st.builds(Pos, small, small), st.builds(Neg, small, small))
elements = st.lists(monomials, max_size=4).map(M2Element)


def test_bidegrees():
    assert Pos(2, 3).bidegree == (3, 5)
    assert Neg(1, 2).bidegree == (-2, -5)


def test_tau_rho():
    x = m2_mul(TAU, RHO)
    assert x == M2Element([Pos(1, 1)])
    assert x.bidegree == (1, 2)


def test_theta_squared_vanishes():
    assert not THETA * THETA


def test_tau_on_negative_cone():
    assert TAU * M2Element([Neg(1, 1)]) == M2Element([Neg(0, 1)])


def test_tau_theta_is_zero():
    assert not TAU * THETA
    assert not in_support(0, -1)


def test_divisibility_rule():
    assert Pos(1, 2) * Neg(3, 2) == Neg(2, 0)
    assert Pos(0, 3) * Neg(3, 2) is None


def test_forget_examples():
    assert m2_forget(TAU * TAU * TAU) == 1
    assert m2_forget(RHO + TAU * RHO) == 0
    assert m2_forget(M2Element([Neg(2, 0)])) == 0


def test_render_and_parse():
    x = parse_m2("t^2 r + Q/(t r^2)")
    assert x == M2Element([Pos(2, 1), Neg(1, 2)])
    assert parse_m2(x.render()) == x
    assert ONE.render() == "1"


def test_support_matches_monomials():
    for p in range(-8, 9):
        for q in range(-10, 11):
            m = monomial_at(p, q)
            assert (m is not None) == in_support(p, q)
            if m is not None:
                assert m.bidegree == (p, q)
            expected = (q >= 0 and 0 <= p <= q) or (p <= 0 and q <= p - 2)
            assert in_support(p, q) == expected


@given(elements, elements)
def test_commutative(x, y):
    assert x * y == y * x


@given(elements, elements, elements)
def test_associative(x, y, z):
    assert (x * y) * z == x * (y * z)


@given(elements, elements, elements)
def test_distributive(x, y, z):
    assert x * (y + z) == x * y + x * z


@given(monomials, monomials)
def test_degree_additive(a, b):
    prod = a * b
    if prod is not None:
        assert prod.bidegree == tuple(u + v for u, v in zip(a.bidegree, b.bidegree))


@given(elements)
def test_addition_is_symmetric_difference(x):
    assert not x + x
    assert parse_m2(x.render()) == x
