from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from cyclomackey.coeff import (LaurentRing, Monomial, RingMismatchError, SpecializationError, format_poly,
                               negate, parse_poly, poly_add, poly_mul, specialize)

R = LaurentRing(3)


@st.composite
def polys(draw, ring=R):
    terms = draw(st.dictionaries(
        st.tuples(st.integers(-3, 3), *[st.integers(0, 2)] * ring.r),
        st.integers(-5, 5), max_size=4))
    return ring.from_terms((Monomial(k[0], k[1:]), c) for k, c in terms.items())


def test_difference_of_squares():
    q = R.q
    assert poly_mul(q - 1, q + 1) == q ** 2 - 1


def test_unit_inverse():
    assert R.q * R.q_inv == R.one
    assert R.q ** -2 == R.q_inv * R.q_inv


def test_characteristic_polynomial_r2():
    ring = LaurentRing(2)
    e = ring.elementary_symmetric
    # (T - Q1)(T - Q2) = T^2 - (Q1 + Q2) T + Q1 Q2
    assert e[1] == ring.Q(1) + ring.Q(2)
    assert e[2] == ring.Q(1) * ring.Q(2)


def test_ring_mismatch():
    with pytest.raises(RingMismatchError):
        LaurentRing(2).q + LaurentRing(3).q


def test_specialize_examples():
    q = R.q
    assert specialize(q ** 2 - 1, 2, [1, 1, 1]) == 3
    assert specialize(R.q_inv, 2, [1, 1, 1]) == Fraction(1, 2)
    with pytest.raises(SpecializationError):
        specialize(q, 0, [1, 1, 1])
    with pytest.raises(SpecializationError):
        specialize(q, 1, [1, 1])


def test_format_order():
    p = R.parse("3*q^-2*Q1*Q3^2 - q + 7 - Q2")
    assert format_poly(p) == "-q - Q2 + 7 + 3*q^-2*Q1*Q3^2"
    assert str(R.zero) == "0"


def test_parse_rejects_bad_input():
    with pytest.raises(ValueError):
        R.parse("q^")
    with pytest.raises(RingMismatchError):
        R.parse("Q4")


@given(polys(), polys(), polys())
def test_ring_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert poly_add(a, b) == b + a


@given(polys())
def test_additive_inverse_is_empty(a):
    assert poly_add(a, negate(a)).terms == {}


@given(polys())
def test_round_trip(a):
    assert parse_poly(R, format_poly(a)) == a


@given(polys(), polys(), st.fractions().filter(lambda v: v != 0),
       st.lists(st.fractions(), min_size=3, max_size=3))
def test_specialize_is_homomorphism(a, b, qv, Qv):
    assert specialize(a * b, qv, Qv) == specialize(a, qv, Qv) * specialize(b, qv, Qv)
    assert specialize(a + b, qv, Qv) == specialize(a, qv, Qv) + specialize(b, qv, Qv)
