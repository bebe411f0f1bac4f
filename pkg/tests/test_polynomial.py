from hypothesis import given
from hypothesis import strategies as st

from hankel_interp import FieldSpec, Polynomial

from helpers import Q, fields

F7 = FieldSpec.prime(7)


def test_zero_polynomial():
    z = Polynomial(Q, [0, 0])
    assert z.is_zero() and z.degree == -1 and z.coeffs == ()
    assert z.pretty() == "0"


def test_pretty_descending():
    p = Polynomial.from_descending(Q, [2, -4, 0, 2, -6, 0, -8])
    assert p.pretty() == "2*x^6 - 4*x^5 + 2*x^3 - 6*x^2 - 8"
    assert Polynomial(Q, ["-1/2", 1]).pretty() == "x - 1/2"


def test_from_roots_and_eval():
    p = Polynomial.from_roots(Q, [1, 2], leading=3)
    assert p.to_strings() == ["6", "-9", "3"]
    assert p(1) == 0 and p(0) == 6


def test_ratio_to():
    p = Polynomial(Q, [1, 2, 3])
    assert (p * 5).ratio_to(p) == 5
    assert Polynomial(Q, [1, 2, 4]).ratio_to(p) is None
    assert Polynomial.zero(Q).ratio_to(p) == 0
    assert p.ratio_to(Polynomial.zero(Q)) is None
    assert not Polynomial.zero(Q).is_proportional(p)


def test_derivative_over_small_prime():
    p = Polynomial(F7, [1, 0, 0, 0, 0, 0, 0, 1])  # x^7 + 1
    assert p.derivative().is_zero()


coeff_lists = st.lists(st.integers(-20, 20), max_size=7)


@given(fields, coeff_lists, coeff_lists.filter(lambda c: any(c)))
def test_divmod_reconstructs(spec, a, b):
    a, b = Polynomial(spec, a), Polynomial(spec, b)
    if b.is_zero():
        return
    q, r = divmod(a, b)
    assert q * b + r == a
    assert r.degree < b.degree


@given(fields, coeff_lists, coeff_lists, st.integers(-30, 30))
def test_ring_homomorphism(spec, a, b, x):
    a, b = Polynomial(spec, a), Polynomial(spec, b)
    assert (a * b)(x) == a(x) * b(x)
    assert (a + b)(x) == a(x) + b(x)
    assert (a - b)(x) == a(x) - b(x)
