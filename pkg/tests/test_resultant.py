import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hankel_interp import (
    FieldSpec,
    Polynomial,
    SampleRatioTable,
    common_zero_from_samples,
    discriminant,
    resultant_minors_from_samples,
    sylvester_resultant,
)
from hankel_interp.errors import (
    AmbiguousCommonZero,
    DegenerateLeadingCoefficient,
    DegreeOutOfRange,
    DuplicateNodes,
    FieldMismatch,
    InvalidTable,
    NotInCommonZeroRegime,
    ZeroRatio,
)
from hankel_interp.poly_interp import product

from helpers import TABLE_FIELDS, Q, arith_for, nonvanishing_nodes, random_nonzero, random_poly, random_value, raws, seeds
from oracles import sylvester_textbook


def P(*desc, spec=Q):
    return Polynomial.from_descending(spec, list(desc))


def textbook(p, q):
    return sylvester_textbook(raws(reversed(p.coeffs)), raws(reversed(q.coeffs)), arith_for(p.field))


class TestSylvester:
    def test_linear_pair(self):
        assert sylvester_resultant(P(1, -2), P(1, 3)) == 5

    def test_matches_root_product(self):
        p = Polynomial.from_roots(Q, [1, 2, -3], leading=2)
        q = P(1, 0, 5)
        assert sylvester_resultant(p, q) == 2**2 * product((q(r) for r in (1, 2, -3)), Q)

    def test_swap_sign(self):
        p, q = P(2, 1, -1, 4), P(3, 0, 1)
        assert sylvester_resultant(q, p) == sylvester_resultant(p, q) * (-1) ** (3 * 2)
        p, q = P(1, 1), P(1, 0, 1, 2)
        assert sylvester_resultant(q, p) == -sylvester_resultant(p, q)

    def test_errors(self):
        with pytest.raises(FieldMismatch):
            sylvester_resultant(P(1, 1), P(1, 1, spec=FieldSpec.prime(7)))
        with pytest.raises(DegenerateLeadingCoefficient):
            sylvester_resultant(P(3), P(1, 1))


class TestDiscriminant:
    def test_quadratics(self):
        assert discriminant(P(1, 0, 1)) == -4
        assert discriminant(P(3, -5, 2)) == 25 - 24
        assert discriminant(P(1, -2, 1)) == 0

    def test_depressed_cubic(self):
        assert discriminant(P(1, 0, -2, 3)) == -4 * (-2) ** 3 - 27 * 9

    def test_needs_degree_two(self):
        with pytest.raises(DegenerateLeadingCoefficient):
            discriminant(P(1, 1))

    @given(st.sampled_from(TABLE_FIELDS), seeds)
    def test_repeated_root_detected(self, spec, seed):
        rng = random.Random(seed)
        roots = [spec(rng.randint(-6, 6)) for _ in range(rng.randint(2, 5))]
        p = Polynomial.from_roots(spec, roots, leading=random_nonzero(rng, spec))
        assert (discriminant(p) == 0) == (len(set(roots)) < len(roots))


class TestSampleTable:
    def test_validation(self):
        with pytest.raises(DegreeOutOfRange):
            SampleRatioTable(Q, (1, 2), (1, 1), 0, 1)
        with pytest.raises(InvalidTable):
            SampleRatioTable(Q, (1, 2, 3), (1, 1, 1), 1, 2)
        with pytest.raises(DuplicateNodes):
            SampleRatioTable(Q, (1, 2, 1), (1, 1, 1), 1, 1)
        with pytest.raises(ZeroRatio):
            SampleRatioTable(Q, (1, 2, 3), (1, 0, 1), 1, 1)
        with pytest.raises(ZeroRatio):
            SampleRatioTable.from_polynomials(P(1, -2), P(1, 1), [0, 2, 3])

    def test_shared_root_over_rationals(self):
        p, q = P(1, -3, 2), P(1, 1, -6)  # (x-1)(x-2), (x+3)(x-2)
        s = SampleRatioTable.from_polynomials(p, q, [0, 3, 4, 5, 6])
        assert resultant_minors_from_samples(s)["H_n_ttau"] == 0
        assert common_zero_from_samples(s, 1, -3) == 2

    def test_shared_root_over_prime_field(self):
        F = FieldSpec.prime(101)
        p = Polynomial.from_roots(F, [4, 7, 9])
        q = Polynomial.from_roots(F, [4, 50], leading=3)
        s = SampleRatioTable.from_polynomials(p, q, [1, 2, 3, 5, 6, 8])
        assert common_zero_from_samples(s, p.coeff(3), p.coeff(2)) == 4

    def test_regime_errors(self):
        s = SampleRatioTable.from_polynomials(P(1, -1), P(1, 2), [0, 3, 5])
        with pytest.raises(NotInCommonZeroRegime):
            common_zero_from_samples(s, 1, -1)
        p = Polynomial.from_roots(Q, [1, 2, 5])
        q = Polynomial.from_roots(Q, [1, 2])
        s = SampleRatioTable.from_polynomials(p, q, [0, 3, 4, 6, 7, 8])
        with pytest.raises(AmbiguousCommonZero):
            common_zero_from_samples(s, 1, p.coeff(2))
        with pytest.raises(DegenerateLeadingCoefficient):
            common_zero_from_samples(s, 0, 1)


def _sign(e):
    return -1 if e % 2 else 1


def random_pair(rng, spec, shared=0):
    """(p, q, shared roots) with the given number of planted common roots."""
    n, m = rng.randint(max(1, shared), 4), rng.randint(max(1, shared), 4)
    roots = [random_value(rng, spec, span=30) for _ in range(shared)]
    common = Polynomial.from_roots(spec, roots)
    p = random_poly(rng, spec, n - shared) * common
    q = random_poly(rng, spec, m - shared) * common
    return p, q, roots


def minor_identities_hold(p, q, nodes):
    """Each sampled minor equals the Sylvester resultant times its known factor."""
    F = p.field
    n, m = p.degree, q.degree
    s = SampleRatioTable.from_polynomials(p, q, nodes)
    got = resultant_minors_from_samples(s)
    R = sylvester_resultant(p, q)
    pq = product((q(x) for x in nodes), F)
    pp = product((p(x) for x in nodes), F)
    p0, q0 = p.leading, q.leading
    s_tau = _sign(m * (m + 1) // 2)
    sr = _sign(m * n + n * (n + 1) // 2)
    return (
        got["H_m_tau"] == R * q0 * s_tau / pq
        and got["H_m1_tau"] == R * p0 * s_tau / pq
        and got["H_n_ttau"] == R * p0 * sr / pp
        and got["H_n1_ttau"] == R * q0 * sr / pp
    )


@given(st.sampled_from(TABLE_FIELDS), seeds, st.integers(0, 2))
def test_sampled_minor_identities(spec, seed, shared):
    rng = random.Random(seed)
    p, q, _ = random_pair(rng, spec, shared)
    nodes = nonvanishing_nodes(rng, spec, p * q, p.degree + q.degree + 1)
    assert minor_identities_hold(p, q, nodes)


@given(st.sampled_from(TABLE_FIELDS), seeds)
def test_matches_textbook_sylvester(spec, seed):
    rng = random.Random(seed)
    p, q, _ = random_pair(rng, spec, rng.randint(0, 1))
    assert sylvester_resultant(p, q).value == textbook(p, q)


def common_zero_recovered(rng, spec):
    """Plant one shared root in otherwise coprime p, q and read it back off the samples."""
    while True:
        p, q, (lam,) = random_pair(rng, spec, 1)
        pr, qr = p // Polynomial.from_roots(spec, [lam]), q // Polynomial.from_roots(spec, [lam])
        if pr.degree < 1 or qr.degree < 1 or sylvester_resultant(pr, qr):
            break
    nodes = nonvanishing_nodes(rng, spec, p * q, p.degree + q.degree + 1)
    s = SampleRatioTable.from_polynomials(p, q, nodes)
    return common_zero_from_samples(s, p.coeff(p.degree), p.coeff(p.degree - 1)) == lam


@given(st.sampled_from(TABLE_FIELDS), seeds)
def test_common_zero(spec, seed):
    assert common_zero_recovered(random.Random(seed), spec)


@given(st.sampled_from(TABLE_FIELDS), seeds, st.booleans())
def test_vanishing_verdict(spec, seed, shared):
    rng = random.Random(seed)
    p, q, _ = random_pair(rng, spec, int(shared))
    truly_shared = shared or textbook(p, q) == 0
    nodes = nonvanishing_nodes(rng, spec, p * q, p.degree + q.degree + 1)
    minors = resultant_minors_from_samples(SampleRatioTable.from_polynomials(p, q, nodes))
    assert (minors["H_n_ttau"] == 0) == truly_shared
    assert (sylvester_resultant(p, q) == 0) == truly_shared
