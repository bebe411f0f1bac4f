"""Shared helpers for building random exact test data."""

import os
import random
from fractions import Fraction

from hypothesis import strategies as st

from hankel_interp import FieldSpec
from oracles import Arith

DATA = os.path.join(os.path.dirname(__file__), "data")
Q = FieldSpec.rationals()
PRIMES = (3, 5, 7, 101, 10007)


def data_path(name):
    return os.path.join(DATA, name)


def arith_for(spec):
    return Arith(spec.modulus if spec.is_prime_field else None)


def raw(s):
    """Scalar -> Fraction (QQ) or int residue (GF(p))."""
    return s.value


def raws(xs):
    return [x.value for x in xs]


def random_value(rng, spec, zero_rate=0.0, span=9):
    if rng.random() < zero_rate:
        return spec(0)
    if spec.is_prime_field:
        return spec(rng.randrange(spec.modulus))
    return spec(Fraction(rng.randint(-span, span), rng.choice((1, 1, 1, 2, 3))))


def random_nonzero(rng, spec, span=9):
    while True:
        v = random_value(rng, spec, span=span)
        if v:
            return v


def distinct_nodes(rng, spec, count, span=None):
    pool = set()
    if spec.is_prime_field:
        assert count <= spec.modulus
        while len(pool) < count:
            pool.add(rng.randrange(spec.modulus))
    else:
        span = span or max(2 * count, 6)
        while len(pool) < count:
            pool.add(rng.randint(-span, span))
    out = sorted(pool)
    rng.shuffle(out)
    return [spec(x) for x in out]


fields = st.sampled_from([Q] + [FieldSpec.prime(p) for p in (7, 101, 10007)])
seeds = st.integers(min_value=0, max_value=2**32 - 1)


def _solve_affine(c, idx, fn, ar):
    """Set c[idx] so that fn(c) == 0, assuming fn is affine in c[idx]; False if it is constant."""
    c[idx] = ar.norm(0)
    f0 = fn(c)
    c[idx] = ar.norm(1)
    slope = ar.norm(fn(c) - f0)
    if slope == 0:
        c[idx] = ar.norm(0)
        return False
    c[idx] = ar.div(-f0, slope)
    return True


SEQUENCE_MODES = ("generic", "sparse", "force_minor", "force_minor_and_h1", "low_rank")


def random_sequence(rng, spec, kmax, mode="generic"):
    """Raw entries c_0..c_{2kmax-1} as Fractions or residues.

    ``force_minor`` makes H_{k-1} vanish for a random k; ``force_minor_and_h1``
    additionally zeroes the x^{k-2} coefficient of the order-(k-1) polynomial.
    ``low_rank`` builds an exponential sum with fewer terms than kmax.
    """
    from oracles import hankel_minor, hankel_poly

    ar = arith_for(spec)
    length = 2 * kmax
    if mode == "low_rank":
        r = rng.randint(1, max(1, kmax - 1))
        lams = [raw(random_value(rng, spec, span=4)) for _ in range(r)]
        ws = [raw(random_nonzero(rng, spec, span=4)) for _ in range(r)]
        return [ar.norm(sum(w * l ** j for w, l in zip(ws, lams))) if ar.p is None
                else sum(w * pow(l, j, ar.p) for w, l in zip(ws, lams)) % ar.p
                for j in range(length)]
    zero_rate = 0.4 if mode == "sparse" else 0.05
    c = [raw(random_value(rng, spec, zero_rate=zero_rate)) for _ in range(length)]
    if mode in ("force_minor", "force_minor_and_h1") and kmax >= 3:
        k = rng.randint(3, kmax)
        _solve_affine(c, 2 * k - 4, lambda s: hankel_minor(s, k - 1, ar), ar)
        if mode == "force_minor_and_h1":
            _solve_affine(c, 2 * k - 3, lambda s: hankel_poly(s, k - 1, ar)[k - 2], ar)
    return c


def random_poly(rng, spec, degree, span=6):
    from hankel_interp import Polynomial

    coeffs = [random_value(rng, spec, span=span) for _ in range(degree)] + [random_nonzero(rng, spec, span=span)]
    return Polynomial(spec, coeffs)


def nonvanishing_nodes(rng, spec, poly, count, avoid=()):
    """Distinct nodes where ``poly`` is nonzero, avoiding the given values."""
    bad = {spec(a) for a in avoid}
    out = []
    pool = distinct_nodes(rng, spec, min(spec.modulus, 8 * count + 20) if spec.is_prime_field else 8 * count + 20)
    for x in pool:
        if x not in bad and poly(x):
            out.append(x)
            if len(out) == count:
                return out
    raise AssertionError("ran out of nodes")


def polynomial_table(rng, spec, N, degree):
    """(table, p): N rows sampled from a random p of exact degree with all values nonzero."""
    from hankel_interp import InterpolationTable

    p = random_poly(rng, spec, degree)
    nodes = nonvanishing_nodes(rng, spec, p, N)
    return InterpolationTable.of(spec, nodes, [p(x) for x in nodes]), p


TABLE_FIELDS = (Q, FieldSpec.prime(101), FieldSpec.prime(10007))


def corrupted_table(rng, spec, N, n, E, nonzero=True):
    """(table, p, error indices): p of degree n sampled at N nodes with E values replaced.

    With ``nonzero`` every given and every true value is nonzero.
    """
    from hankel_interp import InterpolationTable

    p = random_poly(rng, spec, n)
    nodes = nonvanishing_nodes(rng, spec, p, N) if nonzero else distinct_nodes(rng, spec, N)
    values = [p(x) for x in nodes]
    bad = sorted(rng.sample(range(N), E))
    for i in bad:
        while True:
            v = random_nonzero(rng, spec, span=20) if nonzero else random_value(rng, spec, zero_rate=0.2, span=20)
            if v != values[i]:
                values[i] = v
                break
    return InterpolationTable.of(spec, nodes, values), p, bad
