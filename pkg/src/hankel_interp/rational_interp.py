"""Rational interpolation p/q with deg p + deg q = N-1.

For a split (n, m) with n + m + 1 = N the numerator is H_{m+1}(tau) times
the order-n Hankel polynomial over the reciprocal-value sequence, and the
denominator is H_n(reciprocal) times the order-m Hankel polynomial over tau.
Every split reuses the same two recursion runs. Validity is certified by
evaluating at the nodes, which catches unattainable points.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, List, Optional, Tuple

from .errors import DegreeOutOfRange, TableTooLargeForOracle
from .exact_field import Scalar
from .hankel_core import HankelPolynomial, hankel_sequence_with_zero, next_leading_pair
from .poly_interp import InterpolationTable, nodes_poly, tau_seq, tilde_tau_seq
from .polynomial import Polynomial

ORACLE_MAX_ROWS = 12


@dataclass
class RationalInterpolant:
    n: int
    m: int
    numerator: Polynomial
    denominator: Polynomial
    valid: bool
    failure_nodes: List[Scalar] = field(default_factory=list)
    degenerate: bool = False
    diagnostics: Dict[str, object] = field(default_factory=dict)

    def __call__(self, x) -> Scalar:
        return self.numerator(x) / self.denominator(x)


def normalize_pair(num: Polynomial, den: Polynomial) -> Tuple[Polynomial, Polynomial]:
    """Canonical representative of (num, den) up to a common nonzero factor.

    Over QQ: integer coefficients with joint content 1 and a positive leading
    denominator coefficient. Over GF(p): monic denominator. When the
    denominator vanishes the numerator's leading coefficient plays its role.
    """
    F = num.field
    anchor = den if not den.is_zero() else num
    if anchor.is_zero():
        return num, den
    if F.is_prime_field:
        s = anchor.leading.inverse()
        return num * s, den * s
    coeffs = num.coeffs + den.coeffs
    lcm = 1
    for c in coeffs:
        lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
    g = 0
    for c in coeffs:
        g = math.gcd(g, c.numerator * (lcm // c.denominator))
    sign = -1 if anchor.leading.numerator < 0 else 1
    scale = F(sign * lcm) / F(g)
    return num * scale, den * scale


def _certify(table: InterpolationTable, num: Polynomial, den: Polynomial) -> List[Scalar]:
    bad = []
    for x, y in table.rows():
        qx = den(x)
        if not qx or num(x) != y * qx:
            bad.append(x)
    return bad


def _check_split(table: InterpolationTable, n: int) -> int:
    N = table.size
    if not isinstance(n, int) or n < 0 or n > N - 1:
        raise DegreeOutOfRange(f"numerator degree {n} outside 0..{N - 1}")
    return N - 1 - n


class _SharedRuns:
    """Both Hankel families (orders 0..N-1) plus H_N(tau), computed once."""

    def __init__(self, table: InterpolationTable):
        table.require_nonzero_values()
        N = table.size
        upto = max(2 * N - 2, 1)
        # one extra entry: the leading pair of order N reads tau up to 2N-1
        self.tau = tau_seq(table, upto + 1)
        self.tilde = tilde_tau_seq(table, upto)
        self.tau_polys = hankel_sequence_with_zero(self.tau, N - 1)
        self.tilde_polys = hankel_sequence_with_zero(self.tilde, N - 1)
        self.tau_top_minor, _ = next_leading_pair(self.tau, self.tau_polys[N - 1])

    def tau_minor(self, k: int) -> Scalar:
        if k < len(self.tau_polys):
            return self.tau_polys[k].leading_minor
        return self.tau_top_minor


def _build(table: InterpolationTable, runs: _SharedRuns, n: int) -> RationalInterpolant:
    m = _check_split(table, n)
    h_tau_m1 = runs.tau_minor(m + 1)
    h_tilde_n = runs.tilde_polys[n].leading_minor
    hn_tilde: HankelPolynomial = runs.tilde_polys[n]
    hm_tau: HankelPolynomial = runs.tau_polys[m]
    raw_num = hn_tilde.as_polynomial() * h_tau_m1
    raw_den = hm_tau.as_polynomial() * h_tilde_n
    diagnostics = {
        "H_m1_tau": h_tau_m1,
        "H_n_tilde_tau": h_tilde_n,
        "raw_numerator": raw_num,
        "raw_denominator": raw_den,
        "hankel_numerator": hn_tilde.as_polynomial(),
        "hankel_denominator": hm_tau.as_polynomial(),
    }
    degenerate = not h_tilde_n
    num, den = normalize_pair(raw_num, raw_den)
    failures = _certify(table, num, den)
    unattainable = [x for x in table.nodes if not num(x) and not den(x)]
    diagnostics["unattainable_nodes"] = unattainable
    valid = not degenerate and not failures
    return RationalInterpolant(n, m, num, den, valid, failures, degenerate, diagnostics)


def rational_interpolate(table: InterpolationTable, n: int) -> RationalInterpolant:
    """The interpolant of numerator degree n (denominator degree bound N-1-n)."""
    _check_split(table, n)
    return _build(table, _SharedRuns(table), n)


def rational_family(table: InterpolationTable) -> List[RationalInterpolant]:
    """All N splits n = 0..N-1 from one pair of recursion runs."""
    runs = _SharedRuns(table)
    return [_build(table, runs, n) for n in range(table.size)]


def cauchy_oracle(table: InterpolationTable, n: int) -> RationalInterpolant:
    """Subset-sum formulas for numerator and denominator; small tables only."""
    N = table.size
    if N > ORACLE_MAX_ROWS:
        raise TableTooLargeForOracle(f"{N} rows exceed the oracle limit of {ORACLE_MAX_ROWS}")
    m = _check_split(table, n)
    F = table.field
    X, Y = table.nodes, table.values
    W = nodes_poly(table)
    num = Polynomial.zero(F)
    for S in combinations(range(N), m + 1):
        inside = Polynomial.from_roots(F, [X[s] for s in S])
        rest = W // inside
        weight = F.one
        for s in S:
            weight = weight * Y[s] / rest(X[s])
        num = num + rest * weight
    den = Polynomial.zero(F)
    for S in combinations(range(N), m):
        part = Polynomial.from_roots(F, [X[s] for s in S])
        weight = F.one
        for s in S:
            weight = weight * Y[s]
        for j in range(N):
            if j not in S:
                weight = weight / part(X[j])
        den = den + part * weight
    if (m * n) % 2:
        den = -den
    raw_num, raw_den = num, den
    num, den = normalize_pair(num, den)
    failures = _certify(table, num, den)
    return RationalInterpolant(
        n, m, num, den, not failures and not den.is_zero(), failures, den.is_zero(),
        {"raw_numerator": raw_num, "raw_denominator": raw_den},
    )
