"""Resultants, discriminants, and resultant minors read off evaluation samples.

From the ratios p(x_j)/q(x_j) at N = n+m+1 nodes one builds tau (from the
ratios) and its reciprocal counterpart. The leading Hankel minors H_m, H_{m+1}
over tau and H_n, H_{n+1} over the reciprocals are the resultant times
factors that never vanish for nonzero samples, so a vanishing minor
certifies a shared root. The coefficient-level Sylvester determinant is
kept as the reference.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, Sequence, Tuple

from .errors import (
    AmbiguousCommonZero,
    DegenerateLeadingCoefficient,
    DegreeOutOfRange,
    DuplicateNodes,
    FieldMismatch,
    InvalidTable,
    NotInCommonZeroRegime,
    ZeroRatio,
)
from .exact_field import FieldSpec, Scalar
from .hankel_core import det_bareiss, hankel_minor_naive, hankel_sequence_with_zero
from .poly_interp import InterpolationTable, tau_seq, tilde_tau_seq
from .polynomial import Polynomial


@dataclass(frozen=True)
class SampleRatioTable:
    field: FieldSpec
    nodes: Tuple[Scalar, ...]
    ratios: Tuple[Scalar, ...]
    n: int
    m: int

    def __post_init__(self):
        nodes = tuple(self.field(x) for x in self.nodes)
        ratios = tuple(self.field(r) for r in self.ratios)
        if self.n < 1 or self.m < 1:
            raise DegreeOutOfRange("both declared degrees must be at least 1")
        if len(nodes) != len(ratios):
            raise InvalidTable(f"{len(nodes)} nodes but {len(ratios)} ratios")
        if len(nodes) != self.n + self.m + 1:
            raise InvalidTable(
                f"{len(nodes)} samples given; degrees {self.n}, {self.m} need {self.n + self.m + 1}"
            )
        seen = {}
        for i, x in enumerate(nodes):
            if x in seen:
                raise DuplicateNodes(f"node {x} repeats in rows {seen[x] + 1} and {i + 1}",
                                     rows=[seen[x] + 1, i + 1])
            seen[x] = i
        zeros = [i for i, r in enumerate(ratios) if not r]
        if zeros:
            raise ZeroRatio(f"zero ratios at rows {[i + 1 for i in zeros]}", indices=zeros)
        object.__setattr__(self, "nodes", nodes)
        object.__setattr__(self, "ratios", ratios)

    @classmethod
    def from_polynomials(cls, p: Polynomial, q: Polynomial, nodes: Iterable) -> "SampleRatioTable":
        """Sample p/q at the nodes; both must be nonzero there."""
        F = p.field
        xs = tuple(F(x) for x in nodes)
        bad = [i for i, x in enumerate(xs) if not p(x) or not q(x)]
        if bad:
            raise ZeroRatio(f"p or q vanishes at rows {[i + 1 for i in bad]}", indices=bad)
        return cls(F, xs, tuple(p(x) / q(x) for x in xs), p.degree, q.degree)

    def as_table(self) -> InterpolationTable:
        return InterpolationTable(self.field, self.nodes, self.ratios)


def _sylvester_det(p_desc: Sequence[Scalar], q_desc: Sequence[Scalar], field: FieldSpec) -> Scalar:
    """Determinant of the Sylvester matrix for formal degrees len-1 of each input.

    Rows follow the displayed layout: m shifted copies of p top-down, then n
    copies of q shifted in the opposite direction. Reordering the q block
    into the textbook layout costs the sign (-1)^(n(n-1)/2), applied here so
    the result equals p_0^m times the product of q over the roots of p.
    """
    n, m = len(p_desc) - 1, len(q_desc) - 1
    size = n + m
    z = field.zero
    rows = []
    for i in range(m):
        rows.append([z] * i + list(p_desc) + [z] * (size - n - 1 - i))
    for i in range(n - 1, -1, -1):
        rows.append([z] * i + list(q_desc) + [z] * (size - m - 1 - i))
    d = det_bareiss(rows, field)
    return -d if (n * (n - 1) // 2) % 2 else d


def _descending(p: Polynomial, degree: int):
    return [p.coeff(i) for i in range(degree, -1, -1)]


def sylvester_resultant(p: Polynomial, q: Polynomial) -> Scalar:
    """Res(p, q) = p_0^m prod q(lambda_i) from the Sylvester determinant."""
    if p.field != q.field:
        raise FieldMismatch(f"{p.field} vs {q.field}")
    if p.degree < 1 or q.degree < 1:
        raise DegenerateLeadingCoefficient("both polynomials need degree at least 1")
    return _sylvester_det(_descending(p, p.degree), _descending(q, q.degree), p.field)


def discriminant(p: Polynomial) -> Scalar:
    """(-1)^(n(n-1)/2) / p_0 * Res(p, p'), with p' taken at formal degree n-1."""
    n = p.degree
    if n < 2:
        raise DegenerateLeadingCoefficient("the discriminant needs degree at least 2")
    res = _sylvester_det(_descending(p, n), _descending(p.derivative(), n - 1), p.field)
    d = res / p.leading
    return -d if (n * (n - 1) // 2) % 2 else d


def _sequences(samples: SampleRatioTable):
    table = samples.as_table()
    return tau_seq(table, max(2 * samples.m, 1)), tilde_tau_seq(table, max(2 * samples.n, 1))


def resultant_minors_from_samples(samples: SampleRatioTable) -> Dict[str, Scalar]:
    """H_m, H_{m+1} over tau and H_n, H_{n+1} over the reciprocal sequence."""
    tau, tilde = _sequences(samples)
    n, m = samples.n, samples.m
    return {
        "H_m_tau": hankel_minor_naive(tau, m),
        "H_m1_tau": hankel_minor_naive(tau, m + 1),
        "H_n_ttau": hankel_minor_naive(tilde, n),
        "H_n1_ttau": hankel_minor_naive(tilde, n + 1),
    }


def common_zero_from_samples(samples: SampleRatioTable, p0, p1) -> Scalar:
    """The shared root of p and q when it is unique.

    Requires H_n = 0 and H_{n-1} != 0 over the reciprocal sequence; then
    lambda = -p_1/p_0 + h_{n-1,1}/H_{n-1}, where h_{n-1,1} is the
    x^(n-2) coefficient of the order-(n-1) Hankel polynomial.
    """
    F = samples.field
    p0, p1 = F(p0), F(p1)
    if not p0:
        raise DegenerateLeadingCoefficient("p_0 must be nonzero")
    n = samples.n
    _, tilde = _sequences(samples)
    family = hankel_sequence_with_zero(tilde, n)
    if family[n].leading_minor:
        raise NotInCommonZeroRegime("H_n over the reciprocal sequence is nonzero: no shared root")
    below = family[n - 1]
    if not below.leading_minor:
        raise AmbiguousCommonZero("H_{n-1} also vanishes: the shared root is not unique")
    return -p1 / p0 + below.h(1) / below.leading_minor
