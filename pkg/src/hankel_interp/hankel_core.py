"""Hankel determinants and Hankel polynomials.

For a generator sequence c_0, c_1, ... the order-k Hankel polynomial is the
(k+1)x(k+1) determinant whose first k rows are ``c_{i+j}`` and whose last row
is ``1, x, ..., x^k``; its leading coefficient is the Hankel minor H_k.

Two routes are provided: a naive one (fraction-free elimination on each
cofactor) and the Jacobi-Joachimsthal three-term recursion, which also
handles a vanishing H_{k-1} and falls back to the naive route on runs of
vanishing minors the recursion does not cover.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, List, Sequence, Tuple

from .errors import FieldMismatch, SequenceTooShort
from .exact_field import FieldSpec, Scalar
from .polynomial import Polynomial


@dataclass(frozen=True)
class GeneratorSequence:
    field: FieldSpec
    entries: Tuple[Scalar, ...]

    def __post_init__(self):
        entries = tuple(self.field(c) for c in self.entries)
        if any(c.field != self.field for c in entries):
            raise FieldMismatch("generator entries must share the sequence field")
        if len(entries) < 2:
            raise SequenceTooShort("a generator sequence needs at least c_0 and c_1")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def of(cls, field: FieldSpec, values: Iterable) -> "GeneratorSequence":
        return cls(field, tuple(field(v) for v in values))

    @property
    def last_index(self) -> int:
        """L, the index of the last entry c_L."""
        return len(self.entries) - 1

    @property
    def max_order(self) -> int:
        """Largest k with 2k-1 <= L, i.e. the highest Hankel polynomial available."""
        return (self.last_index + 1) // 2

    def __getitem__(self, i):
        return self.entries[i]

    def __len__(self):
        return len(self.entries)

    def shifted(self, x0) -> "GeneratorSequence":
        """The sequence c_{j+1} - x0*c_j."""
        x0 = self.field(x0)
        e = self.entries
        return GeneratorSequence(self.field, tuple(e[j + 1] - x0 * e[j] for j in range(len(e) - 1)))


@dataclass(frozen=True)
class HankelPolynomial:
    """Order-k Hankel polynomial with all k+1 coefficient slots kept.

    ``coeffs`` is ascending; ``h(i)`` gives the coefficient of
    ``x^(k-i)``, so ``h(0)`` is the leading minor H_k. ``via`` records
    which route produced it (naive, jj, degenerate branches, fallback).
    """

    order: int
    coeffs: Tuple[Scalar, ...]
    via: str = field(default="naive", compare=False)

    def __post_init__(self):
        if len(self.coeffs) != self.order + 1:
            raise ValueError(f"order {self.order} needs {self.order + 1} coefficient slots")

    @property
    def field(self) -> FieldSpec:
        return self.coeffs[0].field

    @property
    def leading_minor(self) -> Scalar:
        return self.coeffs[self.order]

    def h(self, i: int) -> Scalar:
        if 0 <= i <= self.order:
            return self.coeffs[self.order - i]
        return self.field.zero

    def is_identically_zero(self) -> bool:
        return not any(self.coeffs)

    def as_polynomial(self) -> Polynomial:
        return Polynomial._raw(self.field, self.coeffs)

    @classmethod
    def from_polynomial(cls, k: int, p: Polynomial, via: str) -> "HankelPolynomial":
        if p.degree > k:
            raise ValueError(f"degree {p.degree} exceeds order {k}")
        return cls(k, tuple(p.coeff(i) for i in range(k + 1)), via)

    def __call__(self, x) -> Scalar:
        return self.as_polynomial()(x)


def det_bareiss(matrix: Sequence[Sequence[Scalar]], field: FieldSpec) -> Scalar:
    """Determinant by fraction-free (Bareiss) elimination with row pivoting."""
    n = len(matrix)
    if n == 0:
        return field.one
    m = [[field(v) for v in row] for row in matrix]
    if any(len(row) != n for row in m):
        raise ValueError("determinant of a non-square matrix")
    sign = 1
    prev = field.one
    for k in range(n - 1):
        if not m[k][k]:
            for r in range(k + 1, n):
                if m[r][k]:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return field.zero
        pivot = m[k][k]
        for i in range(k + 1, n):
            mik = m[i][k]
            row_i, row_k = m[i], m[k]
            for j in range(k + 1, n):
                row_i[j] = (pivot * row_i[j] - mik * row_k[j]) / prev
        prev = pivot
    d = m[n - 1][n - 1]
    return d if sign > 0 else -d


def _need(seq: GeneratorSequence, last: int, what: str):
    if last > seq.last_index:
        raise SequenceTooShort(
            f"{what} needs c_0..c_{last} but the sequence ends at c_{seq.last_index}"
        )


def hankel_minor_naive(seq: GeneratorSequence, k: int) -> Scalar:
    """H_k = det[c_{i+j}] for i, j in 0..k-1 (H_0 = 1)."""
    if k < 0:
        raise ValueError("order must be non-negative")
    if k == 0:
        return seq.field.one
    _need(seq, 2 * k - 2, f"H_{k}")
    c = seq.entries
    return det_bareiss([[c[i + j] for j in range(k)] for i in range(k)], seq.field)


def hankel_poly_naive(seq: GeneratorSequence, k: int) -> HankelPolynomial:
    """Expand the defining determinant along its last row, one minor per coefficient."""
    if k < 0:
        raise ValueError("order must be non-negative")
    F = seq.field
    if k == 0:
        return HankelPolynomial(0, (F.one,), "naive")
    _need(seq, 2 * k - 1, f"the order-{k} Hankel polynomial")
    c = seq.entries
    rows = [[c[i + j] for j in range(k + 1)] for i in range(k)]
    coeffs = []
    for j in range(k + 1):
        minor = [row[:j] + row[j + 1:] for row in rows]
        d = det_bareiss(minor, F)
        coeffs.append(d if (k + j) % 2 == 0 else -d)
    return HankelPolynomial(k, tuple(coeffs), "naive")


def next_leading_pair(seq: GeneratorSequence, prev: HankelPolynomial) -> Tuple[Scalar, Scalar]:
    """(H_k, h_{k,1}) from the coefficients of the order-(k-1) polynomial.

    Both are the defining determinant of H_{k-1}(x) with the power row
    replaced by c_{k-1+i} (resp. c_{k+i}), so they are linear in its
    coefficients.
    """
    k = prev.order + 1
    c = seq.entries
    _need(seq, 2 * k - 1, f"h_{k},1")
    hk0 = sum((c[k - 1 + i] * a for i, a in enumerate(prev.coeffs)), seq.field.zero)
    hk1 = -sum((c[k + i] * a for i, a in enumerate(prev.coeffs)), seq.field.zero)
    return hk0, hk1


def degenerate_h2(seq: GeneratorSequence, two_back: HankelPolynomial) -> Scalar:
    """h_{k,2} from H_{k-2}(x), valid when H_{k-1} = 0 and H_{k-2} != 0."""
    k = two_back.order + 2
    c = seq.entries
    _need(seq, 2 * k - 2, f"h_{k},2")
    s = sum((c[k + i] * a for i, a in enumerate(two_back.coeffs)), seq.field.zero)
    return -(s * s) / two_back.leading_minor


def _det3(m) -> Scalar:
    return (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )


def jj_step(
    seq: GeneratorSequence,
    p3: HankelPolynomial,
    p2: HankelPolynomial,
    p1: HankelPolynomial,
) -> HankelPolynomial:
    """Order-k polynomial from orders k-3, k-2, k-1 (k >= 3).

    Uses the three-term identity when H_{k-1} != 0, the degenerate formulas
    when H_{k-1} = 0 but H_{k-2} != 0, and a naive recomputation otherwise.
    """
    k = p1.order + 1
    F = seq.field
    Hk1 = p1.leading_minor
    if Hk1:
        Hk, hk1 = next_leading_pair(seq, p1)
        # H_k^2 H_{k-2} + (H_k h_{k-1,1} - H_{k-1} h_{k1} - H_k H_{k-1} x) H_{k-1} + H_{k-1}^2 H_k == 0
        lin = Polynomial._raw(F, (Hk * p1.h(1) - Hk1 * hk1, -(Hk * Hk1)))
        num = p2.as_polynomial() * (Hk * Hk) + lin * p1.as_polynomial()
        return HankelPolynomial.from_polynomial(k, -num / (Hk1 * Hk1), "jj")

    Hk2 = p2.leading_minor
    if not Hk2:
        return HankelPolynomial(k, hankel_poly_naive(seq, k).coeffs, "fallback")

    hk2 = degenerate_h2(seq, p2)
    hprev1 = p1.h(1)
    if not hprev1:
        return HankelPolynomial.from_polynomial(k, p2.as_polynomial() * (hk2 / Hk2), "degenerate-zero")

    Hk = -(hprev1 * hprev1) / Hk2
    _, hk1 = next_leading_pair(seq, p1)
    a1 = p2.h(1)
    z = F.zero
    # 4x4 determinant [[H, 0, 0, H_k], [a1, H, 0, h_k1], [a2, a1, H, h_k2], [x^2, x, 1, 0]]
    # expanded along its last row. Its x^2 and x cofactors do not involve h_k2.
    m_x2 = _det3([[z, z, Hk], [Hk2, z, hk1], [a1, Hk2, z]])
    m_x1 = _det3([[Hk2, z, Hk], [a1, z, hk1], [p2.h(2), Hk2, z]])
    known = (
        p3.as_polynomial() * (Hk * Hk2 * hprev1)
        - Polynomial._raw(F, (z, m_x1, -m_x2)) * p2.as_polynomial()
    )
    # The constant cofactor carries h_k2, for which the closed form holds only
    # when h_{k-1,1} = 0. Fix it instead by sum_i coeff_i * c_{k-1+i} = 0, which
    # every order-k Hankel polynomial satisfies; on H_{k-2}(x) the same sum is -h_{k-1,1}.
    c = seq.entries
    moment = sum((c[k - 1 + i] * a for i, a in enumerate(known.coeffs)), z)
    const = -moment / hprev1
    num = known - p2.as_polynomial() * const
    return HankelPolynomial.from_polynomial(k, num / (Hk2 * Hk2 * Hk2), "degenerate")


def hankel_sequence_jj(seq: GeneratorSequence, kmax: int) -> List[HankelPolynomial]:
    """Hankel polynomials of orders 1..kmax via the three-term recursion."""
    return hankel_sequence_with_zero(seq, kmax)[1:]


def hankel_sequence_with_zero(seq: GeneratorSequence, kmax: int) -> List[HankelPolynomial]:
    """Same as :func:`hankel_sequence_jj` but with the order-0 polynomial (== 1) first."""
    if kmax < 0:
        raise ValueError("kmax must be non-negative")
    _need(seq, 2 * kmax - 1, f"orders up to {kmax}")
    out = [HankelPolynomial(0, (seq.field.one,), "naive")]
    for k in range(1, kmax + 1):
        if k <= 2:
            out.append(hankel_poly_naive(seq, k))
        else:
            out.append(jj_step(seq, out[k - 3], out[k - 2], out[k - 1]))
    return out


def jj_identity_residual(
    p2: HankelPolynomial, p1: HankelPolynomial, p0: HankelPolynomial
) -> Polynomial:
    """Left side of the three-term identity for orders k-2, k-1, k; zero when it holds."""
    F = p0.field
    Hk, Hk1 = p0.leading_minor, p1.leading_minor
    lin = Polynomial._raw(F, (Hk * p1.h(1) - Hk1 * p0.h(1), -(Hk * Hk1)))
    return (
        p2.as_polynomial() * (Hk * Hk)
        + lin * p1.as_polynomial()
        + p0.as_polynomial() * (Hk1 * Hk1)
    )
