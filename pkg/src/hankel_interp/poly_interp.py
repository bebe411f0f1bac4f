"""Polynomial interpolation and the node-polynomial machinery.

Three interpolation routes are offered: Lagrange (the oracle), the
power-sum recursion that peels coefficients off the tau sequence, and the
Hankel-polynomial form built on the reciprocal-value sequence.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple

from .errors import DuplicateNodes, FieldMismatch, InvalidTable, SequenceTooShort, ZeroValueInTable
from .exact_field import FieldSpec, Scalar
from .hankel_core import GeneratorSequence, hankel_sequence_jj
from .polynomial import Polynomial


@dataclass(frozen=True)
class InterpolationTable:
    field: FieldSpec
    nodes: Tuple[Scalar, ...]
    values: Tuple[Scalar, ...]

    def __post_init__(self):
        nodes = tuple(self.field(x) for x in self.nodes)
        values = tuple(self.field(y) for y in self.values)
        if len(nodes) != len(values):
            raise InvalidTable(f"{len(nodes)} nodes but {len(values)} values")
        if len(nodes) < 2:
            raise InvalidTable("a table needs at least two rows")
        seen = {}
        for i, x in enumerate(nodes):
            if x in seen:
                raise DuplicateNodes(f"node {x} repeats in rows {seen[x] + 1} and {i + 1}",
                                     rows=[seen[x] + 1, i + 1])
            seen[x] = i
        object.__setattr__(self, "nodes", nodes)
        object.__setattr__(self, "values", values)

    @classmethod
    def of(cls, field: FieldSpec, nodes: Iterable, values: Iterable) -> "InterpolationTable":
        return cls(field, tuple(field(x) for x in nodes), tuple(field(y) for y in values))

    @property
    def size(self) -> int:
        return len(self.nodes)

    def __len__(self):
        return len(self.nodes)

    def rows(self):
        return zip(self.nodes, self.values)

    def zero_value_indices(self) -> List[int]:
        return [i for i, y in enumerate(self.values) if not y]

    def require_nonzero_values(self):
        bad = self.zero_value_indices()
        if bad:
            raise ZeroValueInTable(
                f"zero values at rows {[i + 1 for i in bad]}; reciprocals are undefined",
                indices=bad,
            )

    def without(self, indices: Iterable[int]) -> "InterpolationTable":
        drop = set(indices)
        keep = [i for i in range(self.size) if i not in drop]
        return InterpolationTable(
            self.field,
            tuple(self.nodes[i] for i in keep),
            tuple(self.values[i] for i in keep),
        )


def nodes_poly(table: InterpolationTable) -> Polynomial:
    """W(x), the monic polynomial vanishing exactly at the nodes."""
    return Polynomial.from_roots(table.field, table.nodes)


def wprime_at_nodes(table: InterpolationTable) -> List[Scalar]:
    """W'(x_j) as the product of differences to the other nodes."""
    out = []
    for j, xj in enumerate(table.nodes):
        acc = table.field.one
        for k, xk in enumerate(table.nodes):
            if k != j:
                acc = acc * (xj - xk)
        out.append(acc)
    return out


def _weighted_power_sums(nodes: Sequence[Scalar], weights: Sequence[Scalar], upto: int, field):
    if upto < 1:
        raise SequenceTooShort("a generator sequence needs at least two entries")
    sums = [field.zero] * (upto + 1)
    for x, w in zip(nodes, weights):
        term = w
        for k in range(upto + 1):
            sums[k] = sums[k] + term
            term = term * x
    return GeneratorSequence(field, tuple(sums))


def tau_seq(table: InterpolationTable, upto: int) -> GeneratorSequence:
    """tau_k = sum y_j x_j^k / W'(x_j) for k = 0..upto."""
    wp = wprime_at_nodes(table)
    weights = [y / d for y, d in zip(table.values, wp)]
    return _weighted_power_sums(table.nodes, weights, upto, table.field)


def tilde_tau_seq(table: InterpolationTable, upto: int) -> GeneratorSequence:
    """The same power sums with 1/y_j in place of y_j; all values must be nonzero."""
    table.require_nonzero_values()
    wp = wprime_at_nodes(table)
    weights = [(y * d).inverse() for y, d in zip(table.values, wp)]
    return _weighted_power_sums(table.nodes, weights, upto, table.field)


def interpolate_lagrange(table: InterpolationTable) -> Polynomial:
    """Sum of y_j W_j(x)/W'(x_j), with W_j obtained by dividing W by (x - x_j)."""
    F = table.field
    W = nodes_poly(table)
    wp = wprime_at_nodes(table)
    acc = Polynomial.zero(F)
    for x, y, d in zip(table.nodes, table.values, wp):
        if not y:
            continue
        Wj = W // Polynomial(F, [-x, 1])
        acc = acc + Wj * (y / d)
    return acc


def interpolate_sigma_recursion(table: InterpolationTable) -> Polynomial:
    """Peel the descending coefficients p_0..p_{N-1} off tau_0..tau_{N-1}.

    With sigma_k = sum x_j^(N+k-1)/W'(x_j), one has
    tau_k = p_k + p_{k-1} sigma_1 + ... + p_0 sigma_k.
    """
    F = table.field
    N = table.size
    wp = wprime_at_nodes(table)
    tau = tau_seq(table, N - 1).entries
    inv = [d.inverse() for d in wp]
    # sigma_1..sigma_{N-1}
    powers = [x ** N for x in table.nodes]
    sigma = [F.zero]
    for _ in range(1, N):
        sigma.append(sum((pw * w for pw, w in zip(powers, inv)), F.zero))
        powers = [pw * x for pw, x in zip(powers, table.nodes)]
    desc: List[Scalar] = []
    for k in range(N):
        acc = tau[k]
        for i in range(k):
            acc = acc - desc[i] * sigma[k - i]
        desc.append(acc)
    return Polynomial.from_descending(F, desc)


def _sign(exponent: int) -> int:
    return -1 if exponent % 2 else 1


def product(values: Iterable[Scalar], field: FieldSpec) -> Scalar:
    acc = field.one
    for v in values:
        acc = acc * v
    return acc


def interpolate_hankel(table: InterpolationTable) -> Polynomial:
    """(-1)^(N(N-1)/2) * prod(y) * H_{N-1}(x) over the reciprocal-value sequence."""
    table.require_nonzero_values()
    F = table.field
    N = table.size
    seq = tilde_tau_seq(table, 2 * N - 2)
    top = hankel_sequence_jj(seq, N - 1)[-1]
    scale = product(table.values, F) * _sign(N * (N - 1) // 2)
    return top.as_polynomial() * scale


def check_same_field(*items):
    fields = {it.field for it in items}
    if len(fields) > 1:
        raise FieldMismatch("inputs live in different fields")
