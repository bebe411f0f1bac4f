"""Detect and correct corrupted values in a redundant interpolation table.

A table generated by a degree-n polynomial with E wrong values leaves two
fingerprints. Over the tau sequence the order-E Hankel polynomial is a
multiple of the error locator (the product of x - x_e over the bad nodes).
Over the reciprocal-value sequence the order-(n+E) one is a multiple of
p(x) times that locator, with a band of identically zero polynomials after
it. Decoding searches E upward, takes the tau-side locator as a candidate,
and accepts it only after re-interpolating the surviving rows.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import InsufficientRedundancy, NoConsistentLocator
from .exact_field import Scalar
from .hankel_core import HankelPolynomial, hankel_sequence_with_zero
from .poly_interp import InterpolationTable, interpolate_lagrange, tau_seq, tilde_tau_seq
from .polynomial import Polynomial

CLEAN = "Clean"
CORRECTED = "Corrected"
UNDECODABLE = "Undecodable"


@dataclass
class CorrectionReport:
    status: str
    degree: Optional[int]
    error_count: int = 0
    error_nodes: List[Scalar] = field(default_factory=list)
    error_indices: List[int] = field(default_factory=list)
    locator: Optional[Polynomial] = None
    recovered: Optional[Polynomial] = None
    diagnostics: Dict[str, object] = field(default_factory=dict)

    def corrections(self, table: InterpolationTable) -> List[Tuple[Scalar, Scalar, Scalar]]:
        """(node, given value, corrected value) for every located error."""
        if self.recovered is None:
            return []
        return [
            (table.nodes[i], table.values[i], self.recovered(table.nodes[i]))
            for i in self.error_indices
        ]


def classify(polys: Sequence[HankelPolynomial]) -> List[Tuple[int, str]]:
    """Label each order as zero, proportional (to an earlier nonzero one), full or deficient."""
    out = []
    seen: List[Polynomial] = []
    for hp in polys:
        p = hp.as_polynomial()
        if p.is_zero():
            label = "zero"
        elif any(p.is_proportional(q) for q in seen):
            label = "proportional"
        elif p.degree == hp.order:
            label = "full"
        else:
            label = "deficient"
        if not p.is_zero():
            seen.append(p)
        out.append((hp.order, label))
    return out


def tilde_hankel_family(table: InterpolationTable) -> List[HankelPolynomial]:
    """Orders 0..N-1 over the reciprocal-value sequence."""
    N = table.size
    seq = tilde_tau_seq(table, max(2 * N - 3, 1))
    return hankel_sequence_with_zero(seq, N - 1)


def degree_scan(table: InterpolationTable) -> Optional[int]:
    """Least n < N-1 with orders n+1..N-2 identically zero and order n proportional
    to order N-1; None when the table is not redundant."""
    return _scan(tilde_hankel_family(table))


def _scan(family: Sequence[HankelPolynomial]) -> Optional[int]:
    top = family[-1].as_polynomial()
    last = len(family) - 1
    if top.is_zero():
        return None
    # walk down from N-2 while the band stays identically zero
    for n in range(last - 1, -1, -1):
        p = family[n].as_polynomial()
        if p.is_zero():
            continue
        return n if p.is_proportional(top) else None
    return None


def _node_roots(poly: Polynomial, nodes: Sequence[Scalar]) -> Optional[List[int]]:
    """Indices of nodes at which ``poly`` vanishes, if they account for its full degree."""
    hits = [i for i, x in enumerate(nodes) if not poly(x)]
    return hits if len(hits) == poly.degree else None


def _try_locator(table, hp: HankelPolynomial, max_degree: Optional[int]):
    """Validate one candidate; returns (indices, locator, recovered) or None."""
    E = hp.order
    poly = hp.as_polynomial()
    if poly.degree != E:
        return None
    idx = _node_roots(poly, table.nodes)
    if idx is None:
        return None
    kept = table.without(idx)
    rec = interpolate_lagrange(kept)
    bound = table.size - 2 * E - 1 if max_degree is None else max_degree
    if rec.degree > bound or (max_degree is None and rec.degree > table.size - 2):
        return None
    if any(rec(table.nodes[i]) == table.values[i] for i in idx):
        # a "corrected" value equal to the given one is not an error
        return None
    return idx, poly.monic(), rec


def _tau_family(table: InterpolationTable, emax: int) -> List[HankelPolynomial]:
    seq = tau_seq(table, max(2 * emax - 1, 1))
    return hankel_sequence_with_zero(seq, emax)


def locator_from_tau(table: InterpolationTable, n: int) -> Tuple[int, Polynomial]:
    """Smallest error count E whose tau-side Hankel polynomial is a validated locator.

    Candidates must have degree exactly E, vanish at E table nodes, and leave
    N-E rows that a polynomial of degree <= n interpolates.
    """
    emax = _max_errors(table, n)
    for hp in _tau_family(table, emax):
        hit = _try_locator(table, hp, n)
        if hit is not None:
            return hp.order, hit[1]
    raise NoConsistentLocator(f"no locator with at most {emax} errors fits degree {n}")


def _max_errors(table: InterpolationTable, n: int) -> int:
    N = table.size
    if n < 0 or n >= N - 1:
        raise InsufficientRedundancy(f"degree {n} leaves no redundancy in {N} rows")
    return (N - n - 1) // 2


def correct_table(
    table: InterpolationTable, n: Optional[int] = None, max_errors: Optional[int] = None
) -> CorrectionReport:
    """Locate and repair corrupted rows; ``n=None`` detects the degree too.

    With a given degree the search covers E <= (N-n-1)/2, where decoding is
    unique. Without one, all values must be nonzero, E grows from 0 and the
    first E whose recovered degree d satisfies d < N-2E wins (so ties go to
    the smaller E, then the smaller degree).
    """
    N = table.size
    diagnostics: Dict[str, object] = {}
    auto = n is None
    if auto:
        table.require_nonzero_values()
        emax = (N - 1) // 2
    else:
        emax = _max_errors(table, n)
    if max_errors is not None:
        if max_errors < 0:
            raise InsufficientRedundancy("max_errors must be non-negative")
        emax = min(emax, max_errors)

    tilde = None
    if not table.zero_value_indices():
        tilde = tilde_hankel_family(table)
        diagnostics["tilde_tau"] = classify(tilde[1:])
        diagnostics["clean_degree_scan"] = _scan(tilde)
    taus = _tau_family(table, emax)
    diagnostics["tau"] = classify(taus[1:])

    found = None
    for hp in taus:
        found = _try_locator(table, hp, None if auto else n)
        if found is not None:
            break
    if found is None:
        diagnostics["reason"] = f"no consistent locator with at most {emax} errors"
        return CorrectionReport(UNDECODABLE, n, diagnostics=diagnostics)

    idx, locator, recovered = found
    E = len(idx)
    d = recovered.degree
    xcheck = _cross_check(table, tilde, recovered, locator, idx)
    diagnostics["cross_check"] = xcheck
    if xcheck == "failed":
        diagnostics["reason"] = "tilde-side Hankel polynomial disagrees with the locator"
        return CorrectionReport(UNDECODABLE, n, diagnostics=diagnostics)
    return CorrectionReport(
        CLEAN if E == 0 else CORRECTED,
        d if auto else n,
        error_count=E,
        error_nodes=[table.nodes[i] for i in idx],
        error_indices=idx,
        locator=locator,
        recovered=recovered,
        diagnostics=diagnostics,
    )


def _cross_check(table, tilde, recovered: Polynomial, locator: Polynomial, idx) -> str:
    """Check that the order d+E polynomial over the reciprocal sequence is a
    nonzero multiple of recovered * locator. Needs every given and every
    corrected value nonzero; otherwise reports 'skipped'."""
    if tilde is None or recovered.is_zero():
        return "skipped"
    if any(not recovered(table.nodes[i]) for i in idx):
        return "skipped"
    k = recovered.degree + len(idx)
    if k >= len(tilde):
        return "skipped"
    return "passed" if tilde[k].as_polynomial().is_proportional(recovered * locator) else "failed"
