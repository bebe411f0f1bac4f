"""Exact Hankel-polynomial toolkit for polynomial, error-correcting and
rational interpolation, and for resultants read off evaluation samples."""

from .error_correct import CorrectionReport, correct_table, degree_scan, locator_from_tau
from .errors import HankelInterpError
from .exact_field import FieldSpec, Scalar, scalar_arith, scalar_parse
from .hankel_core import (
    GeneratorSequence,
    HankelPolynomial,
    hankel_minor_naive,
    hankel_poly_naive,
    hankel_sequence_jj,
)
from .poly_interp import (
    InterpolationTable,
    interpolate_hankel,
    interpolate_lagrange,
    interpolate_sigma_recursion,
    nodes_poly,
    tau_seq,
    tilde_tau_seq,
    wprime_at_nodes,
)
from .polynomial import Polynomial
from .rational_interp import RationalInterpolant, cauchy_oracle, rational_family, rational_interpolate
from .resultant import (
    SampleRatioTable,
    common_zero_from_samples,
    discriminant,
    resultant_minors_from_samples,
    sylvester_resultant,
)

__version__ = "0.1.0"
