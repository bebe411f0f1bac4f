"""Dense univariate polynomials with exact coefficients.

Coefficients are stored ascending (``coeffs[i]`` multiplies ``x**i``) and
trimmed, so the zero polynomial has no coefficients and degree -1.
"""

from __future__ import annotations

from typing import Iterable, Optional, Sequence, Tuple

from .errors import DivisionByZero, FieldMismatch
from .exact_field import FieldSpec, Scalar


class Polynomial:
    __slots__ = ("field", "coeffs")

    def __init__(self, field: FieldSpec, coeffs: Iterable = ()):
        cs = [field(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.field = field
        self.coeffs: Tuple[Scalar, ...] = tuple(cs)

    @classmethod
    def _raw(cls, field: FieldSpec, coeffs) -> "Polynomial":
        # Trusted constructor: coeffs already Scalars of ``field``.
        cs = list(coeffs)
        while cs and not cs[-1]:
            cs.pop()
        p = cls.__new__(cls)
        p.field = field
        p.coeffs = tuple(cs)
        return p

    @classmethod
    def zero(cls, field: FieldSpec) -> "Polynomial":
        return cls._raw(field, ())

    @classmethod
    def constant(cls, field: FieldSpec, c) -> "Polynomial":
        return cls(field, [c])

    @classmethod
    def x(cls, field: FieldSpec) -> "Polynomial":
        return cls(field, [0, 1])

    @classmethod
    def from_roots(cls, field: FieldSpec, roots: Iterable, leading=1) -> "Polynomial":
        p = cls.constant(field, leading)
        for r in roots:
            p = p * cls(field, [-field(r), 1])
        return p

    @classmethod
    def from_descending(cls, field: FieldSpec, coeffs: Sequence) -> "Polynomial":
        return cls(field, list(coeffs)[::-1])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    @property
    def leading(self) -> Scalar:
        return self.coeffs[-1] if self.coeffs else self.field.zero

    def coeff(self, i: int) -> Scalar:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.field.zero

    def _other(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.field != self.field:
                raise FieldMismatch(f"{self.field} vs {other.field}")
            return other
        return Polynomial.constant(self.field, other)

    def __add__(self, other):
        other = self._other(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Polynomial._raw(self.field, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.field, [-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._other(other))

    def __rsub__(self, other):
        return self._other(other) - self

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            s = self.field(other)
            if not s:
                return Polynomial.zero(self.field)
            return Polynomial._raw(self.field, [c * s for c in self.coeffs])
        other = self._other(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Polynomial.zero(self.field)
        out = [self.field.zero] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if not ai:
                continue
            for j, bj in enumerate(b):
                out[i + j] = out[i + j] + ai * bj
        return Polynomial._raw(self.field, out)

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        s = self.field(scalar)
        return self * s.inverse()

    def __divmod__(self, other: "Polynomial"):
        other = self._other(other)
        if other.is_zero():
            raise DivisionByZero("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        inv_lead = other.leading.inverse()
        quot = [self.field.zero] * max(len(rem) - dq, 0)
        for i in range(len(rem) - 1, dq - 1, -1):
            c = rem[i]
            if not c:
                continue
            f = c * inv_lead
            quot[i - dq] = f
            for j, oc in enumerate(other.coeffs):
                rem[i - dq + j] = rem[i - dq + j] - f * oc
        return Polynomial._raw(self.field, quot), Polynomial._raw(self.field, rem[:dq])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def divides(self, other: "Polynomial") -> bool:
        """True when ``self`` divides ``other`` exactly."""
        return divmod(other, self)[1].is_zero()

    def __call__(self, x) -> Scalar:
        x = self.field(x)
        acc = self.field.zero
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "Polynomial":
        return Polynomial._raw(self.field, [c * i for i, c in enumerate(self.coeffs) if i])

    def monic(self) -> "Polynomial":
        if self.is_zero():
            return self
        return self / self.leading

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.field == other.field and self.coeffs == other.coeffs
        if isinstance(other, (int, Scalar)):
            return self == Polynomial.constant(self.field, other)
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def ratio_to(self, other: "Polynomial") -> Optional[Scalar]:
        """Return c with ``self == c * other`` (other nonzero), else None."""
        if other.is_zero():
            return None
        if self.is_zero():
            return self.field.zero
        if self.degree != other.degree:
            return None
        c = self.leading / other.leading
        return c if other * c == self else None

    def is_proportional(self, other: "Polynomial") -> bool:
        """Nonzero scalar multiples of each other."""
        c = self.ratio_to(other)
        return c is not None and bool(c)

    def to_strings(self):
        """Ascending coefficients as canonical scalar text."""
        return [str(c) for c in self.coeffs]

    def pretty(self, var: str = "x") -> str:
        """Descending human notation, e.g. ``2*x^6 - 4*x^5 - 8``."""
        if self.is_zero():
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            text = str(c)
            neg = text.startswith("-") and not self.field.is_prime_field
            mag = text[1:] if neg else text
            if i == 0:
                term = mag
            else:
                mono = var if i == 1 else f"{var}^{i}"
                term = mono if mag == "1" else f"{mag}*{mono}"
            if not parts:
                parts.append(f"-{term}" if neg else term)
            else:
                parts.append(f"- {term}" if neg else f"+ {term}")
        return " ".join(parts)

    def __repr__(self):
        return f"Polynomial({self.pretty()} over {self.field})"
