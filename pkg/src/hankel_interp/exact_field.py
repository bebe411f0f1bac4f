"""Exact scalars over the rationals and over prime fields GF(p).

Everything downstream is generic over :class:`FieldSpec`; no floating point
is used anywhere, since the algorithms branch on exact vanishing.

    >>> Q = FieldSpec.rationals()
    >>> Q.parse("-6/4")
    Scalar(-3/2 in QQ)
    >>> F7 = FieldSpec.prime(7)
    >>> F7(4) * F7(2)
    Scalar(1 in GF(7))
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Union

from .errors import (
    BitLimitExceeded,
    DivisionByZero,
    FieldMismatch,
    InvalidModulus,
    MalformedNumber,
    NonInvertibleDenominator,
    ZeroDenominator,
)

RATIONAL = "rational"
PRIME = "prime"

DEFAULT_MAX_BITS = 1_000_000
_max_bits = DEFAULT_MAX_BITS

_NUMBER_RE = re.compile(r"(-?\d+)(?:/(\d+))?")

# Deterministic Miller-Rabin witnesses valid for every n below the bound.
_MR_BOUND = 3317044064679887385961981
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def set_max_bits(bits: Optional[int]) -> None:
    """Cap the bit size of rational numerators/denominators (None = default)."""
    global _max_bits
    _max_bits = DEFAULT_MAX_BITS if bits is None else int(bits)


def get_max_bits() -> int:
    return _max_bits


def _miller_rabin(n: int, bases) -> bool:
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in bases:
        a %= n
        if a in (0, 1, n - 1):
            continue
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@lru_cache(maxsize=256)
def is_prime(n: int) -> bool:
    """Deterministic primality test.

    Below 3.3e24 a fixed witness set is exact. Above it, Miller's bound
    (all bases up to 2 ln(n)^2) is used, which is deterministic under GRH.
    """
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    if n < _MR_BOUND:
        return _miller_rabin(n, _MR_BASES)
    limit = min(n - 2, int(2 * math.log(n) ** 2))
    return _miller_rabin(n, range(2, limit + 1))


@dataclass(frozen=True)
class FieldSpec:
    """Which field scalars live in: ``rational`` or ``prime`` with a modulus."""

    kind: str = RATIONAL
    modulus: Optional[int] = None

    def __post_init__(self):
        if self.kind == RATIONAL:
            if self.modulus is not None:
                raise InvalidModulus("the rational field takes no modulus")
        elif self.kind == PRIME:
            if not isinstance(self.modulus, int) or self.modulus < 3 or not is_prime(self.modulus):
                raise InvalidModulus(f"modulus {self.modulus!r} is not a prime >= 3")
        else:
            raise ValueError(f"unknown field kind {self.kind!r}")

    @classmethod
    def rationals(cls) -> "FieldSpec":
        return cls(RATIONAL)

    @classmethod
    def prime(cls, p: int) -> "FieldSpec":
        return cls(PRIME, int(p))

    @property
    def is_prime_field(self) -> bool:
        return self.kind == PRIME

    def __str__(self) -> str:
        return f"GF({self.modulus})" if self.is_prime_field else "QQ"

    def __call__(self, value: Union[int, Fraction, "Scalar", str]) -> "Scalar":
        """Coerce an int, Fraction, text or same-field Scalar into this field."""
        if isinstance(value, Scalar):
            if value.field != self:
                raise FieldMismatch(f"cannot coerce {value.field} element into {self}")
            return value
        if isinstance(value, str):
            return self.parse(value)
        if self.is_prime_field:
            if isinstance(value, Fraction):
                return Scalar(self, _mod_fraction(value.numerator, value.denominator, self.modulus))
            return Scalar(self, int(value) % self.modulus)
        return Scalar(self, _check_bits(Fraction(value)))

    @property
    def zero(self) -> "Scalar":
        return self(0)

    @property
    def one(self) -> "Scalar":
        return self(1)

    def parse(self, text: str) -> "Scalar":
        return scalar_parse(text, self)

    def to_json(self):
        return {"prime": str(self.modulus)} if self.is_prime_field else RATIONAL

    @classmethod
    def from_json(cls, obj) -> "FieldSpec":
        if obj is None or obj == RATIONAL:
            return cls.rationals()
        if isinstance(obj, dict) and set(obj) == {"prime"}:
            try:
                return cls.prime(int(str(obj["prime"])))
            except ValueError as exc:
                raise InvalidModulus(f"bad modulus {obj['prime']!r}") from exc
        raise InvalidModulus(f"unrecognized field description {obj!r}")


def _mod_fraction(num: int, den: int, p: int) -> int:
    if den % p == 0:
        raise NonInvertibleDenominator(f"denominator {den} is not invertible mod {p}")
    return num * pow(den, -1, p) % p


def _check_bits(q: Fraction) -> Fraction:
    limit = _max_bits
    if q.numerator.bit_length() > limit or q.denominator.bit_length() > limit:
        raise BitLimitExceeded(f"rational exceeds {limit} bits")
    return q


class Scalar:
    """An immutable element of a :class:`FieldSpec`.

    Rationals are held as reduced :class:`fractions.Fraction`; prime-field
    elements as residues in ``[0, p)``. Python ints (and Fractions) mix in
    freely and are coerced into the scalar's field.
    """

    __slots__ = ("field", "value")

    def __init__(self, field: FieldSpec, value):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "value", value)

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    def _coerce(self, other) -> "Scalar":
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise FieldMismatch(f"{self.field} vs {other.field}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field(other)
        return NotImplemented

    def _make(self, value) -> "Scalar":
        if self.field.is_prime_field:
            return Scalar(self.field, value % self.field.modulus)
        return Scalar(self.field, _check_bits(value))

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._make(self.value + other.value)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._make(self.value - other.value)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._make(other.value - self.value)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._make(self.value * other.value)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __neg__(self):
        return self._make(-self.value)

    def __pos__(self):
        return self

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inverse() ** (-exponent)
        if self.field.is_prime_field:
            return Scalar(self.field, pow(self.value, exponent, self.field.modulus))
        return self._make(self.value ** exponent)

    def inverse(self) -> "Scalar":
        if not self.value:
            raise DivisionByZero("division by zero")
        if self.field.is_prime_field:
            return Scalar(self.field, pow(self.value, -1, self.field.modulus))
        return Scalar(self.field, 1 / self.value)

    def __bool__(self):
        return bool(self.value)

    def is_zero(self) -> bool:
        return not self.value

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.field == other.field and self.value == other.value
        if isinstance(other, (int, Fraction)):
            try:
                return self.value == self.field(other).value
            except NonInvertibleDenominator:
                return False
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.value))

    @property
    def numerator(self) -> int:
        return self.value.numerator if not self.field.is_prime_field else self.value

    @property
    def denominator(self) -> int:
        return self.value.denominator if not self.field.is_prime_field else 1

    def __str__(self):
        return format_scalar(self)

    def __repr__(self):
        return f"Scalar({format_scalar(self)} in {self.field})"


def format_scalar(a: Scalar) -> str:
    """Canonical text: ``-?digits`` or ``-?digits/digits``; residues for GF(p)."""
    if a.field.is_prime_field:
        return str(a.value)
    q = a.value
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def scalar_parse(text: str, spec: FieldSpec) -> Scalar:
    if not isinstance(text, str):
        raise MalformedNumber(f"expected a number string, got {text!r}")
    m = _NUMBER_RE.fullmatch(text.strip())
    if m is None:
        raise MalformedNumber(f"malformed number {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ZeroDenominator(f"zero denominator in {text!r}")
    if spec.is_prime_field:
        return Scalar(spec, _mod_fraction(num, den, spec.modulus))
    return Scalar(spec, _check_bits(Fraction(num, den)))


def scalar_arith(a: Scalar, b: Scalar, op: str) -> Scalar:
    """Apply ``op`` in {add, sub, mul, div}; both operands must share a field."""
    if not isinstance(a, Scalar) or not isinstance(b, Scalar):
        raise TypeError("scalar_arith takes two Scalars")
    if a.field != b.field:
        raise FieldMismatch(f"{a.field} vs {b.field}")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")
