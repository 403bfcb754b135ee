"""Fixed-precision arithmetic in Z_p and Q_p.

A :class:`PAdicInt` is an element of Z_p known modulo p^N.  A
:class:`PAdicRational` is ``unit * p**exponent`` with the unit known to N
digits; shifting by powers of p moves the exponent and never the digits.

Valuations of elements that vanish at the working precision are reported as
the :data:`AtLeastPrecision` marker rather than as an integer, because a
residue of 0 mod p^N cannot be told apart from p^N times a unit.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from sympy import isprime

from .errors import (
    MixedContext,
    NonPrimeModulus,
    NotApproximateRoot,
    NotAUnit,
    SingularRoot,
)

DEFAULT_PRECISION = 24


class _AtLeastPrecisionType:
    """Valuation marker for residues that are 0 at the working precision.

    It compares above every integer and absorbs addition, so code that treats
    it as infinity works unchanged; callers that care can test identity.
    """

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __reduce__(self):
        return (_AtLeastPrecisionType, ())

    def __repr__(self):
        return "AtLeastPrecision"

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("AtLeastPrecision")

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return other is self

    def __gt__(self, other):
        return other is not self

    def __ge__(self, other):
        return True

    def __add__(self, other):
        return self

    __radd__ = __add__


AtLeastPrecision = _AtLeastPrecisionType()
Valuation = Union[int, _AtLeastPrecisionType]


@functools.lru_cache(maxsize=None)
def check_prime(p: int) -> int:
    if not isinstance(p, int) or isinstance(p, bool) or not isprime(p):
        raise NonPrimeModulus(f"{p!r} is not a prime")
    return p


@functools.lru_cache(maxsize=None)
def _modulus(p: int, n: int) -> int:
    return p**n


def int_valuation(n: int, p: int) -> int:
    """v_p(n) for a nonzero integer n."""
    if n == 0:
        raise ValueError("v_p(0) is infinite")
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k


@dataclass(frozen=True)
class PAdicInt:
    """An element of Z_p known modulo p**precision."""

    prime: int
    precision: int
    residue: int

    def __post_init__(self):
        check_prime(self.prime)
        if not isinstance(self.precision, int) or self.precision < 1:
            raise ValueError(f"precision must be a positive integer, got {self.precision!r}")
        if not 0 <= self.residue < _modulus(self.prime, self.precision):
            raise ValueError(
                f"residue {self.residue} outside [0, {self.prime}^{self.precision})"
            )

    @property
    def modulus(self) -> int:
        return _modulus(self.prime, self.precision)

    def _coerce(self, other) -> PAdicInt:
        if isinstance(other, PAdicInt):
            if other.prime != self.prime or other.precision != self.precision:
                raise MixedContext(
                    f"Z_{self.prime} mod p^{self.precision} vs "
                    f"Z_{other.prime} mod p^{other.precision}"
                )
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return from_integer(other, self.prime, self.precision)
        return NotImplemented

    def _make(self, residue: int) -> PAdicInt:
        return PAdicInt(self.prime, self.precision, residue % self.modulus)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._make(self.residue + other.residue)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._make(self.residue - other.residue)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._make(other.residue - self.residue)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._make(self.residue * other.residue)

    __rmul__ = __mul__

    def __neg__(self):
        return self._make(-self.residue)

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return self._make(pow(self.residue, k, self.modulus))

    def valuation(self) -> Valuation:
        if self.residue == 0:
            return AtLeastPrecision
        return int_valuation(self.residue, self.prime)

    def is_zero(self) -> bool:
        """Zero at the working precision (the answer is precision-relative)."""
        return self.residue == 0

    def is_unit(self) -> bool:
        return self.residue % self.prime != 0

    def inverse(self) -> PAdicInt:
        if not self.is_unit():
            raise NotAUnit(f"{self.residue} is divisible by {self.prime}")
        return self._make(pow(self.residue, -1, self.modulus))

    def truncate(self, k: int) -> PAdicInt:
        """Image in Z_p / p^k for 1 <= k <= precision."""
        if not 1 <= k <= self.precision:
            raise ValueError(f"cannot truncate to {k} digits from {self.precision}")
        return PAdicInt(self.prime, k, self.residue % _modulus(self.prime, k))

    def digits(self) -> list[int]:
        """Base-p digits, least significant first, always ``precision`` long."""
        out, r = [], self.residue
        for _ in range(self.precision):
            r, d = divmod(r, self.prime)
            out.append(d)
        return out

    def to_json(self) -> dict:
        return {"p": self.prime, "N": self.precision, "value": str(self.residue)}

    @classmethod
    def from_json(cls, data: dict) -> PAdicInt:
        return from_integer(int(data["value"]), int(data["p"]), int(data["N"]))

    def __repr__(self):
        return f"PAdicInt({self.residue} mod {self.prime}^{self.precision})"


def from_integer(n: int, p: int, N: int = DEFAULT_PRECISION) -> PAdicInt:
    check_prime(p)
    if N < 1:
        raise ValueError("precision must be at least 1")
    return PAdicInt(p, N, n % _modulus(p, N))


def valuation(a: PAdicInt) -> Valuation:
    return a.valuation()


def add(a: PAdicInt, b: PAdicInt) -> PAdicInt:
    return a + b


def mul(a: PAdicInt, b: PAdicInt) -> PAdicInt:
    return a * b


def neg(a: PAdicInt) -> PAdicInt:
    return -a


def inv_unit(a: PAdicInt) -> PAdicInt:
    return a.inverse()


def poly_eval(coeffs: Sequence[int], x: int, modulus: int) -> int:
    """Evaluate ``coeffs[0] + coeffs[1] x + ...`` mod ``modulus`` (Horner)."""
    acc = 0
    for c in reversed(coeffs):
        acc = (acc * x + c) % modulus
    return acc


def poly_derivative(coeffs: Sequence[int]) -> list[int]:
    return [i * c for i, c in enumerate(coeffs)][1:]


def newton_step(poly: Sequence[int], a: PAdicInt) -> PAdicInt:
    """One Newton iteration x - f(x)/f'(x) at the full precision of ``a``."""
    m = a.modulus
    d = poly_eval(poly_derivative(poly), a.residue, m)
    if d % a.prime == 0:
        raise SingularRoot("derivative vanishes mod p")
    return a._make(a.residue - poly_eval(poly, a.residue, m) * pow(d, -1, m))


def hensel_lift(poly: Sequence[int], a0: PAdicInt) -> PAdicInt:
    """Lift a simple root of ``poly`` mod p to a root mod p**N.

    ``poly`` lists integer coefficients constant term first.  Precision
    doubles at each Newton step (1, 2, 4, ... digits, capped at N).
    """
    p, N = a0.prime, a0.precision
    deriv = poly_derivative(poly)
    x = a0.residue % p
    if poly_eval(poly, x, p) != 0:
        raise NotApproximateRoot(f"f({x}) is not 0 mod {p}")
    if poly_eval(deriv, x, p) == 0:
        raise SingularRoot(f"f'({x}) is 0 mod {p}")
    k = 1
    while k < N:
        k = min(2 * k, N)
        m = _modulus(p, k)
        x = (x - poly_eval(poly, x, m) * pow(poly_eval(deriv, x, m), -1, m)) % m
    return PAdicInt(p, N, x)


@dataclass(frozen=True)
class PAdicRational:
    """``unit * p**exponent`` in Q_p; ``unit is None`` marks zero."""

    prime: int
    precision: int
    exponent: int
    unit: PAdicInt | None

    def __post_init__(self):
        check_prime(self.prime)
        if self.unit is None:
            if self.exponent != 0:
                object.__setattr__(self, "exponent", 0)
            return
        if self.unit.prime != self.prime or self.unit.precision != self.precision:
            raise MixedContext("unit lives in a different Z_p")
        if not self.unit.is_unit():
            raise NotAUnit(f"unit part {self.unit.residue} is divisible by {self.prime}")

    @classmethod
    def zero(cls, p: int, N: int = DEFAULT_PRECISION) -> PAdicRational:
        return cls(p, N, 0, None)

    @classmethod
    def from_padic_int(cls, a: PAdicInt) -> PAdicRational:
        v = a.valuation()
        if v is AtLeastPrecision:
            return cls.zero(a.prime, a.precision)
        # the top v digits of the unit are unknown and padded with zeros
        return cls(a.prime, a.precision, v, a._make(a.residue // a.prime**v))

    def is_zero(self) -> bool:
        return self.unit is None

    def valuation(self) -> Valuation:
        return AtLeastPrecision if self.unit is None else self.exponent

    def is_integral(self) -> bool:
        return self.unit is None or self.exponent >= 0

    def to_padic_int(self) -> PAdicInt:
        if not self.is_integral():
            raise NotAUnit(f"p^{self.exponent} is not integral")
        if self.unit is None:
            return PAdicInt(self.prime, self.precision, 0)
        return self.unit._make(self.unit.residue * self.prime**self.exponent)

    def to_fraction(self) -> Fraction:
        """Rational number agreeing with this element to the stored digits."""
        if self.unit is None:
            return Fraction(0)
        return Fraction(self.unit.residue) * Fraction(self.prime) ** self.exponent

    def _coerce(self, other) -> PAdicRational:
        if isinstance(other, PAdicRational):
            if other.prime != self.prime or other.precision != self.precision:
                raise MixedContext("Q_p elements of different prime or precision")
            return other
        if isinstance(other, PAdicInt):
            return self._coerce(PAdicRational.from_padic_int(other))
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return rational_embed(other, self.prime, self.precision)
        return NotImplemented

    def _normalize(self, exponent: int, residue: int) -> PAdicRational:
        m = _modulus(self.prime, self.precision)
        residue %= m
        if residue == 0:
            return PAdicRational.zero(self.prime, self.precision)
        k = int_valuation(residue, self.prime)
        return PAdicRational(
            self.prime, self.precision, exponent + k,
            PAdicInt(self.prime, self.precision, residue // self.prime**k),
        )

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.unit is None:
            return other
        if other.unit is None:
            return self
        e = min(self.exponent, other.exponent)
        p = self.prime
        s = (self.unit.residue * p ** (self.exponent - e)
             + other.unit.residue * p ** (other.exponent - e))
        return self._normalize(e, s)

    __radd__ = __add__

    def __neg__(self):
        if self.unit is None:
            return self
        return PAdicRational(self.prime, self.precision, self.exponent, -self.unit)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.unit is None or other.unit is None:
            return PAdicRational.zero(self.prime, self.precision)
        return PAdicRational(self.prime, self.precision,
                             self.exponent + other.exponent, self.unit * other.unit)

    __rmul__ = __mul__

    def agrees(self, other, absolute: int | None = None) -> bool:
        """Equal modulo p^absolute (default: the precision N).

        Elements coming from Z_p are only known modulo p^N, so this is the
        equality that ring maps into Q_p respect.
        """
        absolute = self.precision if absolute is None else absolute
        d = self - other
        return d.is_zero() or d.exponent >= absolute

    def inverse(self) -> PAdicRational:
        if self.unit is None:
            raise ZeroDivisionError("0 has no inverse in Q_p")
        return PAdicRational(self.prime, self.precision, -self.exponent, self.unit.inverse())

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def to_json(self) -> dict:
        return {
            "p": self.prime,
            "N": self.precision,
            "exp": self.exponent,
            "unit": "0" if self.unit is None else str(self.unit.residue),
        }

    @classmethod
    def from_json(cls, data: dict) -> PAdicRational:
        p, N = int(data["p"]), int(data["N"])
        unit = int(data["unit"])
        if unit % _modulus(p, N) == 0:
            return cls.zero(p, N)
        return cls(p, N, int(data["exp"]), from_integer(unit, p, N))

    def __repr__(self):
        if self.unit is None:
            return f"PAdicRational(0 in Q_{self.prime})"
        return f"PAdicRational({self.unit.residue} * {self.prime}^{self.exponent}, N={self.precision})"


def rational_embed(q, p: int, N: int = DEFAULT_PRECISION) -> PAdicRational:
    """Image of a rational number in Q_p."""
    q = Fraction(q)
    check_prime(p)
    if q == 0:
        return PAdicRational.zero(p, N)
    num, den = q.numerator, q.denominator
    a, b = int_valuation(num, p), int_valuation(den, p)
    m = _modulus(p, N)
    unit = (num // p**a) * pow(den // p**b, -1, m) % m
    return PAdicRational(p, N, a - b, PAdicInt(p, N, unit))
