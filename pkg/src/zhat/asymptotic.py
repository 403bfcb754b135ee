"""A decidable fragment of the ultrapower of omega by a nonprincipal ultrafilter.

An element is the sequence n -> a_d n^d + ... + a_0 with integer
coefficients and positive leading coefficient.  Any nonprincipal
ultrafilter contains the cofinite sets, so such sequences are ordered by
eventual dominance regardless of which ultrafilter is meant.

Convex subsemigroups of the fragment are {0}, the constants (standard
naturals), "degree at most d" and everything.  Each one determines the prime
of the ultraproduct valuation ring made of the elements whose valuation lies
strictly above it, and the two constructions invert each other.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass
from typing import Optional, Union

from .errors import ZeroHasNoClass

# largest degree probed when recovering a convex subsemigroup from a prime
MAX_PROBE_DEGREE = 16


@dataclass(frozen=True)
class AsymptoticNat:
    """Coefficients constant term first, trailing zeros stripped."""

    coefficients: tuple[int, ...] = ()

    def __post_init__(self):
        c = self.coefficients
        if type(c) is tuple and (not c or c[-1] > 0) and all(type(x) is int for x in c):
            return
        coeffs = list(c)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        if coeffs and coeffs[-1] < 0:
            raise ValueError(f"leading coefficient must be positive: {coeffs}")
        object.__setattr__(self, "coefficients", tuple(int(c) for c in coeffs))

    @classmethod
    def constant(cls, c: int) -> AsymptoticNat:
        return cls((c,))

    @classmethod
    def monomial(cls, d: int, c: int = 1) -> AsymptoticNat:
        return cls((0,) * d + (c,))

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero element."""
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return not self.coefficients

    def __call__(self, n: int) -> int:
        acc = 0
        for c in reversed(self.coefficients):
            acc = acc * n + c
        return acc

    def __add__(self, other: AsymptoticNat) -> AsymptoticNat:
        a, b = self.coefficients, other.coefficients
        size = max(len(a), len(b))
        a, b = a + (0,) * (size - len(a)), b + (0,) * (size - len(b))
        # leading coefficients are positive, so the sum needs no stripping
        return AsymptoticNat(tuple([x + y for x, y in zip(a, b)]))

    def scale(self, m: int) -> AsymptoticNat:
        if m < 0:
            raise ValueError("only nonnegative multiples stay in the semigroup")
        return AsymptoticNat(tuple(m * c for c in self.coefficients))

    def _key(self):
        return (self.degree, tuple(reversed(self.coefficients)))

    def __lt__(self, other):
        return compare(self, other) < 0

    def __le__(self, other):
        return compare(self, other) <= 0

    def __gt__(self, other):
        return compare(self, other) > 0

    def __ge__(self, other):
        return compare(self, other) >= 0

    def to_json(self) -> list[int]:
        return list(self.coefficients)

    def __repr__(self):
        if self.is_zero():
            return "0"
        terms = []
        for d in range(self.degree, -1, -1):
            c = self.coefficients[d]
            if c == 0:
                continue
            mono = "" if d == 0 else ("n" if d == 1 else f"n^{d}")
            coef = str(c) if (c != 1 or d == 0) else ""
            terms.append(f"{coef}{mono}")
        return " + ".join(terms).replace("+ -", "- ")


def compare(x: AsymptoticNat, y: AsymptoticNat) -> int:
    """-1, 0 or 1 as x is eventually below, equal to, or above y."""
    kx, ky = x._key(), y._key()
    return (kx > ky) - (kx < ky)


def archimedean_class(x: AsymptoticNat) -> int:
    """The degree, which indexes the archimedean class of x."""
    if x.is_zero():
        raise ZeroHasNoClass("0 has no archimedean class")
    return x.degree


def archimedean_equivalent(x: AsymptoticNat, y: AsymptoticNat) -> bool:
    return archimedean_class(x) == archimedean_class(y)


class ConvexKind(enum.IntEnum):
    ZERO = 0
    STANDARD = 1
    DEGREE_AT_MOST = 2
    ALL = 3


@dataclass(frozen=True)
class ConvexSubsemigroup:
    kind: ConvexKind
    degree: Optional[int] = None

    def __post_init__(self):
        if self.kind is ConvexKind.DEGREE_AT_MOST:
            if self.degree is None or self.degree < 1:
                raise ValueError("DegreeAtMost needs a degree >= 1")
        elif self.degree is not None:
            raise ValueError(f"{self.kind.name} takes no degree")

    @classmethod
    def zero(cls):
        return cls(ConvexKind.ZERO)

    @classmethod
    def standard(cls):
        return cls(ConvexKind.STANDARD)

    @classmethod
    def degree_at_most(cls, d: int):
        return cls(ConvexKind.DEGREE_AT_MOST, d)

    @classmethod
    def all(cls):
        return cls(ConvexKind.ALL)

    @property
    def max_degree(self) -> float:
        """Largest degree of a member (-1 for {0}, infinity for everything)."""
        return {ConvexKind.ZERO: -1, ConvexKind.STANDARD: 0,
                ConvexKind.ALL: float("inf")}.get(self.kind, self.degree)

    def __contains__(self, x: AsymptoticNat) -> bool:
        return x.degree <= self.max_degree

    def issubset(self, other: ConvexSubsemigroup) -> bool:
        return self.max_degree <= other.max_degree

    __le__ = issubset

    def top_class(self) -> Optional[int]:
        """Degree of the largest archimedean class, or None if there is none."""
        if self.kind in (ConvexKind.ZERO, ConvexKind.ALL):
            return None
        return int(self.max_degree)

    def generator(self) -> Optional[AsymptoticNat]:
        """An element whose least convex hull is this subsemigroup."""
        if self.kind is ConvexKind.ALL:
            return None
        if self.kind is ConvexKind.ZERO:
            return AsymptoticNat()
        return AsymptoticNat.monomial(int(self.max_degree))

    def to_json(self) -> dict:
        out = {"kind": self.kind.name.lower()}
        if self.degree is not None:
            out["degree"] = self.degree
        return out

    def __repr__(self):
        if self.kind is ConvexKind.DEGREE_AT_MOST:
            return f"DegreeAtMost({self.degree})"
        return self.kind.name.title()


def least_convex_containing(x: AsymptoticNat) -> ConvexSubsemigroup:
    """{y : y <= m x for some standard m}."""
    if x.is_zero():
        return ConvexSubsemigroup.zero()
    if x.degree == 0:
        return ConvexSubsemigroup.standard()
    return ConvexSubsemigroup.degree_at_most(x.degree)


class _Infinity:
    """Valuation of 0: above every element."""

    def __repr__(self):
        return "inf"


INFINITY = _Infinity()
Value = Union[AsymptoticNat, _Infinity]


@dataclass(frozen=True)
class SymbolicPrime:
    """The prime {f : v(f) > delta} of the ultraproduct valuation ring."""

    delta: ConvexSubsemigroup

    def contains_valuation(self, v: Value) -> bool:
        """v lies strictly above every member of delta."""
        if v is INFINITY:
            return True
        return v.degree > self.delta.max_degree

    def __repr__(self):
        return f"P[{self.delta!r}]"


def convex_to_prime(delta: ConvexSubsemigroup) -> SymbolicPrime:
    return SymbolicPrime(delta)


def prime_to_convex(prime: SymbolicPrime) -> ConvexSubsemigroup:
    """{gamma : gamma < v(f) for all f in the prime}.

    The valuations in a prime form an upward-closed set, so this is the
    complement of that set.  It is read off by probing 1, n, n^2, ... up to
    ``MAX_PROBE_DEGREE``: the first probe inside the prime fixes the answer.
    """
    if prime.contains_valuation(AsymptoticNat.constant(1)):
        return ConvexSubsemigroup.zero()
    if prime.contains_valuation(AsymptoticNat.monomial(1)):
        return ConvexSubsemigroup.standard()
    for d in range(2, MAX_PROBE_DEGREE + 2):
        if prime.contains_valuation(AsymptoticNat.monomial(d)):
            return ConvexSubsemigroup.degree_at_most(d - 1)
    return ConvexSubsemigroup.all()


def galois_maps(obj: ConvexSubsemigroup | SymbolicPrime):
    if isinstance(obj, ConvexSubsemigroup):
        return convex_to_prime(obj)
    return prime_to_convex(obj)


def random_asymptotic(rng: random.Random, max_degree: int = 4, max_coeff: int = 10) -> AsymptoticNat:
    d = rng.randint(-1, max_degree)
    if d < 0:
        return AsymptoticNat()
    coeffs = [rng.randint(-max_coeff, max_coeff) for _ in range(d)] + [rng.randint(1, max_coeff)]
    return AsymptoticNat(tuple(coeffs))

