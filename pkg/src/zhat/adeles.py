"""Finite adeles over a finite prime set: R = prod Z_p with positive integers inverted.

With S finite every element of prod Q_p is integral at all but finitely many
places, so the adele ring is the full product of the Q_p; the integrality
locus is still tracked so that R sits inside as a predicate.

Extension of ideals of R to the adeles kills every ideal that contains a
positive integer; only the minimal primes survive, and each becomes both
minimal and maximal.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .errors import MixedContext
from .ideals import FinGenIdeal, membership
from .padic import AtLeastPrecision, PAdicRational, rational_embed
from .product import ProductElement, RingContext
from .quotient import LocalizedRing, RingKind, localize
from .spectrum import Level, PrimeIdeal, spec_enumerate


@dataclass(frozen=True)
class AdeleElement:
    context: RingContext
    components: tuple[PAdicRational, ...]

    def __post_init__(self):
        for c, p in zip(self.components, self.context.primes):
            if c.prime != p or c.precision != self.context.precision:
                raise MixedContext(f"component {c!r} does not live in Q_{p}")
        if len(self.components) != len(self.context.primes):
            raise ValueError("component count does not match the prime set")

    @property
    def integrality_locus(self) -> frozenset[int]:
        return frozenset(p for p, c in zip(self.context.primes, self.components) if c.is_integral())

    def is_integral(self) -> bool:
        return len(self.integrality_locus) == len(self.context.primes)

    def __getitem__(self, p: int) -> PAdicRational:
        return self.components[self.context.index(p)]

    @classmethod
    def from_product(cls, f: ProductElement) -> AdeleElement:
        return cls(f.context, tuple(PAdicRational.from_padic_int(c) for c in f.components))

    @classmethod
    def from_rational(cls, context: RingContext, q) -> AdeleElement:
        """Diagonal image of a rational number."""
        return cls(context, tuple(rational_embed(q, p, context.precision) for p in context.primes))

    def to_product(self) -> ProductElement:
        return ProductElement(self.context, tuple(c.to_padic_int() for c in self.components))

    def _coerce(self, other) -> AdeleElement:
        if isinstance(other, AdeleElement):
            if other.context != self.context:
                raise MixedContext("adeles over different prime sets")
            return other
        if isinstance(other, ProductElement):
            return self._coerce(AdeleElement.from_product(other))
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return AdeleElement.from_rational(self.context, other)
        return NotImplemented

    def _zip(self, other, op):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return AdeleElement(self.context, tuple(op(a, b) for a, b in zip(self.components, other.components)))

    def __add__(self, other):
        return self._zip(other, lambda a, b: a + b)

    __radd__ = __add__

    def __sub__(self, other):
        return self._zip(other, lambda a, b: a - b)

    def __mul__(self, other):
        return self._zip(other, lambda a, b: a * b)

    __rmul__ = __mul__

    def __neg__(self):
        return AdeleElement(self.context, tuple(-c for c in self.components))

    def is_unit(self) -> bool:
        return not any(c.is_zero() for c in self.components)

    def inverse(self) -> AdeleElement:
        return AdeleElement(self.context, tuple(c.inverse() for c in self.components))

    def denominator(self) -> int:
        """Least positive integer n with n * self integral."""
        n = 1
        for p, c in zip(self.context.primes, self.components):
            if not c.is_zero() and c.exponent < 0:
                n *= p ** (-c.exponent)
        return n

    def to_json(self) -> dict:
        return {"context": self.context.to_json(),
                "components": [{"exp": c.exponent, "unit": "0" if c.unit is None else str(c.unit.residue)}
                               for c in self.components]}


def adele_from_fraction(f: ProductElement, n: int) -> AdeleElement:
    """The adele f / n."""
    if n < 1:
        raise ValueError("n must be a positive integer")
    return AdeleElement(f.context, tuple(
        PAdicRational.from_padic_int(c) / rational_embed(n, p, f.context.precision)
        for p, c in f.items()
    ))


def random_adele(context: RingContext, rng: random.Random) -> AdeleElement:
    f = context.random_element(rng)
    n = 1
    for p in context.primes:
        n *= p ** rng.randint(0, 2)
    return adele_from_fraction(f, n)


def contains_positive_integer(ideal: FinGenIdeal) -> bool:
    """Whether the ideal meets the diagonal positive integers.

    prod p^w(p) lies in the ideal as soon as every w(p) is finite; an
    infinite entry excludes every nonzero integer.
    """
    return all(w is not AtLeastPrecision for w in ideal.vector)


@dataclass(frozen=True)
class AdeleIdeal:
    """The extension of an ideal of R; ``contraction`` is its saturation in R."""

    context: RingContext
    contraction: FinGenIdeal

    def is_unit_ideal(self) -> bool:
        return not self.contraction.is_proper()

    def __contains__(self, a: AdeleElement) -> bool:
        return membership((a * a.denominator()).to_product(), self.contraction)

    def issubset(self, other: AdeleIdeal) -> bool:
        return self.contraction.issubset(other.contraction)


def extend(ideal: FinGenIdeal | PrimeIdeal) -> AdeleIdeal:
    if isinstance(ideal, PrimeIdeal):
        ideal = ideal.ideal
    saturated = FinGenIdeal.from_vector(ideal.context, tuple(
        AtLeastPrecision if w is AtLeastPrecision else 0 for w in ideal.vector
    ))
    return AdeleIdeal(ideal.context, saturated)


@dataclass(frozen=True)
class AdelePrime:
    context: RingContext
    chain_prime: int

    @property
    def contraction(self) -> PrimeIdeal:
        return PrimeIdeal(self.context, self.chain_prime, Level.MINIMAL)

    @property
    def ideal(self) -> AdeleIdeal:
        return extend(self.contraction)

    def __contains__(self, a: AdeleElement) -> bool:
        return a in self.ideal

    def to_json(self) -> dict:
        return {"prime": self.chain_prime, "contraction": "minimal", "minimal": True, "maximal": True}


def primes_avoiding_integers(context: RingContext, bound: int = 100) -> list[PrimeIdeal]:
    """Primes of R containing none of 1..bound nor any p in S (diagonally embedded)."""
    probes = sorted(set(range(1, bound + 1)) | set(context.primes))
    return [q for q in spec_enumerate(context)
            if not any(context.diagonal(n) in q for n in probes)]


def spec_adeles(context: RingContext) -> list[AdelePrime]:
    out = []
    for q in spec_enumerate(context):
        ext = extend(q)
        if ext.is_unit_ideal():
            continue
        prime = AdelePrime(context, q.chain_prime)
        if prime not in out:
            out.append(prime)
    return out


@dataclass(frozen=True)
class AdeleQuotient:
    prime: AdelePrime
    kind: RingKind = RingKind.COMPONENT_FIELD

    def project(self, a: AdeleElement) -> PAdicRational:
        return a[self.prime.chain_prime]

    __call__ = project

    def lift(self, x: PAdicRational) -> AdeleElement:
        ctx = self.prime.context
        return AdeleElement(ctx, tuple(
            x if p == self.prime.chain_prime else PAdicRational.zero(p, ctx.precision)
            for p in ctx.primes
        ))


@dataclass(frozen=True)
class AdeleLocalization:
    prime: AdelePrime
    kind: RingKind = RingKind.COMPONENT_FIELD

    def localization_map(self, a: AdeleElement) -> PAdicRational:
        return a[self.prime.chain_prime]

    __call__ = localization_map

    def as_localization_of_product(self) -> LocalizedRing:
        return localize(self.prime.contraction)


def adele_quotient(prime: AdelePrime) -> AdeleQuotient:
    return AdeleQuotient(prime)


def adele_localize(prime: AdelePrime) -> AdeleLocalization:
    return AdeleLocalization(prime)
