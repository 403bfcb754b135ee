"""Quotients R/q and localizations R_q at the primes of prod Z_p.

For the chain at p:

======================  ==================  ====================
prime                   R/q                 R_q
======================  ==================  ====================
minimal (1 - e_p)       Z_p                 Q_p
maximal (p at p)        F_p                 Z_p
======================  ==================  ====================

F_p is modelled as Z_p at precision 1.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence, Union

from .errors import DenominatorInPrime, MixedContext, NotApproximateRoot, SingularRoot
from .filters import delta_lower
from .ideals import FinGenIdeal, membership
from .padic import (
    PAdicInt,
    PAdicRational,
    hensel_lift,
    poly_derivative,
    poly_eval,
)
from .product import ProductElement
from .spectrum import Level, PrimeIdeal


class RingKind(enum.Enum):
    RESIDUE_FIELD = "F_p"
    COMPONENT_DVR = "Z_p"
    COMPONENT_FIELD = "Q_p"


Element = Union[PAdicInt, PAdicRational]


@dataclass(frozen=True)
class QuotientRing:
    prime_ideal: PrimeIdeal
    kind: RingKind

    @property
    def p(self) -> int:
        return self.prime_ideal.chain_prime

    @property
    def precision(self) -> int:
        return 1 if self.kind is RingKind.RESIDUE_FIELD else self.prime_ideal.context.precision

    def project(self, f: ProductElement) -> PAdicInt:
        if f.context != self.prime_ideal.context:
            raise MixedContext("element from a different product ring")
        c = f[self.p]
        if self.kind is RingKind.RESIDUE_FIELD:
            return c.truncate(1)
        return c

    __call__ = project

    def lift(self, x: PAdicInt | int) -> ProductElement:
        """A preimage under ``project`` (x at p, 0 elsewhere)."""
        ctx = self.prime_ideal.context
        value = x.residue if isinstance(x, PAdicInt) else int(x)
        return ctx.element([value if q == self.p else 0 for q in ctx.primes])

    def in_kernel(self, f: ProductElement) -> bool:
        return self.project(f).is_zero()

    def elements(self) -> list[PAdicInt]:
        """All elements; only available for the residue field."""
        if self.kind is not RingKind.RESIDUE_FIELD:
            raise ValueError("Z_p is infinite")
        return [PAdicInt(self.p, 1, r) for r in range(self.p)]


def quotient(prime: PrimeIdeal) -> QuotientRing:
    kind = RingKind.RESIDUE_FIELD if prime.level is Level.MAXIMAL else RingKind.COMPONENT_DVR
    return QuotientRing(prime, kind)


@dataclass(frozen=True)
class LocalizedRing:
    prime_ideal: PrimeIdeal
    kind: RingKind

    @property
    def p(self) -> int:
        return self.prime_ideal.chain_prime

    def localization_map(self, f: ProductElement) -> Element:
        if f.context != self.prime_ideal.context:
            raise MixedContext("element from a different product ring")
        c = f[self.p]
        if self.kind is RingKind.COMPONENT_FIELD:
            return PAdicRational.from_padic_int(c)
        return c

    __call__ = localization_map

    def fraction(self, numerator: ProductElement, denominator: ProductElement) -> Element:
        """Normalize numerator/denominator into the component ring."""
        if membership(denominator, self.prime_ideal.ideal):
            raise DenominatorInPrime(f"{denominator!r} lies in {self.prime_ideal!r}")
        num, den = numerator[self.p], denominator[self.p]
        if self.kind is RingKind.COMPONENT_DVR:
            return num * den.inverse()
        return PAdicRational.from_padic_int(num) / PAdicRational.from_padic_int(den)

    def is_unit_image(self, f: ProductElement) -> bool:
        x = self.localization_map(f)
        if isinstance(x, PAdicRational):
            return not x.is_zero()
        return x.is_unit()

    def in_kernel(self, f: ProductElement) -> bool:
        return self.localization_map(f).is_zero()


def localize(prime: PrimeIdeal) -> LocalizedRing:
    kind = RingKind.COMPONENT_DVR if prime.level is Level.MAXIMAL else RingKind.COMPONENT_FIELD
    return LocalizedRing(prime, kind)


def localization_kernel(prime: PrimeIdeal) -> FinGenIdeal:
    """Kernel of R -> R_q: the minimal prime of the chain, for both primes in it."""
    return delta_lower(prime.ultrafilter, prime.context)


def henselian_check(ring: LocalizedRing | QuotientRing, poly: Sequence[int],
                    a0: PAdicInt | int) -> PAdicInt:
    """Lift a simple root of ``poly`` inside the component ring of ``ring``.

    In Z_p this is Hensel lifting.  In a field the maximal ideal is zero, so
    an approximate root is already a root and is returned as is.
    """
    p = ring.p
    N = ring.prime_ideal.context.precision
    if isinstance(ring, QuotientRing) and ring.kind is RingKind.RESIDUE_FIELD:
        N = 1
    if not isinstance(a0, PAdicInt):
        a0 = PAdicInt(p, N, int(a0) % p**N)
    if a0.prime != p:
        raise MixedContext("starting value from a different Z_p")
    if ring.kind is RingKind.COMPONENT_DVR:
        return hensel_lift(poly, a0)
    m = a0.modulus
    if poly_eval(poly, a0.residue, m) != 0:
        raise NotApproximateRoot(f"f({a0.residue}) is not 0 in the field")
    if poly_eval(poly_derivative(poly), a0.residue, m) == 0:
        raise SingularRoot(f"f'({a0.residue}) is 0 in the field")
    return a0
