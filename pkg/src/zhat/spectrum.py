"""Spec of prod_{p in S} Z_p: prime chains, pm-ring property, value semigroup.

Each p in S contributes one chain of length two, the minimal prime
(1 - e_{p}) (vector: infinite at p, 0 elsewhere) below the maximal prime
(1 - (1 - p) e_{p}) (vector: 1 at p, 0 elsewhere).
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Optional

from .errors import MixedContext, PrecisionExhausted
from .filters import Ultrafilter, delta_lower, delta_upper, enumerate_ultrafilters
from .ideals import FinGenIdeal, membership
from .padic import AtLeastPrecision, PAdicInt, Valuation
from .product import ProductElement, RingContext


class Level(enum.Enum):
    MINIMAL = "minimal"
    MAXIMAL = "maximal"


@dataclass(frozen=True)
class PrimeIdeal:
    context: RingContext
    chain_prime: int
    level: Level

    def __post_init__(self):
        self.context.index(self.chain_prime)

    @property
    def ultrafilter(self) -> Ultrafilter:
        return Ultrafilter(self.chain_prime)

    @property
    def ideal(self) -> FinGenIdeal:
        if self.level is Level.MINIMAL:
            return delta_lower(self.ultrafilter, self.context)
        return delta_upper(self.ultrafilter, self.context)

    @property
    def generator(self) -> ProductElement:
        return self.ideal.generator

    def __contains__(self, f: ProductElement) -> bool:
        return membership(f, self.ideal)

    def issubset(self, other: PrimeIdeal) -> bool:
        return self.ideal.issubset(other.ideal)

    def to_json(self) -> dict:
        return {
            "prime": self.chain_prime,
            "level": self.level.value,
            "generator": [str(c.residue) for c in self.generator.components],
            "precision_relative": self.level is Level.MINIMAL,
        }

    @classmethod
    def from_json(cls, context: RingContext, data: dict) -> PrimeIdeal:
        return cls(context, int(data["prime"]), Level(data["level"]))

    def __repr__(self):
        sym = "p" if self.level is Level.MINIMAL else "m"
        return f"{sym}_{self.chain_prime}"


def minimal_prime(context: RingContext, p: int) -> PrimeIdeal:
    return PrimeIdeal(context, p, Level.MINIMAL)


def maximal_prime(context: RingContext, p: int) -> PrimeIdeal:
    return PrimeIdeal(context, p, Level.MAXIMAL)


def is_prime(ideal: FinGenIdeal) -> Optional[PrimeIdeal]:
    """Classify a proper ideal as a prime of R, or return None.

    Z/p^k is a domain only for k in {1, infinity}, and a product of two
    nonzero rings is never a domain, hence the vector test.
    """
    support = [(p, w) for p, w in zip(ideal.context.primes, ideal.vector) if w != 0]
    if len(support) != 1:
        return None
    p, w = support[0]
    if w is AtLeastPrecision:
        return PrimeIdeal(ideal.context, p, Level.MINIMAL)
    if w == 1:
        return PrimeIdeal(ideal.context, p, Level.MAXIMAL)
    return None


def spec_enumerate(context: RingContext) -> list[PrimeIdeal]:
    """All primes, chain by chain in the order of S, minimal before maximal."""
    out = []
    for delta in enumerate_ultrafilters(context):
        out.append(PrimeIdeal(context, delta.point, Level.MINIMAL))
        out.append(PrimeIdeal(context, delta.point, Level.MAXIMAL))
    return out


def containment_matrix(context: RingContext) -> dict[tuple[PrimeIdeal, PrimeIdeal], bool]:
    points = spec_enumerate(context)
    return {(a, b): a.issubset(b) for a in points for b in points}


def min_spec(context: RingContext) -> list[PrimeIdeal]:
    """Minimal elements of Spec under inclusion, found from the containment matrix."""
    points = spec_enumerate(context)
    return [a for a in points if not any(b.issubset(a) and b != a for b in points)]


def max_spec(context: RingContext) -> list[PrimeIdeal]:
    points = spec_enumerate(context)
    return [a for a in points if not any(a.issubset(b) and b != a for b in points)]


def alpha_lower(delta: Ultrafilter, context: RingContext) -> PrimeIdeal:
    prime = is_prime(delta_lower(delta, context))
    assert prime is not None
    return prime


def alpha_upper(delta: Ultrafilter, context: RingContext) -> PrimeIdeal:
    prime = is_prime(delta_upper(delta, context))
    assert prime is not None
    return prime


def closed_set(f: ProductElement) -> list[PrimeIdeal]:
    """V(f): the primes containing f."""
    return [q for q in spec_enumerate(f.context) if f in q]


def unique_maximal_over(prime: PrimeIdeal) -> PrimeIdeal:
    """The maximal ideal above ``prime``, found by exhaustive containment."""
    above = [m for m in max_spec(prime.context) if prime.issubset(m)]
    if len(above) != 1:
        raise AssertionError(f"{prime!r} lies under {len(above)} maximal ideals")
    return above[0]


def unique_minimal_under(prime: PrimeIdeal) -> PrimeIdeal:
    below = [q for q in min_spec(prime.context) if q.issubset(prime)]
    if len(below) != 1:
        raise AssertionError(f"{prime!r} lies over {len(below)} minimal primes")
    return below[0]


def ideals_above(prime: PrimeIdeal) -> list[FinGenIdeal]:
    """Every normal-form ideal containing ``prime``, smallest first.

    Valuations are capped at N.  The candidates are enumerated over all
    vectors below the prime's vector and the result is checked to be a chain.
    """
    ctx = prime.context
    N = ctx.precision
    top = prime.ideal.vector
    choices = []
    for w in top:
        vals: list[Valuation] = [AtLeastPrecision] + list(range(N, -1, -1))
        choices.append([v for v in vals if v <= w])
    found = []
    for vec in itertools.product(*choices):
        cand = FinGenIdeal.from_vector(ctx, vec)
        if prime.ideal.issubset(cand):
            found.append(cand)
    found.sort(key=lambda a: sum(1 for b in found if b.issubset(a)))
    for a, b in zip(found, found[1:]):
        if not a < b:
            raise AssertionError(f"ideals above {prime!r} are not a chain: {a!r}, {b!r}")
    return found


def is_chain(ideals: list[FinGenIdeal]) -> bool:
    return all(a.issubset(b) or b.issubset(a) for a, b in itertools.combinations(ideals, 2))


class ValueSemigroup:
    """Principal ideals (a) of Z_p ordered by divisibility, with (a) + (b) = (ab).

    Values are valuations: naturals below N, or AtLeastPrecision standing
    for the ideal (0) = infinity.
    """

    identity = 0
    infinity = AtLeastPrecision

    def __init__(self, prime: int, precision: int):
        self.prime = prime
        self.precision = precision

    def value(self, a: PAdicInt) -> Valuation:
        if a.prime != self.prime or a.precision != self.precision:
            raise MixedContext("element from a different Z_p")
        return a.valuation()

    def oplus(self, x: Valuation, y: Valuation) -> Valuation:
        s = x + y
        if s is not AtLeastPrecision and s >= self.precision:
            return AtLeastPrecision
        return s

    @staticmethod
    def le(x: Valuation, y: Valuation) -> bool:
        return x <= y


def value_and_divisibility(a: PAdicInt, b: PAdicInt) -> int:
    """Compare principal ideals: -1 if (a) < (b) (a properly divides b), 0 if equal, 1 if (a) > (b)."""
    if a.prime != b.prime or a.precision != b.precision:
        raise MixedContext("elements of different Z_p")
    va, vb = a.valuation(), b.valuation()
    if va is AtLeastPrecision and vb is AtLeastPrecision:
        raise PrecisionExhausted("both elements vanish at the working precision")
    if va == vb:
        return 0
    return -1 if va < vb else 1


def divides(a: PAdicInt, b: PAdicInt) -> bool:
    """a | b in Z_p, i.e. (a) <= (b)."""
    return value_and_divisibility(a, b) <= 0
