"""Finitely generated ideals of prod Z_p in valuation-vector normal form.

Every ideal of a finite product of DVRs is a product of ideals p^k Z_p, so it
is determined by the vector w(p) = min valuation of the generators at p.  An
entry of :data:`AtLeastPrecision` stands for the zero ideal of that
component (the generators all vanish at the working precision).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import MixedContext, PrecisionExhausted
from .padic import AtLeastPrecision, Valuation
from .product import ProductElement, RingContext


@dataclass(frozen=True)
class FinGenIdeal:
    context: RingContext
    vector: tuple
    generators: tuple[ProductElement, ...] = field(default=(), compare=False)

    def __post_init__(self):
        vec = tuple(self.vector)
        object.__setattr__(self, "vector", vec)
        if len(vec) != len(self.context.primes):
            raise ValueError("valuation vector length differs from the prime set")
        N = self.context.precision
        for v in vec:
            if v is not AtLeastPrecision and not (isinstance(v, int) and 0 <= v <= N):
                raise ValueError(f"vector entry {v!r} must be AtLeastPrecision or in [0, {N}]")
        if not self.generators:
            object.__setattr__(self, "generators", (self._canonical_generator(),))

    @classmethod
    def generated_by(cls, context: RingContext, generators: Iterable[ProductElement]) -> FinGenIdeal:
        gens = tuple(generators)
        for g in gens:
            if g.context != context:
                raise MixedContext("generator from a different product ring")
        if not gens:
            return cls.zero(context)
        vec = tuple(min(g.valuations()[i] for g in gens) for i in range(len(context.primes)))
        return cls(context, vec, gens)

    @classmethod
    def principal(cls, f: ProductElement) -> FinGenIdeal:
        return cls.generated_by(f.context, [f])

    @classmethod
    def from_vector(cls, context: RingContext, vector: Sequence) -> FinGenIdeal:
        return cls(context, tuple(vector))

    @classmethod
    def zero(cls, context: RingContext) -> FinGenIdeal:
        return cls(context, (AtLeastPrecision,) * len(context.primes))

    @classmethod
    def unit(cls, context: RingContext) -> FinGenIdeal:
        return cls(context, (0,) * len(context.primes))

    def _canonical_generator(self) -> ProductElement:
        N = self.context.precision
        return self.context.element([
            0 if w is AtLeastPrecision or w >= N else p**w
            for p, w in zip(self.context.primes, self.vector)
        ])

    @property
    def generator(self) -> ProductElement:
        """A single generator: p^w(p) at each p, 0 where w is infinite."""
        return self._canonical_generator()

    def weight(self, p: int) -> Valuation:
        return self.vector[self.context.index(p)]

    def is_proper(self) -> bool:
        return any(w != 0 for w in self.vector)

    def is_precision_relative(self) -> bool:
        """True when some component is only known to vanish mod p^N."""
        return any(w is AtLeastPrecision for w in self.vector)

    def __contains__(self, f: ProductElement) -> bool:
        return membership(f, self)

    def issubset(self, other: FinGenIdeal) -> bool:
        if other.context != self.context:
            raise MixedContext("ideals of different product rings")
        return all(a >= b for a, b in zip(self.vector, other.vector))

    __le__ = issubset

    def __lt__(self, other: FinGenIdeal) -> bool:
        return self.issubset(other) and self.vector != other.vector

    def __add__(self, other: FinGenIdeal) -> FinGenIdeal:
        if other.context != self.context:
            raise MixedContext("ideals of different product rings")
        return FinGenIdeal(self.context, tuple(min(a, b) for a, b in zip(self.vector, other.vector)))

    def __mul__(self, other: FinGenIdeal) -> FinGenIdeal:
        if other.context != self.context:
            raise MixedContext("ideals of different product rings")
        N = self.context.precision
        vec = []
        for a, b in zip(self.vector, other.vector):
            s = a + b
            vec.append(s if s is AtLeastPrecision or s <= N else AtLeastPrecision)
        return FinGenIdeal(self.context, tuple(vec))

    def to_json(self) -> dict:
        return {
            "context": self.context.to_json(),
            "vector": [None if w is AtLeastPrecision else w for w in self.vector],
            "generator": [str(c.residue) for c in self.generator.components],
            "precision_relative": self.is_precision_relative(),
        }

    def __repr__(self):
        vec = ", ".join("inf" if w is AtLeastPrecision else str(w) for w in self.vector)
        return f"FinGenIdeal(w=({vec}) over {list(self.context.primes)})"


def membership_detail(f: ProductElement, ideal: FinGenIdeal) -> tuple[bool, bool]:
    """Return ``(verdict, certain)`` for ``f in ideal``.

    A component where both f and the ideal are only known to vanish mod p^N
    is counted as a match but makes the verdict uncertain.
    """
    if f.context != ideal.context:
        raise MixedContext("element and ideal from different product rings")
    certain = True
    for v, w in zip(f.valuations(), ideal.vector):
        if v is AtLeastPrecision and w is AtLeastPrecision:
            certain = False
        elif v < w:
            return False, True
    return True, certain


def membership(f: ProductElement, ideal: FinGenIdeal, strict: bool = False) -> bool:
    """Normal-form membership test; ``strict`` refuses precision-relative verdicts."""
    verdict, certain = membership_detail(f, ideal)
    if strict and not certain:
        raise PrecisionExhausted(
            f"{f!r} and {ideal!r} both vanish at the working precision on some component"
        )
    return verdict


def bruteforce_member(f: ProductElement, generators: Sequence[ProductElement]) -> bool:
    """Decide ``f in (generators)`` by enumerating additive closures.

    Works componentwise in Z/p^N: the ideal generated by g_j(p) is the
    additive subgroup they generate, found by breadth-first closure.  Meant
    for tiny moduli only (it touches every element of the subgroup).
    """
    ctx = f.context
    for i, p in enumerate(ctx.primes):
        m = p**ctx.precision
        gens = {g.components[i].residue for g in generators}
        seen = {0}
        frontier = [0]
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = (x + g) % m
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        if f.components[i].residue not in seen:
            return False
    return True
