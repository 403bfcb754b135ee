"""The ring R = prod_{p in S} Z_p over a finite prime set S.

Elements are stored densely in the order of S.  Idempotents e_X, truth sets
of componentwise predicates and the divisibility witness
``f * g = 1 - e_X`` (X the locus where f is a nonunit) live here.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import MixedContext
from .padic import DEFAULT_PRECISION, PAdicInt, _modulus, check_prime, from_integer


@dataclass(frozen=True)
class RingContext:
    primes: tuple[int, ...]
    precision: int = DEFAULT_PRECISION

    def __post_init__(self):
        primes = tuple(self.primes)
        object.__setattr__(self, "primes", primes)
        if not primes:
            raise ValueError("prime set must be nonempty")
        for p in primes:
            check_prime(p)
        if any(a >= b for a, b in zip(primes, primes[1:])):
            raise ValueError(f"primes must be strictly increasing, got {list(primes)}")
        if not isinstance(self.precision, int) or self.precision < 2:
            raise ValueError("precision must be an integer >= 2")

    def __len__(self):
        return len(self.primes)

    def index(self, p: int) -> int:
        try:
            return self.primes.index(p)
        except ValueError:
            raise KeyError(f"{p} is not in the prime set {list(self.primes)}") from None

    def element(self, values: Sequence[int] | dict) -> ProductElement:
        """Build an element from integers, one per prime (or a prime -> int map)."""
        if isinstance(values, dict):
            if set(values) != set(self.primes):
                raise ValueError(f"keys {sorted(values)} differ from {list(self.primes)}")
            values = [values[p] for p in self.primes]
        if len(values) != len(self.primes):
            raise ValueError(f"expected {len(self.primes)} components, got {len(values)}")
        return ProductElement(self, tuple(
            from_integer(int(v), p, self.precision) for v, p in zip(values, self.primes)
        ))

    def diagonal(self, n: int) -> ProductElement:
        return self.element([n] * len(self.primes))

    def one(self) -> ProductElement:
        return self.diagonal(1)

    def zero(self) -> ProductElement:
        return self.diagonal(0)

    def idempotent(self, support: Iterable[int]) -> ProductElement:
        """e_X: 1 on X, 0 off X."""
        support = frozenset(support)
        unknown = support - set(self.primes)
        if unknown:
            raise KeyError(f"{sorted(unknown)} not in the prime set")
        return self.element([1 if p in support else 0 for p in self.primes])

    def random_element(self, rng: random.Random, zero_rate: float = 0.1,
                       max_valuation: int = 3) -> ProductElement:
        """Random element biased towards small valuations and occasional zeros."""
        comps = []
        for p in self.primes:
            m = _modulus(p, self.precision)
            if rng.random() < zero_rate:
                comps.append(0)
                continue
            k = rng.randint(0, max_valuation)
            unit = rng.randrange(1, m)
            while unit % p == 0:
                unit = rng.randrange(1, m)
            comps.append(unit * p**k)
        return self.element(comps)

    def to_json(self) -> dict:
        return {"primes": list(self.primes), "N": self.precision}

    @classmethod
    def from_json(cls, data: dict) -> RingContext:
        return cls(tuple(int(p) for p in data["primes"]), int(data.get("N", DEFAULT_PRECISION)))


@dataclass(frozen=True)
class ProductElement:
    context: RingContext
    components: tuple[PAdicInt, ...]

    def __post_init__(self):
        ctx = self.context
        if len(self.components) != len(ctx.primes):
            raise ValueError("component count does not match the prime set")
        for c, p in zip(self.components, ctx.primes):
            if c.prime != p or c.precision != ctx.precision:
                raise MixedContext(f"component {c!r} does not live in Z_{p} mod p^{ctx.precision}")

    def __getitem__(self, p: int) -> PAdicInt:
        return self.components[self.context.index(p)]

    def items(self):
        return zip(self.context.primes, self.components)

    def residues(self) -> tuple[int, ...]:
        return tuple(c.residue for c in self.components)

    def _coerce(self, other) -> ProductElement:
        if isinstance(other, ProductElement):
            if other.context != self.context:
                raise MixedContext("elements of different product rings")
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return self.context.diagonal(other)
        return NotImplemented

    def _zip(self, other, op):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return ProductElement(self.context, tuple(
            op(a, b) for a, b in zip(self.components, other.components)
        ))

    def __add__(self, other):
        return self._zip(other, lambda a, b: a + b)

    __radd__ = __add__

    def __sub__(self, other):
        return self._zip(other, lambda a, b: a - b)

    def __rsub__(self, other):
        return self._zip(other, lambda a, b: b - a)

    def __mul__(self, other):
        return self._zip(other, lambda a, b: a * b)

    __rmul__ = __mul__

    def __neg__(self):
        return ProductElement(self.context, tuple(-c for c in self.components))

    def __pow__(self, k: int):
        return ProductElement(self.context, tuple(c**k for c in self.components))

    def valuations(self) -> tuple:
        return tuple(c.valuation() for c in self.components)

    def is_unit(self) -> bool:
        return is_unit(self)

    def inverse(self) -> ProductElement:
        return ProductElement(self.context, tuple(c.inverse() for c in self.components))

    def to_json(self) -> dict:
        return {"context": self.context.to_json(),
                "components": [str(c.residue) for c in self.components]}

    @classmethod
    def from_json(cls, data: dict) -> ProductElement:
        ctx = RingContext.from_json(data["context"])
        return ctx.element([int(s) for s in data["components"]])

    def __repr__(self):
        body = ", ".join(str(c.residue) for c in self.components)
        return f"ProductElement(({body}) over {list(self.context.primes)})"


class Predicate(enum.Enum):
    IS_ZERO = "IsZero"
    IN_MAXIMAL = "InMaximal"
    IS_UNIT = "IsUnit"


@dataclass(frozen=True)
class TruthSet:
    predicate: Predicate
    members: frozenset[int]
    certain: bool = True


def truth_set(f: ProductElement, predicate: Predicate) -> TruthSet:
    """Indices p at which ``predicate`` holds of f(p).

    IsZero answers rest on the residue vanishing mod p^N, so a nonempty
    IsZero truth set is flagged uncertain.
    """
    if predicate is Predicate.IS_ZERO:
        members = frozenset(p for p, c in f.items() if c.is_zero())
        return TruthSet(predicate, members, certain=not members)
    if predicate is Predicate.IN_MAXIMAL:
        return TruthSet(predicate, frozenset(p for p, c in f.items() if not c.is_unit()))
    if predicate is Predicate.IS_UNIT:
        return TruthSet(predicate, frozenset(p for p, c in f.items() if c.is_unit()))
    raise ValueError(f"unknown predicate {predicate!r}")


def nonunit_locus(f: ProductElement) -> frozenset[int]:
    return truth_set(f, Predicate.IN_MAXIMAL).members


def zero_locus(f: ProductElement) -> frozenset[int]:
    return truth_set(f, Predicate.IS_ZERO).members


def is_unit(f: ProductElement) -> bool:
    return all(c.is_unit() for c in f.components)


def division_witness(f: ProductElement) -> tuple[ProductElement, frozenset[int]]:
    """Return ``(g, X)`` with X the nonunit locus of f and ``f * g == 1 - e_X``.

    g vanishes on X and inverts f off X.
    """
    X = nonunit_locus(f)
    comps = tuple(
        PAdicInt(c.prime, c.precision, 0) if p in X else c.inverse()
        for p, c in f.items()
    )
    return ProductElement(f.context, comps), X


@dataclass(frozen=True)
class Idempotent:
    """e_X, identified with its support X inside the prime set."""

    context: RingContext
    support: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "support", frozenset(self.support))
        if not self.support <= set(self.context.primes):
            raise KeyError("support must lie inside the prime set")

    @property
    def element(self) -> ProductElement:
        return self.context.idempotent(self.support)

    def _check(self, other: Idempotent):
        if other.context != self.context:
            raise MixedContext("idempotents of different product rings")

    def meet(self, other: Idempotent) -> Idempotent:
        self._check(other)
        return Idempotent(self.context, self.support & other.support)

    def join(self, other: Idempotent) -> Idempotent:
        self._check(other)
        return Idempotent(self.context, self.support | other.support)

    def complement(self) -> Idempotent:
        return Idempotent(self.context, frozenset(self.context.primes) - self.support)

    @classmethod
    def from_element(cls, f: ProductElement) -> Idempotent:
        """Recover X from e_X; raises if f is not an idempotent."""
        if f * f != f:
            raise ValueError(f"{f!r} is not idempotent")
        return cls(f.context, frozenset(p for p, c in f.items() if c.residue == 1))


def idempotent_algebra(x: Idempotent, y: Idempotent | None = None, op: str = "meet") -> Idempotent:
    if op == "meet":
        return x.meet(y)
    if op == "join":
        return x.join(y)
    if op == "complement":
        return x.complement()
    raise ValueError(f"unknown Boolean operation {op!r}")
