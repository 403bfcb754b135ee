"""Filters and ultrafilters on the finite index set S, and the bridge maps.

On a finite set every filter is principal, so a filter is stored as its base
B (the filter being all X with B <= X <= S).  The three maps relating ideals
and filters are:

* ``ideal_filter``: ideal a  ->  {nonunit locus of f : f in a}
* ``delta_lower``:  filter   ->  {f : zero locus of f in the filter}
* ``delta_upper``:  filter   ->  {f : nonunit locus of f in the filter}
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence, Union

from .errors import ImproperIdeal, MixedContext
from .ideals import FinGenIdeal
from .padic import AtLeastPrecision
from .product import ProductElement, RingContext, nonunit_locus


@dataclass(frozen=True)
class Filter:
    base: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "base", frozenset(self.base))
        if not self.base:
            raise ValueError("a proper filter needs a nonempty base")

    def __contains__(self, X: Iterable[int]) -> bool:
        return self.base <= frozenset(X)

    def is_ultra(self) -> bool:
        return len(self.base) == 1

    def finer_than(self, other: Filter) -> bool:
        """True if every set of ``other`` belongs to this filter."""
        return self.base <= other.base

    def to_json(self) -> dict:
        return {"base": sorted(self.base)}

    @classmethod
    def from_json(cls, data: dict) -> Filter:
        return cls(frozenset(int(i) for i in data["base"]))


@dataclass(frozen=True)
class Ultrafilter:
    """The principal ultrafilter of all sets containing ``point``."""

    point: int

    @property
    def base(self) -> frozenset[int]:
        return frozenset((self.point,))

    def __contains__(self, X: Iterable[int]) -> bool:
        return self.point in frozenset(X)

    def as_filter(self) -> Filter:
        return Filter(self.base)

    def to_json(self) -> dict:
        return {"point": self.point}

    @classmethod
    def from_json(cls, data: dict) -> Ultrafilter:
        return cls(int(data["point"]))


AnyFilter = Union[Filter, Ultrafilter]


def enumerate_ultrafilters(context: RingContext) -> list[Ultrafilter]:
    return [Ultrafilter(p) for p in context.primes]


def _generators(ideal) -> tuple[RingContext, Sequence[ProductElement]]:
    if isinstance(ideal, FinGenIdeal):
        return ideal.context, ideal.generators
    gens = list(ideal)
    if not gens:
        raise ValueError("need at least one generator")
    ctx = gens[0].context
    if any(g.context != ctx for g in gens):
        raise MixedContext("generators from different product rings")
    return ctx, gens


def ideal_filter(ideal: FinGenIdeal | Sequence[ProductElement]) -> Filter:
    """The filter attached to a proper ideal, given by generators.

    Its base is the intersection of the generators' nonunit loci, which is
    the smallest nonunit locus of any element of the ideal (see
    :func:`patched_generator` for an element attaining it).
    """
    ctx, gens = _generators(ideal)
    base = frozenset(ctx.primes)
    for g in gens:
        base &= nonunit_locus(g)
    if not base:
        raise ImproperIdeal("the generators have no common nonunit index; the ideal is all of R")
    return Filter(base)


def patched_generator(ideal: FinGenIdeal | Sequence[ProductElement]) -> ProductElement:
    """An element sum_j e_{P_j} g_j of the ideal whose nonunit locus is the filter base.

    The index set is partitioned into pieces P_j on which g_j is chosen;
    outside the base some generator is a unit and is picked.
    """
    ctx, gens = _generators(ideal)
    base = ideal_filter(gens).base
    pieces: list[set[int]] = [set() for _ in gens]
    for p in ctx.primes:
        if p in base:
            pieces[0].add(p)
            continue
        j = next(j for j, g in enumerate(gens) if g[p].is_unit())
        pieces[j].add(p)
    h = ctx.zero()
    for piece, g in zip(pieces, gens):
        if piece:
            h = h + ctx.idempotent(piece) * g
    return h


def delta_lower(delta: AnyFilter, context: RingContext) -> FinGenIdeal:
    """{f : zero locus of f lies in the filter}; for an ultrafilter at i, (1 - e_{i})."""
    _check_base(delta, context)
    return FinGenIdeal.from_vector(context, tuple(
        AtLeastPrecision if p in delta.base else 0 for p in context.primes
    ))


def delta_upper(delta: AnyFilter, context: RingContext) -> FinGenIdeal:
    """{f : nonunit locus of f lies in the filter}; for an ultrafilter at p, (1 - (1 - p) e_{p})."""
    _check_base(delta, context)
    return FinGenIdeal.from_vector(context, tuple(
        1 if p in delta.base else 0 for p in context.primes
    ))


def _check_base(delta: AnyFilter, context: RingContext) -> None:
    if not delta.base <= set(context.primes):
        raise MixedContext(f"filter base {sorted(delta.base)} not inside {list(context.primes)}")
