"""Zariski opens of the finite Spec, sections of the structure sheaf, stalks.

An open set is a generization-closed set of primes: whenever it contains
the maximal prime of a chain it contains the minimal one too.  Sections over
U split componentwise, and the component at p is

* Z_p   if the maximal prime at p lies in U,
* Q_p   if only the minimal prime at p lies in U,
* absent otherwise.

:func:`sections` uses this closed form; :func:`sections_inverse_limit`
recomputes it as compatible families over the basic opens D(f) inside U.
The Boolean ring F_2^S and its reduced products are handled at the bottom.
"""

from __future__ import annotations

import enum
import itertools
import random
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Union

from .errors import NotACover, NotOpen
from .filters import Filter
from .padic import PAdicInt, PAdicRational, _modulus
from .product import ProductElement, RingContext
from .quotient import RingKind, localize
from .spectrum import Level, PrimeIdeal, spec_enumerate


class SectionKind(enum.Enum):
    ABSENT = "absent"
    INTEGRAL = "Z_p"
    FIELD = "Q_p"


# Restriction maps only ever go INTEGRAL -> FIELD -> ABSENT.
_RANK = {SectionKind.ABSENT: 0, SectionKind.FIELD: 1, SectionKind.INTEGRAL: 2}

SectionValue = Union[None, PAdicInt, PAdicRational]


@dataclass(frozen=True)
class OpenSet:
    context: RingContext
    points: frozenset[PrimeIdeal]

    def __post_init__(self):
        pts = frozenset(self.points)
        object.__setattr__(self, "points", pts)
        for x in pts:
            if x.context != self.context:
                raise NotOpen(f"{x!r} is not a point of this spectrum")
            if x.level is Level.MAXIMAL and PrimeIdeal(self.context, x.chain_prime, Level.MINIMAL) not in pts:
                raise NotOpen(
                    f"contains m_{x.chain_prime} but not its generization p_{x.chain_prime}"
                )

    def __contains__(self, x: PrimeIdeal) -> bool:
        return x in self.points

    def __le__(self, other: OpenSet) -> bool:
        return self.points <= other.points

    def __and__(self, other: OpenSet) -> OpenSet:
        return OpenSet(self.context, self.points & other.points)

    def __or__(self, other: OpenSet) -> OpenSet:
        return OpenSet(self.context, self.points | other.points)

    def __len__(self):
        return len(self.points)

    @classmethod
    def whole(cls, context: RingContext) -> OpenSet:
        return cls(context, frozenset(spec_enumerate(context)))

    @classmethod
    def empty(cls, context: RingContext) -> OpenSet:
        return cls(context, frozenset())

    def sorted_points(self) -> list[PrimeIdeal]:
        order = spec_enumerate(self.context)
        return [x for x in order if x in self.points]

    def to_json(self) -> list:
        return [{"prime": x.chain_prime, "level": x.level.value} for x in self.sorted_points()]

    @classmethod
    def from_json(cls, context: RingContext, data: list) -> OpenSet:
        return cls(context, frozenset(PrimeIdeal.from_json(context, d) for d in data))

    def __repr__(self):
        return "{" + ", ".join(map(repr, self.sorted_points())) + "}"


def all_opens(context: RingContext) -> list[OpenSet]:
    """Every open set, found by filtering all subsets of Spec for openness."""
    points = spec_enumerate(context)
    out = []
    for r in range(len(points) + 1):
        for subset in itertools.combinations(points, r):
            try:
                out.append(OpenSet(context, frozenset(subset)))
            except NotOpen:
                pass
    return out


def basic_open(f: ProductElement) -> OpenSet:
    """D(f): primes not containing f.  Zero components are precision-relative."""
    return OpenSet(f.context, frozenset(x for x in spec_enumerate(f.context) if f not in x))


def basic_open_representatives(context: RingContext) -> list[ProductElement]:
    """One f per componentwise type (0, p, 1); D(f) depends only on this type."""
    return [context.element(vals) for vals in
            itertools.product(*[(0, p, 1) for p in context.primes])]


def closed_set_of(f: ProductElement) -> frozenset[PrimeIdeal]:
    return frozenset(x for x in spec_enumerate(f.context) if f in x)


@dataclass(frozen=True)
class SectionRing:
    """A product over S of component rings, each Z_p, Q_p or absent."""

    context: RingContext
    kinds: tuple[SectionKind, ...]

    def kind(self, p: int) -> SectionKind:
        return self.kinds[self.context.index(p)]

    def classification(self) -> dict[int, str]:
        return {p: k.value for p, k in zip(self.context.primes, self.kinds)}

    def describe(self) -> str:
        parts = [f"{k.value.replace('p', str(p))}" for p, k in zip(self.context.primes, self.kinds)
                 if k is not SectionKind.ABSENT]
        return " x ".join(parts) if parts else "0"

    def from_global(self, f: ProductElement) -> tuple[SectionValue, ...]:
        """Image of a global element f of R."""
        return tuple(_embed(c, k) for c, k in zip(f.components, self.kinds))

    def random_element(self, rng: random.Random) -> tuple[SectionValue, ...]:
        out = []
        for p, k in zip(self.context.primes, self.kinds):
            m = _modulus(p, self.context.precision)
            c = PAdicInt(p, self.context.precision, rng.randrange(m))
            if k is SectionKind.FIELD:
                x = PAdicRational.from_padic_int(c)
                if not x.is_zero():
                    x = PAdicRational(p, c.precision, x.exponent - rng.randint(0, 3), x.unit)
                out.append(x)
            else:
                out.append(_embed(c, k))
        return tuple(out)

    def add(self, s, t):
        return tuple(None if a is None else a + b for a, b in zip(s, t))

    def mul(self, s, t):
        return tuple(None if a is None else a * b for a, b in zip(s, t))

    def restrict(self, target: SectionRing, s) -> tuple[SectionValue, ...]:
        """Restriction map to the sections over a smaller open."""
        out = []
        for a, src, dst in zip(s, self.kinds, target.kinds):
            if _RANK[dst] > _RANK[src]:
                raise ValueError(f"no restriction map {src.value} -> {dst.value}")
            if dst is SectionKind.ABSENT:
                out.append(None)
            elif dst is SectionKind.FIELD and isinstance(a, PAdicInt):
                out.append(PAdicRational.from_padic_int(a))
            else:
                out.append(a)
        return tuple(out)


def _embed(c: PAdicInt, kind: SectionKind) -> SectionValue:
    if kind is SectionKind.ABSENT:
        return None
    if kind is SectionKind.FIELD:
        return PAdicRational.from_padic_int(c)
    return c


def sections(U: OpenSet) -> SectionRing:
    kinds = []
    for p in U.context.primes:
        if PrimeIdeal(U.context, p, Level.MAXIMAL) in U:
            kinds.append(SectionKind.INTEGRAL)
        elif PrimeIdeal(U.context, p, Level.MINIMAL) in U:
            kinds.append(SectionKind.FIELD)
        else:
            kinds.append(SectionKind.ABSENT)
    return SectionRing(U.context, tuple(kinds))


def localization_at_powers(f: ProductElement) -> SectionRing:
    """R_f, computed componentwise: (Z_p)_a is 0, Z_p or Q_p as a is 0, a unit, or neither."""
    kinds = []
    for c in f.components:
        if c.is_zero():
            kinds.append(SectionKind.ABSENT)
        elif c.is_unit():
            kinds.append(SectionKind.INTEGRAL)
        else:
            kinds.append(SectionKind.FIELD)
    return SectionRing(f.context, tuple(kinds))


def sections_inverse_limit(U: OpenSet) -> SectionRing:
    """Sections over U as the limit of R_f over the basic opens D(f) inside U.

    Within one component the nonzero R_f(p) are subrings of Q_p joined by
    injective restriction maps, and any two of them map to the nonzero
    R_{fg}(p); a compatible family is therefore one element of Q_p lying in
    every nonzero R_f(p), so the limit component is their intersection.
    """
    ctx = U.context
    diagram = [(basic_open(f), localization_at_powers(f)) for f in basic_open_representatives(ctx)]
    diagram = [(D, R) for D, R in diagram if D <= U]
    for D, R in diagram:
        for E, T in diagram:
            if E <= D:
                # connecting map R_f -> R_g must exist
                R.restrict(T, R.from_global(ctx.one()))
    kinds = []
    for i in range(len(ctx.primes)):
        present = [R.kinds[i] for _, R in diagram if R.kinds[i] is not SectionKind.ABSENT]
        if not present:
            kinds.append(SectionKind.ABSENT)
        else:
            kinds.append(max(present, key=_RANK.__getitem__))
    return SectionRing(ctx, tuple(kinds))


def restriction(U: OpenSet, V: OpenSet):
    """The restriction map sections(U) -> sections(V) for V inside U."""
    if not V <= U:
        raise ValueError(f"{V!r} is not contained in {U!r}")
    src, dst = sections(U), sections(V)
    return lambda s: src.restrict(dst, s)


def stalk(x: PrimeIdeal) -> SectionRing:
    """Direct limit of sections over the opens containing x.

    The opens containing x form a finite system directed by reverse
    inclusion; its colimit is the sections over the smallest such open.
    """
    opens = [U for U in all_opens(x.context) if x in U]
    smallest = opens[0]
    for U in opens[1:]:
        smallest = smallest & U
    if not any(U == smallest for U in opens):
        raise AssertionError("opens containing a point have no least element")
    return sections(smallest)


def stalk_matches_localization(x: PrimeIdeal) -> bool:
    ring = stalk(x)
    loc = localize(x)
    expected = SectionKind.INTEGRAL if loc.kind is RingKind.COMPONENT_DVR else SectionKind.FIELD
    return all(
        k is (expected if p == x.chain_prime else SectionKind.ABSENT)
        for p, k in zip(x.context.primes, ring.kinds)
    )


def _check_cover(U: OpenSet, cover: Sequence[OpenSet]) -> None:
    union = frozenset()
    for V in cover:
        if not V <= U:
            raise NotACover(f"{V!r} is not inside {U!r}")
        union |= V.points
    if union != U.points:
        raise NotACover(f"union of the cover misses {sorted(map(repr, U.points - union))}")


def equalizer_kinds(U: OpenSet, cover: Sequence[OpenSet]) -> list[list[SectionKind]]:
    """Component rings of the equalizer of prod O(U_i) => prod O(U_i & U_j).

    For each index p the cover members with a nonzero p-component are split
    into classes linked by a nonzero p-component on the overlap; each class
    contributes one factor, the intersection of its rings.
    """
    _check_cover(U, cover)
    ctx = U.context
    rings = [sections(V) for V in cover]
    out = []
    for i in range(len(ctx.primes)):
        live = [j for j, R in enumerate(rings) if R.kinds[i] is not SectionKind.ABSENT]
        classes: list[set[int]] = []
        for j in live:
            linked = [c for c in classes
                      if any(sections(cover[j] & cover[k]).kinds[i] is not SectionKind.ABSENT for k in c)]
            merged = {j}.union(*linked) if linked else {j}
            classes = [c for c in classes if c not in linked] + [merged]
        out.append([max((rings[j].kinds[i] for j in c), key=_RANK.__getitem__) for c in classes])
    return out


def glue(U: OpenSet, cover: Sequence[OpenSet], family: Sequence) -> tuple[SectionValue, ...]:
    """The unique section over U restricting to ``family``; raises ValueError if incompatible."""
    _check_cover(U, cover)
    target = sections(U)
    rings = [sections(V) for V in cover]
    for a in range(len(cover)):
        for b in range(a + 1, len(cover)):
            W = sections(cover[a] & cover[b])
            if rings[a].restrict(W, family[a]) != rings[b].restrict(W, family[b]):
                raise ValueError(f"sections disagree on the overlap of {cover[a]!r} and {cover[b]!r}")
    out = []
    for i, kind in enumerate(target.kinds):
        if kind is SectionKind.ABSENT:
            out.append(None)
            continue
        # some member carries the same component ring as U (the cover reaches every point)
        out.append(next(s[i] for R, s in zip(rings, family) if R.kinds[i] is kind))
    return tuple(out)


def sheaf_axiom_check(U: OpenSet, cover: Sequence[OpenSet], rng: Optional[random.Random] = None,
                      samples: int = 3) -> bool:
    """Check that O(U) is the equalizer for ``cover``, structurally and on sampled sections."""
    eq = equalizer_kinds(U, cover)
    target = sections(U)
    for kinds, expect in zip(eq, target.kinds):
        if expect is SectionKind.ABSENT:
            if kinds:
                return False
        elif kinds != [expect]:
            return False
    rng = rng or random.Random(0)
    rings = [sections(V) for V in cover]
    for _ in range(samples):
        s = target.random_element(rng)
        family = [target.restrict(R, s) for R in rings]
        if glue(U, cover, family) != s:
            return False
    return True


def covers_by_basic_opens(U: OpenSet, max_size: int = 3) -> Iterable[list[OpenSet]]:
    """All covers of U by at most ``max_size`` distinct basic opens."""
    ctx = U.context
    basics = []
    for f in basic_open_representatives(ctx):
        D = basic_open(f)
        if D <= U and D not in basics:
            basics.append(D)
    for r in range(1, max_size + 1):
        for combo in itertools.combinations(basics, r):
            if frozenset().union(*(D.points for D in combo)) == U.points:
                yield list(combo)


# --- products of fields: F_2^S -------------------------------------------


@dataclass(frozen=True)
class BooleanRing:
    """F_2^I for a finite index set; an element is the set where it equals 1."""

    indices: tuple

    def elements(self) -> list[frozenset]:
        idx = self.indices
        return [frozenset(c) for r in range(len(idx) + 1) for c in itertools.combinations(idx, r)]

    @staticmethod
    def add(a: frozenset, b: frozenset) -> frozenset:
        return a ^ b

    @staticmethod
    def mul(a: frozenset, b: frozenset) -> frozenset:
        return a & b

    def one(self) -> frozenset:
        return frozenset(self.indices)

    def spec(self) -> list:
        """Maximal ideals {g : i not in g}, one per index."""
        return list(self.indices)

    def basic_open(self, f: frozenset) -> frozenset:
        return frozenset(i for i in self.indices if i in f)

    def principal_ideal(self, g: frozenset) -> frozenset:
        return frozenset(self.mul(g, h) for h in self.elements())


def _partition(elements, same) -> list[frozenset]:
    classes: list[list] = []
    for x in elements:
        for c in classes:
            if same(c[0], x):
                c.append(x)
                break
        else:
            classes.append([x])
    return [frozenset(c) for c in classes]


def boolean_localization_classes(ring: BooleanRing, f: frozenset) -> list[frozenset]:
    """R_f for idempotent f: r/1 = s/1 iff f(r - s) = 0."""
    return _partition(ring.elements(), lambda r, s: not ring.mul(f, ring.add(r, s)))


def boolean_quotient_classes(ring: BooleanRing, f: frozenset) -> list[frozenset]:
    """R/(1 - f), with the ideal computed by brute force."""
    ideal = ring.principal_ideal(ring.add(ring.one(), f))
    return _partition(ring.elements(), lambda r, s: ring.add(r, s) in ideal)


def boolean_localization_check(ring: BooleanRing, f: frozenset) -> bool:
    """R_f = R/(1 - f) = F_2^{support of f}, via explicit class partitions."""
    loc = boolean_localization_classes(ring, f)
    quo = boolean_quotient_classes(ring, f)
    if set(loc) != set(quo) or len(loc) != 2 ** len(f):
        return False
    # r -> r & f is a bijective ring map from the classes onto F_2^f
    images = {}
    for c in loc:
        imgs = {r & f for r in c}
        if len(imgs) != 1:
            return False
        images[c] = imgs.pop()
    if len(set(images.values())) != len(loc):
        return False
    cls = {r: c for c in loc for r in c}
    for a in ring.elements():
        for b in ring.elements():
            if images[cls[ring.add(a, b)]] != (images[cls[a]] ^ images[cls[b]]):
                return False
            if images[cls[ring.mul(a, b)]] != (images[cls[a]] & images[cls[b]]):
                return False
    return True


@dataclass(frozen=True)
class ReducedProduct:
    """prod_F R_i for a filter F on a finite index set, with F principal on ``base``.

    Two families are identified when they agree on a set of the filter,
    i.e. on all of ``base``; the quotient map is projection onto ``base``.
    """

    indices: tuple
    factors: tuple
    base: frozenset

    def quotient_map(self, family: Sequence) -> tuple:
        return tuple(x for i, x in zip(self.indices, family) if i in self.base)

    def identified(self, a: Sequence, b: Sequence) -> bool:
        agree = frozenset(i for i, x, y in zip(self.indices, a, b) if x == y)
        return self.base <= agree

    @property
    def factor_labels(self) -> tuple:
        return tuple(r for i, r in zip(self.indices, self.factors) if i in self.base)


def reduced_product(component_rings: Sequence, filt: Filter, indices: Sequence | None = None) -> ReducedProduct:
    indices = tuple(indices) if indices is not None else tuple(range(1, len(component_rings) + 1))
    if len(indices) != len(component_rings):
        raise ValueError("one component ring per index")
    if not filt.base <= set(indices):
        raise ValueError("filter base must lie inside the index set")
    return ReducedProduct(indices, tuple(component_rings), filt.base)
