import random

import pytest

from zhat.errors import NotACover, NotOpen
from zhat.filters import Filter
from zhat.product import RingContext
from zhat.sheaf import (
    BooleanRing,
    OpenSet,
    SectionKind,
    all_opens,
    basic_open,
    boolean_localization_check,
    covers_by_basic_opens,
    equalizer_kinds,
    glue,
    localization_at_powers,
    reduced_product,
    restriction,
    sections,
    sections_inverse_limit,
    sheaf_axiom_check,
    stalk,
    stalk_matches_localization,
)
from zhat.spectrum import Level, PrimeIdeal, spec_enumerate


@pytest.fixture
def ctx23():
    return RingContext((2, 3), 8)


def pt(ctx, p, level):
    return PrimeIdeal(ctx, p, Level.MINIMAL if level == "p" else Level.MAXIMAL)


def test_openness(ctx23):
    OpenSet(ctx23, {pt(ctx23, 2, "p"), pt(ctx23, 3, "p"), pt(ctx23, 3, "m")})
    with pytest.raises(NotOpen):
        OpenSet(ctx23, {pt(ctx23, 3, "m")})


@pytest.mark.parametrize("primes", [(2,), (2, 3), (2, 3, 5)])
def test_open_count(primes):
    assert len(all_opens(RingContext(primes, 4))) == 3 ** len(primes)


def test_sections_examples(ctx23):
    U = OpenSet(ctx23, {pt(ctx23, 2, "p"), pt(ctx23, 3, "p"), pt(ctx23, 3, "m")})
    assert sections(U).describe() == "Q_2 x Z_3"
    assert sections_inverse_limit(U) == sections(U)
    assert basic_open(ctx23.element([2, 1])) == U
    assert all(k is SectionKind.INTEGRAL for k in sections(OpenSet.whole(ctx23)).kinds)
    single = OpenSet(ctx23, {pt(ctx23, 2, "p")})
    assert sections(single).describe() == "Q_2"
    assert localization_at_powers(ctx23.element([2, 0])) == sections(single)
    assert sections(OpenSet.empty(ctx23)).describe() == "0"


@pytest.mark.parametrize("primes", [(2,), (2, 3), (2, 3, 5)])
def test_closed_form_matches_inverse_limit(primes):
    for U in all_opens(RingContext(primes, 6)):
        assert sections(U) == sections_inverse_limit(U)


def test_basic_opens_of_products(ctx23):
    rng = random.Random(7)
    for _ in range(100):
        f, g = ctx23.random_element(rng, zero_rate=0.3), ctx23.random_element(rng, zero_rate=0.3)
        assert basic_open(f) & basic_open(g) == basic_open(f * g)
        assert sections(basic_open(f)) == localization_at_powers(f)


def test_restriction_is_functorial(ctx23):
    rng = random.Random(3)
    W = OpenSet(ctx23, {pt(ctx23, 2, "p")})
    V = OpenSet(ctx23, {pt(ctx23, 2, "p"), pt(ctx23, 3, "p")})
    U = OpenSet.whole(ctx23)
    for _ in range(20):
        s = sections(U).random_element(rng)
        assert restriction(V, W)(restriction(U, V)(s)) == restriction(U, W)(s)
    with pytest.raises(ValueError):
        restriction(W, U)


def test_stalks(ctx23):
    assert stalk(pt(ctx23, 3, "m")).describe() == "Z_3"
    assert stalk(pt(ctx23, 3, "p")).describe() == "Q_3"
    assert all(stalk_matches_localization(x) for x in spec_enumerate(ctx23))


def test_sheaf_axiom_examples(ctx23):
    whole = OpenSet.whole(ctx23)
    e2 = ctx23.idempotent({2})
    cover = [basic_open(e2), basic_open(ctx23.one() - e2)]
    assert sheaf_axiom_check(whole, cover)
    assert glue(whole, cover, [sections(V).from_global(ctx23.element([5, 7])) for V in cover]) \
        == sections(whole).from_global(ctx23.element([5, 7]))
    generic = OpenSet(ctx23, {pt(ctx23, 2, "p"), pt(ctx23, 3, "p")})
    singles = [OpenSet(ctx23, {x}) for x in generic.points]
    assert sheaf_axiom_check(generic, singles)
    assert sections(generic).describe() == "Q_2 x Q_3"
    overlapping = [basic_open(ctx23.element([2, 1])), basic_open(ctx23.element([1, 3]))]
    assert sheaf_axiom_check(whole, overlapping)
    assert equalizer_kinds(whole, overlapping) == [[SectionKind.INTEGRAL], [SectionKind.INTEGRAL]]


def test_incompatible_family_does_not_glue(ctx23):
    whole = OpenSet.whole(ctx23)
    cover = [basic_open(ctx23.element([2, 1])), basic_open(ctx23.element([1, 3]))]
    family = [sections(cover[0]).from_global(ctx23.one()), sections(cover[1]).from_global(ctx23.zero())]
    with pytest.raises(ValueError):
        glue(whole, cover, family)


def test_not_a_cover(ctx23):
    whole = OpenSet.whole(ctx23)
    with pytest.raises(NotACover):
        sheaf_axiom_check(whole, [basic_open(ctx23.element([2, 1]))])


@pytest.mark.parametrize("primes", [(2,), (2, 3), (2, 3, 5)])
def test_sheaf_axiom_on_every_cover(primes):
    ctx = RingContext(primes, 6)
    rng = random.Random(11)
    for U in all_opens(ctx):
        covers = list(covers_by_basic_opens(U, 3))
        assert covers
        for cover in covers:
            assert sheaf_axiom_check(U, cover, rng, samples=1)


@pytest.mark.parametrize("size", [1, 2, 3, 4])
def test_boolean_localization(size):
    ring = BooleanRing(tuple(range(1, size + 1)))
    assert all(boolean_localization_check(ring, f) for f in ring.elements())


def test_reduced_products():
    rp = reduced_product(["F2"] * 3, Filter({1, 2}))
    assert rp.factor_labels == ("F2", "F2")
    assert rp.identified((1, 0, 1), (1, 0, 0)) and not rp.identified((1, 0, 1), (0, 0, 1))
    full = reduced_product(["F2"] * 3, Filter({1, 2, 3}))
    assert full.factor_labels == ("F2",) * 3
    assert reduced_product(["F2"] * 3, Filter({2})).factor_labels == ("F2",)
