import itertools

import pytest
from hypothesis import given, strategies as st

from conftest import contexts, elements
from zhat.errors import ImproperIdeal
from zhat.filters import (
    Filter,
    Ultrafilter,
    delta_lower,
    delta_upper,
    enumerate_ultrafilters,
    ideal_filter,
    patched_generator,
)
from zhat.ideals import FinGenIdeal, membership
from zhat.padic import AtLeastPrecision
from zhat.product import Predicate, RingContext, division_witness, truth_set


@pytest.mark.parametrize("primes,count", [((2,), 1), ((2, 3, 5), 3), ((2, 3, 5, 7, 11), 5)])
def test_ultrafilter_count(primes, count):
    ufs = enumerate_ultrafilters(RingContext(primes, 4))
    assert len(ufs) == count and all(u.as_filter().is_ultra() for u in ufs)


def test_ideal_filter_examples(ctx235):
    assert ideal_filter([ctx235.element([2, 3, 1])]).base == {2, 3}
    assert ideal_filter([ctx235.one() - ctx235.idempotent({3})]).base == {3}
    with pytest.raises(ImproperIdeal):
        ideal_filter([ctx235.one()])
    with pytest.raises(ImproperIdeal):
        ideal_filter([ctx235.element([2, 1, 1]), ctx235.element([1, 3, 1])])


def test_delta_lower_examples(ctx235):
    low = delta_lower(Ultrafilter(3), ctx235)
    assert low.generator == ctx235.element([1, 0, 1])
    assert membership(ctx235.element([1, 0, 4]), low)
    assert not membership(ctx235.idempotent({3}), low)


def test_delta_upper_examples(ctx235):
    up = delta_upper(Ultrafilter(3), ctx235)
    assert up.generator == ctx235.element([1, 3, 1])
    assert membership(ctx235.element([0, 6, 7]), up)
    assert not membership(ctx235.one(), up)


def test_filter_membership_and_order():
    F = Filter({2, 3})
    assert {2, 3, 5} in F and {2} not in F
    assert Filter({3}).finer_than(F) and not F.finer_than(Filter({3}))
    assert Filter.from_json(F.to_json()) == F
    with pytest.raises(ValueError):
        Filter(set())


def test_round_trips_over_all_ultrafilters(ctx2357):
    for d in enumerate_ultrafilters(ctx2357):
        assert ideal_filter(delta_lower(d, ctx2357)).base == d.base
        assert ideal_filter(delta_upper(d, ctx2357)).base == d.base


def test_round_trips_over_all_filters():
    ctx = RingContext((2, 3, 5, 7), 6)
    for r in range(1, 5):
        for base in itertools.combinations(ctx.primes, r):
            F = Filter(frozenset(base))
            assert ideal_filter(delta_lower(F, ctx)).base == F.base
            assert ideal_filter(delta_upper(F, ctx)).base == F.base


@st.composite
def proper_ideals(draw):
    ctx = draw(contexts(max_primes=4, precision=st.integers(3, 10)))
    gens = draw(st.lists(elements(ctx), min_size=1, max_size=3))
    p0 = draw(st.sampled_from(ctx.primes))
    force = ctx.element([p0 if p == p0 else 1 for p in ctx.primes])
    return ctx, [g * force for g in gens]


@given(proper_ideals(), st.data())
def test_sandwich(ideal, data):
    ctx, gens = ideal
    a = FinGenIdeal.generated_by(ctx, gens)
    F = ideal_filter(gens)
    g = patched_generator(gens)
    assert membership(g, a)
    assert truth_set(g, Predicate.IN_MAXIMAL).members == F.base
    # anything vanishing on the base is a multiple of g
    f = data.draw(elements(ctx)) * ctx.idempotent(set(ctx.primes) - F.base)
    h, _ = division_witness(g)
    assert f * h * g == f
    assert membership(f, delta_lower(F, ctx)) and membership(f, a)
    # every element of a is a nonunit on the base
    x = sum((data.draw(elements(ctx)) * gen for gen in gens), ctx.zero())
    assert F.base <= truth_set(x, Predicate.IN_MAXIMAL).members
    assert membership(x, delta_upper(F, ctx))


@given(proper_ideals())
def test_filter_of_an_ideal_is_read_off_its_normal_form(ideal):
    ctx, gens = ideal
    a = FinGenIdeal.generated_by(ctx, gens)
    base = {p for p, w in zip(ctx.primes, a.vector) if w is AtLeastPrecision or w > 0}
    assert ideal_filter(a).base == base
