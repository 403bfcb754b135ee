import itertools

import pytest
from hypothesis import given, strategies as st

from conftest import contexts, elements
from zhat.errors import MixedContext
from zhat.product import (
    Idempotent,
    Predicate,
    ProductElement,
    RingContext,
    division_witness,
    idempotent_algebra,
    is_unit,
    truth_set,
)


def test_truth_sets_worked_example(ctx235):
    f = ctx235.element([0, 3, 1])
    zero = truth_set(f, Predicate.IS_ZERO)
    assert zero.members == {2} and zero.certain is False
    assert truth_set(f, Predicate.IN_MAXIMAL).members == {2, 3}
    assert truth_set(f, Predicate.IS_UNIT).members == {5}
    assert truth_set(ctx235.one(), Predicate.IN_MAXIMAL).members == frozenset()


def test_truth_sets_of_idempotents(ctx235):
    e = ctx235.idempotent({2, 5})
    assert truth_set(e, Predicate.IS_ZERO).members == {3}
    assert truth_set(e, Predicate.IS_UNIT).members == {2, 5}


def test_is_unit_examples(ctx235):
    assert is_unit(ctx235.element([1, 1, 1]))
    assert not is_unit(ctx235.element([2, 1, 1]))
    for r in range(3):
        for X in itertools.combinations(ctx235.primes, r):
            assert not is_unit(ctx235.idempotent(X))


def test_division_witness_examples(ctx235):
    g, X = division_witness(ctx235.element([4, 1, 1]))
    assert X == {2} and g == ctx235.element([0, 1, 1])
    f = ctx235.element([7, 5, 3])
    g, X = division_witness(f)
    assert X == frozenset() and f * g == ctx235.one()
    g, X = division_witness(ctx235.zero())
    assert X == {2, 3, 5} and g == ctx235.zero()


@given(st.data())
def test_division_witness_round_trip(data):
    ctx = data.draw(contexts())
    f = data.draw(elements(ctx))
    g, X = division_witness(f)
    assert f * g == ctx.one() - ctx.idempotent(X)
    assert X == truth_set(f, Predicate.IN_MAXIMAL).members
    assert is_unit(f) == (not X)


@given(st.data())
def test_truth_set_laws(data):
    ctx = data.draw(contexts())
    f, g = data.draw(elements(ctx)), data.draw(elements(ctx))
    mu = lambda x: truth_set(x, Predicate.IN_MAXIMAL).members
    assert mu(f * g) == mu(f) | mu(g)
    assert truth_set(f, Predicate.IS_UNIT).members == frozenset(ctx.primes) - mu(f)


@given(st.data())
def test_ring_laws(data):
    ctx = data.draw(contexts(max_primes=3))
    a, b, c = (data.draw(elements(ctx)) for _ in range(3))
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a - a == ctx.zero()


def test_idempotent_algebra_examples(ctx235):
    e23, e35 = Idempotent(ctx235, {2, 3}), Idempotent(ctx235, {3, 5})
    assert idempotent_algebra(e23, e35, "meet").support == {3}
    assert idempotent_algebra(Idempotent(ctx235, {2}), Idempotent(ctx235, {3}), "join").support == {2, 3}
    assert idempotent_algebra(Idempotent(ctx235, {2, 3, 5}), None, "complement").element == ctx235.zero()


@pytest.mark.parametrize("primes", [(2,), (2, 3), (2, 3, 5), (2, 3, 5, 7)])
def test_idempotents_form_the_power_set(primes):
    ctx = RingContext(primes, 6)
    subsets = [frozenset(c) for r in range(len(primes) + 1) for c in itertools.combinations(primes, r)]
    elems = {X: ctx.idempotent(X) for X in subsets}
    assert len(set(elems.values())) == len(subsets)
    for X in subsets:
        e = elems[X]
        assert e * e == e
        assert Idempotent.from_element(e).support == X
        assert ctx.one() - e == elems[frozenset(primes) - X]
        for Y in subsets:
            f = elems[Y]
            assert e * f == elems[X & Y]
            assert e + f - e * f == elems[X | Y]


def test_mixed_contexts_rejected():
    a = RingContext((2, 3), 5).one()
    b = RingContext((2, 3), 6).one()
    with pytest.raises(MixedContext):
        a + b


def test_json_round_trip(ctx235):
    f = ctx235.element([4, 1, 1])
    data = f.to_json()
    assert data == {"context": {"primes": [2, 3, 5], "N": 24}, "components": ["4", "1", "1"]}
    assert ProductElement.from_json(data) == f
    assert RingContext.from_json(data["context"]) == ctx235


def test_context_validation():
    with pytest.raises(ValueError):
        RingContext((3, 2), 5)
    with pytest.raises(ValueError):
        RingContext((2, 4), 5)
