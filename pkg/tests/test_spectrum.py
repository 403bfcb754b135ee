import itertools

import pytest
from hypothesis import given, strategies as st

from conftest import contexts, elements
from zhat.errors import PrecisionExhausted
from zhat.filters import enumerate_ultrafilters
from zhat.ideals import FinGenIdeal, bruteforce_member, membership
from zhat.padic import AtLeastPrecision, from_integer
from zhat.product import RingContext
from zhat.spectrum import (
    Level,
    PrimeIdeal,
    ValueSemigroup,
    alpha_lower,
    alpha_upper,
    closed_set,
    containment_matrix,
    divides,
    ideals_above,
    is_chain,
    is_prime,
    max_spec,
    min_spec,
    spec_enumerate,
    unique_maximal_over,
    unique_minimal_under,
    value_and_divisibility,
)

INF = AtLeastPrecision


def test_membership_examples(ctx235):
    g = ctx235.element([2, 3, 5])
    a = FinGenIdeal.principal(g)
    assert membership(ctx235.element([4, 9, 5]), a)
    assert not membership(ctx235.one(), a)
    b = FinGenIdeal.principal(ctx235.one() - ctx235.idempotent({2}))
    assert not membership(ctx235.element([2, 1, 1]), b)


def test_uncertain_membership_is_strict_on_request(ctx235):
    a = FinGenIdeal.from_vector(ctx235, (0, INF, 0))
    f = ctx235.element([1, 0, 4])
    assert membership(f, a)
    with pytest.raises(PrecisionExhausted):
        membership(f, a, strict=True)


def test_is_prime_examples(ctx235):
    assert is_prime(FinGenIdeal.from_vector(ctx235, (0, INF, 0))) == PrimeIdeal(ctx235, 3, Level.MINIMAL)
    assert is_prime(FinGenIdeal.from_vector(ctx235, (0, 1, 0))) == PrimeIdeal(ctx235, 3, Level.MAXIMAL)
    bad = FinGenIdeal.from_vector(ctx235, (0, 2, 0))
    assert is_prime(bad) is None
    x = ctx235.element([1, 3, 1])
    assert x not in bad and x * x in bad


def _is_domain(ctx, vector):
    nonzero = [(p, w) for p, w in zip(ctx.primes, vector) if w != 0]
    if len(nonzero) != 1:
        return False
    p, w = nonzero[0]
    if w is INF:
        return True
    m = p**w
    return not any(a * b % m == 0 for a in range(1, m) for b in range(1, m))


@pytest.mark.parametrize("primes,N", [((2, 3), 3), ((2, 3, 5), 2), ((3, 5), 3)])
def test_primality_against_zero_divisor_search(primes, N):
    ctx = RingContext(primes, N)
    for vec in itertools.product([INF] + list(range(N + 1)), repeat=len(primes)):
        a = FinGenIdeal.from_vector(ctx, vec)
        if a.is_proper():
            assert (is_prime(a) is not None) == _is_domain(ctx, vec), vec


@given(st.data())
def test_normal_form_membership_matches_bruteforce(data):
    ctx = data.draw(contexts(max_primes=3, precision=st.integers(2, 3)))
    if any(p**ctx.precision > 200 for p in ctx.primes):
        ctx = RingContext(tuple(p for p in ctx.primes if p**ctx.precision <= 200) or (2,), ctx.precision)
    gens = data.draw(st.lists(elements(ctx), min_size=1, max_size=2))
    f = data.draw(elements(ctx))
    assert membership(f, FinGenIdeal.generated_by(ctx, gens)) == bruteforce_member(f, gens)


@given(st.data())
def test_ideal_lattice_operations(data):
    ctx = data.draw(contexts(max_primes=3))
    f, g = data.draw(elements(ctx)), data.draw(elements(ctx))
    a, b = FinGenIdeal.principal(f), FinGenIdeal.principal(g)
    assert (a + b) == FinGenIdeal.generated_by(ctx, [f, g])
    assert a.issubset(a + b) and b.issubset(a + b)
    assert (a * b).issubset(a) and membership(f * g, a * b)


def test_spec_of_three_primes(ctx235):
    points = spec_enumerate(ctx235)
    assert len(points) == 6
    assert [repr(q) for q in points] == ["p_2", "m_2", "p_3", "m_3", "p_5", "m_5"]
    matrix = containment_matrix(ctx235)
    assert sum(matrix.values()) == 6 + 3
    assert len(min_spec(ctx235)) == 3 and len(max_spec(ctx235)) == 3


def test_single_prime_chain():
    ctx = RingContext((2,), 8)
    lo, hi = spec_enumerate(ctx)
    assert lo.level is Level.MINIMAL and hi.level is Level.MAXIMAL and lo.issubset(hi)


def test_pm_ring(ctx2357):
    for q in spec_enumerate(ctx2357):
        assert unique_maximal_over(q) == PrimeIdeal(ctx2357, q.chain_prime, Level.MAXIMAL)
        assert unique_minimal_under(q) == PrimeIdeal(ctx2357, q.chain_prime, Level.MINIMAL)
        assert sum(q.issubset(m) for m in max_spec(ctx2357)) == 1


def test_ideals_above_examples():
    ctx = RingContext((2, 3), 3)
    chain = ideals_above(PrimeIdeal(ctx, 3, Level.MINIMAL))
    assert [a.vector[1] for a in chain] == [INF, 3, 2, 1, 0]
    assert is_chain(chain)
    assert len(ideals_above(PrimeIdeal(ctx, 3, Level.MAXIMAL))) == 2


@pytest.mark.parametrize("N", [2, 5, 9])
def test_ideals_above_every_prime_are_a_chain(N):
    ctx = RingContext((2, 3, 5), N)
    for q in spec_enumerate(ctx):
        chain = ideals_above(q)
        assert len(chain) == (N + 2 if q.level is Level.MINIMAL else 2)
        assert all(a.issubset(b) or b.issubset(a) for a, b in itertools.combinations(chain, 2))


def test_alpha_maps_are_bijections(ctx2357):
    ufs = enumerate_ultrafilters(ctx2357)
    assert {alpha_lower(d, ctx2357) for d in ufs} == set(min_spec(ctx2357))
    assert {alpha_upper(d, ctx2357) for d in ufs} == set(max_spec(ctx2357))


def test_closed_set(ctx235):
    V = closed_set(ctx235.element([0, 3, 1]))
    assert {repr(q) for q in V} == {"p_2", "m_2", "m_3"}


def test_prime_json(ctx235):
    q = PrimeIdeal(ctx235, 3, Level.MINIMAL)
    data = q.to_json()
    assert data["generator"] == ["1", "0", "1"] and data["precision_relative"] is True
    assert PrimeIdeal.from_json(ctx235, data) == q


def test_value_semigroup_and_divisibility():
    a, b = from_integer(3, 3, 5), from_integer(18, 3, 5)
    assert value_and_divisibility(a, b) == -1 and divides(a, b) and not divides(b, a)
    assert value_and_divisibility(from_integer(6, 3, 5), a) == 0
    assert value_and_divisibility(a, from_integer(0, 3, 5)) == -1
    with pytest.raises(PrecisionExhausted):
        value_and_divisibility(from_integer(0, 3, 5), from_integer(243, 3, 5))
    G = ValueSemigroup(3, 5)
    assert G.oplus(G.value(a), G.value(b)) == G.value(a * b)
    assert G.le(G.value(a), G.value(b))
