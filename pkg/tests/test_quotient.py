import pytest
from hypothesis import given, strategies as st

from conftest import contexts, elements
from zhat.errors import DenominatorInPrime, NotApproximateRoot
from zhat.filters import Ultrafilter, delta_lower
from zhat.ideals import membership
from zhat.padic import PAdicRational
from zhat.product import RingContext
from zhat.quotient import RingKind, henselian_check, localization_kernel, localize, quotient
from zhat.spectrum import Level, PrimeIdeal, spec_enumerate


def test_kinds(ctx235):
    m3, p3 = PrimeIdeal(ctx235, 3, Level.MAXIMAL), PrimeIdeal(ctx235, 3, Level.MINIMAL)
    assert quotient(m3).kind is RingKind.RESIDUE_FIELD
    assert quotient(p3).kind is RingKind.COMPONENT_DVR
    assert localize(m3).kind is RingKind.COMPONENT_DVR
    assert localize(p3).kind is RingKind.COMPONENT_FIELD


def test_residue_field_tables(ctx235):
    F3 = quotient(PrimeIdeal(ctx235, 3, Level.MAXIMAL))
    assert [x.residue for x in F3.elements()] == [0, 1, 2]
    for a in range(3):
        for b in range(3):
            assert F3(F3.lift(a) + F3.lift(b)).residue == (a + b) % 3
            assert F3(F3.lift(a) * F3.lift(b)).residue == (a * b) % 3


@given(st.data())
def test_projections_are_ring_maps_with_prime_kernels(data):
    ctx = data.draw(contexts())
    q = data.draw(st.sampled_from(spec_enumerate(ctx)))
    Q = quotient(q)
    f, g = data.draw(elements(ctx)), data.draw(elements(ctx))
    assert Q(f + g) == Q(f) + Q(g) and Q(f * g) == Q(f) * Q(g)
    assert Q.in_kernel(f) == (f in q)
    assert Q(Q.lift(Q(f))) == Q(f)


@given(st.data())
def test_localizations_are_ring_maps_with_kernel_delta_lower(data):
    ctx = data.draw(contexts())
    q = data.draw(st.sampled_from(spec_enumerate(ctx)))
    L = localize(q)
    f, g = data.draw(elements(ctx)), data.draw(elements(ctx))
    same = (lambda x, y: x.agrees(y)) if L.kind is RingKind.COMPONENT_FIELD else (lambda x, y: x == y)
    assert same(L(f + g), L(f) + L(g)) and same(L(f * g), L(f) * L(g))
    assert L.in_kernel(f) == membership(f, localization_kernel(q))


def test_localization_kernel_is_shared_by_the_chain(ctx235):
    expected = delta_lower(Ultrafilter(3), ctx235)
    assert localization_kernel(PrimeIdeal(ctx235, 3, Level.MAXIMAL)) == expected
    assert localization_kernel(PrimeIdeal(ctx235, 3, Level.MINIMAL)) == expected
    assert expected.generator == ctx235.element([1, 0, 1])


def test_fractions():
    ctx = RingContext((2, 3), 6)
    L = localize(PrimeIdeal(ctx, 2, Level.MINIMAL))
    x = L.fraction(ctx.element([3, 0]), ctx.element([4, 1]))
    assert isinstance(x, PAdicRational) and x.exponent == -2 and x.unit.residue == 3
    with pytest.raises(DenominatorInPrime):
        L.fraction(ctx.one(), ctx.element([0, 1]))
    M = localize(PrimeIdeal(ctx, 2, Level.MAXIMAL))
    assert M.fraction(ctx.element([3, 0]), ctx.element([5, 0])).residue == 3 * pow(5, -1, 64) % 64
    with pytest.raises(DenominatorInPrime):
        M.fraction(ctx.one(), ctx.element([2, 1]))


def test_integers_in_localizations(ctx235):
    L = localize(PrimeIdeal(ctx235, 5, Level.MINIMAL))
    M = localize(PrimeIdeal(ctx235, 5, Level.MAXIMAL))
    for n in range(1, 101):
        assert L.is_unit_image(ctx235.diagonal(n))
        assert M.is_unit_image(ctx235.diagonal(n)) == (n % 5 != 0)


def test_henselian():
    ctx = RingContext((2, 7), 3)
    assert henselian_check(localize(PrimeIdeal(ctx, 7, Level.MAXIMAL)), [-2, 0, 1], 3).residue == 108
    assert henselian_check(quotient(PrimeIdeal(ctx, 7, Level.MINIMAL)), [-2, 0, 1], 4).residue == 235
    F7 = quotient(PrimeIdeal(ctx, 7, Level.MAXIMAL))
    assert henselian_check(F7, [-2, 0, 1], 3).residue == 3
    with pytest.raises(NotApproximateRoot):
        henselian_check(localize(PrimeIdeal(RingContext((5,), 3), 5, Level.MAXIMAL)), [-2, 0, 1], 1)
