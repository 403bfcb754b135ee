from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from zhat.errors import MixedContext, NonPrimeModulus, NotApproximateRoot, NotAUnit, SingularRoot
from zhat.padic import (
    AtLeastPrecision,
    PAdicInt,
    PAdicRational,
    add,
    from_integer,
    hensel_lift,
    int_valuation,
    inv_unit,
    mul,
    newton_step,
    poly_eval,
    rational_embed,
    valuation,
)

primes = st.sampled_from([2, 3, 5, 7, 11])


@st.composite
def padics(draw, p=None, N=None):
    p = p or draw(primes)
    N = N or draw(st.integers(1, 16))
    return PAdicInt(p, N, draw(st.integers(0, p**N - 1)))


@st.composite
def triples(draw):
    p, N = draw(primes), draw(st.integers(1, 16))
    return tuple(draw(padics(p, N)) for _ in range(3))


def test_worked_examples():
    assert add(from_integer(13, 3, 3), from_integer(14, 3, 3)).residue == 0
    assert mul(from_integer(2, 5, 3), from_integer(63, 5, 3)).residue == 1
    assert inv_unit(from_integer(2, 5, 3)).residue == 63
    assert inv_unit(from_integer(1, 13, 9)).residue == 1
    with pytest.raises(NotAUnit):
        inv_unit(from_integer(10, 5, 3))


def test_valuation_examples():
    assert valuation(from_integer(12, 2, 5)) == 2
    assert valuation(from_integer(0, 7, 3)) is AtLeastPrecision
    assert valuation(from_integer(7**3, 7, 3)) is AtLeastPrecision
    assert valuation(from_integer(1, 7, 3)) == 0


def test_at_least_precision_orders_above_integers():
    assert AtLeastPrecision > 10**9 and 10**9 < AtLeastPrecision
    assert AtLeastPrecision + 3 is AtLeastPrecision
    assert min(4, AtLeastPrecision) == 4


def test_non_prime_and_mixed_contexts_rejected():
    with pytest.raises(NonPrimeModulus):
        PAdicInt(9, 3, 1)
    with pytest.raises(MixedContext):
        from_integer(1, 3, 4) + from_integer(1, 3, 5)
    with pytest.raises(MixedContext):
        from_integer(1, 3, 4) * from_integer(1, 5, 4)


@given(triples())
def test_ring_laws(t):
    a, b, c = t
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a and a * b == b * a
    assert a + (-a) == from_integer(0, a.prime, a.precision)


@given(primes, st.integers(2, 16), st.data())
def test_valuation_is_additive_below_precision(p, N, data):
    a, b = data.draw(padics(p, N)), data.draw(padics(p, N))
    va, vb = a.valuation(), b.valuation()
    if va is AtLeastPrecision or vb is AtLeastPrecision or va + vb >= N:
        assert (a * b).valuation() is AtLeastPrecision or (a * b).valuation() >= min(N, va + vb)
    else:
        assert (a * b).valuation() == va + vb


@given(padics())
def test_inverse_is_an_involution(a):
    if not a.is_unit():
        with pytest.raises(NotAUnit):
            a.inverse()
        return
    assert a.inverse().inverse() == a
    assert (a * a.inverse()).residue == 1


@given(padics(), st.data())
def test_truncation_coherence(a, data):
    k = data.draw(st.integers(1, a.precision))
    t = a.truncate(k)
    assert t.residue == a.residue % a.prime**k
    assert t.truncate(1) == a.truncate(1)


def test_digits_round_trip():
    a = from_integer(1234, 5, 6)
    assert sum(d * 5**i for i, d in enumerate(a.digits())) == 1234


def test_json_round_trip():
    a = from_integer(108, 7, 3)
    assert a.to_json() == {"p": 7, "N": 3, "value": "108"}
    assert PAdicInt.from_json(a.to_json()) == a
    q = rational_embed(Fraction(5, 49), 7, 6)
    assert PAdicRational.from_json(q.to_json()) == q


def test_hensel_worked_examples():
    assert hensel_lift([-2, 0, 1], from_integer(3, 7, 3)).residue == 108
    assert hensel_lift([-2, 0, 1], from_integer(4, 7, 3)).residue == 235
    for a0 in range(5):
        with pytest.raises(NotApproximateRoot):
            hensel_lift([-2, 0, 1], from_integer(a0, 5, 3))


def test_hensel_singular_root():
    with pytest.raises(SingularRoot):
        hensel_lift([0, 0, 1], from_integer(0, 3, 4))


def test_hensel_matches_exhaustive_search():
    # every simple root mod p lifts to the unique root mod p^N above it
    for p, N in [(3, 4), (5, 3), (7, 3), (11, 2)]:
        m = p**N
        for c in range(1, p):
            poly = [-c, 0, 1]
            for a0 in range(p):
                if poly_eval(poly, a0, p) != 0:
                    continue
                root = hensel_lift(poly, from_integer(a0, p, N)).residue
                brute = [x for x in range(m) if (x * x - c) % m == 0 and x % p == a0]
                assert brute == [root]


@given(st.sampled_from([3, 5, 7, 11, 13]), st.integers(1, 10**6), st.integers(2, 20))
def test_hensel_square_roots(p, seed, N):
    a = seed % (p - 1) + 1
    c = a * a + p * seed
    root = hensel_lift([-c, 0, 1], from_integer(a, p, N))
    assert root * root == from_integer(c, p, N)
    assert root.residue % p == a
    assert newton_step([-c, 0, 1], root) == root


def test_rational_embed_examples():
    third = rational_embed(Fraction(1, 3), 2, 4)
    assert third.exponent == 0 and third.unit.residue == 11
    four_fifths = rational_embed(Fraction(4, 5), 2, 4)
    assert four_fifths.exponent == 2
    assert four_fifths.unit.residue == pow(5, -1, 16)
    assert rational_embed(0, 3, 5).is_zero()


@given(st.integers(-10**6, 10**6).filter(bool), st.integers(1, 10**6), primes)
def test_rational_embed_valuation(n, d, p):
    q = rational_embed(Fraction(n, d), p, 10)
    f = Fraction(n, d)
    assert q.exponent == int_valuation(f.numerator, p) - int_valuation(f.denominator, p)


@given(primes, st.data())
def test_rational_field_laws(p, data):
    N = 12
    xs = [rational_embed(Fraction(data.draw(st.integers(-500, 500)), data.draw(st.integers(1, 500))), p, N)
          for _ in range(3)]
    a, b, c = xs
    assert (a * b) * c == a * (b * c)
    assert (a + b).agrees(b + a)
    if not a.is_zero():
        assert (a * a.inverse()).agrees(rational_embed(1, p, N))


def test_padded_unit_agrees_to_absolute_precision():
    a = PAdicRational.from_padic_int(from_integer(8303862, 2, 24))
    b = PAdicRational.from_padic_int(from_integer(13961502, 2, 24))
    s = PAdicRational.from_padic_int(from_integer(8303862 + 13961502, 2, 24))
    assert (a + b).agrees(s)
    assert not (a + b).agrees(s, 30)


def test_rational_to_padic_int():
    q = rational_embed(Fraction(9, 2), 3, 5)
    assert q.is_integral() and q.to_padic_int().residue == 9 * pow(2, -1, 3**5) % 3**5
    with pytest.raises(NotAUnit):
        rational_embed(Fraction(1, 3), 3, 5).to_padic_int()
