"""Named verification suites, one per structural result about Spec(prod Z_p).

Every suite compares the library against an independent route (brute-force
enumeration, explicit witnesses, modular search) on random or exhaustive
finite instances.  Suites are deterministic given the config seed and may
run concurrently: each owns its RNG and touches only immutable data.
"""

from __future__ import annotations

import itertools
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable

from . import asymptotic as asym
from .adeles import (
    AdeleElement,
    adele_from_fraction,
    adele_localize,
    adele_quotient,
    extend,
    primes_avoiding_integers,
    random_adele,
    spec_adeles,
)
from .config import Config
from .errors import NotApproximateRoot, NotOpen, ZhatError
from .filters import (
    Filter,
    delta_lower,
    delta_upper,
    enumerate_ultrafilters,
    ideal_filter,
    patched_generator,
)
from .ideals import FinGenIdeal, bruteforce_member, membership
from .padic import AtLeastPrecision, PAdicInt, PAdicRational, from_integer, hensel_lift, int_valuation, newton_step
from .product import (
    Predicate,
    ProductElement,
    RingContext,
    division_witness,
    is_unit,
    truth_set,
)
from .quotient import RingKind, henselian_check, localization_kernel, localize, quotient
from .sheaf import (
    BooleanRing,
    OpenSet,
    SectionKind,
    all_opens,
    basic_open,
    boolean_localization_check,
    closed_set_of,
    covers_by_basic_opens,
    reduced_product,
    restriction,
    sections,
    sections_inverse_limit,
    sheaf_axiom_check,
    stalk_matches_localization,
)
from .spectrum import (
    Level,
    PrimeIdeal,
    alpha_lower,
    alpha_upper,
    ideals_above,
    is_chain,
    is_prime,
    max_spec,
    min_spec,
    spec_enumerate,
    unique_maximal_over,
    unique_minimal_under,
)


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class SuiteResult:
    suite: str
    statement: str
    checks: list[Check] = field(default_factory=list)
    error: str = ""

    @property
    def passed(self) -> bool:
        return not self.error and all(c.passed for c in self.checks)

    def check(self, name: str, ok: bool, detail: str = "") -> bool:
        self.checks.append(Check(name, bool(ok), "" if ok else detail))
        return bool(ok)

    def to_json(self) -> dict:
        out = {
            "suite": self.suite,
            "statement": self.statement,
            "passed": self.passed,
            "checks": len(self.checks),
            "failures": [{"check": c.name, "detail": c.detail} for c in self.checks if not c.passed],
        }
        if self.error:
            out["error"] = self.error
        return out


SUITES: dict[str, tuple[str, Callable]] = {}


def suite(name: str, statement: str):
    def register(fn):
        SUITES[name] = (statement, fn)
        return fn
    return register


def run_suite(name: str, cfg: Config, **opts) -> SuiteResult:
    statement, fn = SUITES[name]
    result = SuiteResult(name, statement)
    rng = random.Random(f"{cfg.seed}:{name}")
    try:
        fn(result, cfg, rng, **opts)
    except (ZhatError, AssertionError, ArithmeticError, ValueError) as exc:
        result.error = f"{type(exc).__name__}: {exc}"
    return result


def run_all(cfg: Config, names: list[str] | None = None, workers: int = 4) -> list[SuiteResult]:
    names = list(SUITES) if names is None else names
    unknown = [n for n in names if n not in SUITES]
    if unknown:
        raise KeyError(f"unknown suite {unknown[0]!r}")
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(lambda n: run_suite(n, cfg), names))


# --- independent oracles -----------------------------------------------------


def _unit_by_inversion(f: ProductElement) -> bool:
    """Unit test through modular inversion, without looking at valuations."""
    for c in f.components:
        try:
            pow(c.residue, -1, c.modulus)
        except ValueError:
            return False
    return True


def _is_domain_bruteforce(ctx: RingContext, vector) -> bool:
    """Is R/a a domain?  R/a = prod Z/p^w(p); checked by zero-divisor search."""
    nonzero = [(p, w) for p, w in zip(ctx.primes, vector) if w != 0]
    if len(nonzero) != 1:
        return False  # zero ring, or e_X (1 - e_X) = 0 with both factors nonzero
    p, w = nonzero[0]
    if w is AtLeastPrecision:
        return True  # Z_p itself
    m = p**w
    return not any(a * b % m == 0 for a in range(1, m) for b in range(1, m))


def _square_roots_bruteforce(c: int, modulus: int) -> list[int]:
    return [x for x in range(modulus) if (x * x - c) % modulus == 0]


def _eventual_sign(x: asym.AsymptoticNat, y: asym.AsymptoticNat) -> int:
    """Sign of x(n) - y(n) for all large n, evaluated past the Cauchy root bound."""
    a, b = x.coefficients, y.coefficients
    size = max(len(a), len(b))
    diff = [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(size)]
    while diff and diff[-1] == 0:
        diff.pop()
    if not diff:
        return 0
    bound = 2 + max((abs(c) for c in diff[:-1]), default=0) // abs(diff[-1])
    signs = set()
    for n in (bound, 2 * bound + 7):
        v = x(n) - y(n)
        signs.add((v > 0) - (v < 0))
    if len(signs) != 1:
        raise AssertionError(f"sign of {x!r} - {y!r} not settled past {bound}")
    return signs.pop()


def _close(x, y, absolute: int | None = None) -> bool:
    """Equality up to the absolute precision carried by Z_p inputs."""
    if isinstance(x, tuple):
        return len(x) == len(y) and all(_close(a, b, absolute) for a, b in zip(x, y))
    if isinstance(x, PAdicRational):
        return x.agrees(y, absolute)
    return x == y


def _random_proper_ideal(ctx: RingContext, rng: random.Random) -> list[ProductElement]:
    p0 = rng.choice(ctx.primes)
    force = ctx.element([p0 if p == p0 else 1 for p in ctx.primes])
    gens = []
    for _ in range(rng.randint(1, 3)):
        gens.append(ctx.random_element(rng) * force)
    return gens


def _random_combination(gens, rng: random.Random) -> ProductElement:
    ctx = gens[0].context
    h = ctx.zero()
    for g in gens:
        h = h + ctx.random_element(rng, zero_rate=0.2) * g
    return h


def _random_multiple_vanishing_on(ctx: RingContext, base, rng: random.Random) -> ProductElement:
    return ctx.random_element(rng) * ctx.idempotent(set(ctx.primes) - set(base))


# --- suites --------------------------------------------------------------------


@suite("division-witness", "a nonunit locus is empty iff f is a unit, and 1 - e_X lies in fR")
def _division_witness(res: SuiteResult, cfg: Config, rng, samples: int = 500, **_):
    ctx = cfg.context
    for k in range(samples):
        f = ctx.random_element(rng, zero_rate=0.15)
        locus = truth_set(f, Predicate.IN_MAXIMAL).members
        if not res.check("unit criterion", (not locus) == _unit_by_inversion(f) == is_unit(f), repr(f)):
            continue
        g, X = division_witness(f)
        res.check("witness locus", X == locus, repr(f))
        res.check("f * g == 1 - e_X", f * g == ctx.one() - ctx.idempotent(X), f"{f!r}, {g!r}")
        h = ctx.random_element(rng)
        res.check("locus of product",
                  truth_set(f * h, Predicate.IN_MAXIMAL).members
                  == locus | truth_set(h, Predicate.IN_MAXIMAL).members, repr((f, h)))
        res.check("unit locus complement",
                  truth_set(f, Predicate.IS_UNIT).members == frozenset(ctx.primes) - locus, repr(f))


@suite("ideal-filter", "the minimal and maximal ideals of the attached filter sandwich every ideal")
def _ideal_filter(res: SuiteResult, cfg: Config, rng, ideals: int = 200, probes: int = 50, **_):
    ctx = cfg.context
    for delta in enumerate_ultrafilters(ctx):
        res.check("filter of delta_*", ideal_filter(delta_lower(delta, ctx)).base == delta.base, repr(delta))
        res.check("filter of delta^*", ideal_filter(delta_upper(delta, ctx)).base == delta.base, repr(delta))
    for _ in range(ideals):
        gens = _random_proper_ideal(ctx, rng)
        a = FinGenIdeal.generated_by(ctx, gens)
        F = ideal_filter(gens)
        lower, upper = delta_lower(F, ctx), delta_upper(F, ctx)
        g = patched_generator(gens)
        res.check("patched generator attains the base", truth_set(g, Predicate.IN_MAXIMAL).members == F.base)
        h, _X = division_witness(g)
        for _ in range(probes // 2):
            f = _random_multiple_vanishing_on(ctx, F.base, rng)
            ok = membership(f, lower) and membership(f, a) and (f * h) * g == f
            res.check("delta_* inside a (explicit witness)", ok, f"{f!r} vs {gens!r}")
            x = _random_combination(gens, rng)
            ok = membership(x, upper) and F.base <= truth_set(x, Predicate.IN_MAXIMAL).members
            res.check("a inside delta^*", ok, f"{x!r} vs {gens!r}")
        extra = _random_proper_ideal(ctx, rng)
        if ideal_filter(gens).base & ideal_filter(extra).base:
            bigger = ideal_filter(gens + extra)
            res.check("monotone", bigger.base <= F.base, repr((gens, extra)))


@suite("spectrum-chains", "Spec splits into one two-point chain per prime; primes are principal")
def _spectrum_chains(res: SuiteResult, cfg: Config, rng, **_):
    ctx = cfg.context
    points = spec_enumerate(ctx)
    res.check("2|S| points", len(points) == 2 * len(ctx.primes), str(len(points)))
    for a in points:
        for b in points:
            expect = a == b or (a.chain_prime == b.chain_prime and a.level is Level.MINIMAL)
            res.check("containment matrix", a.issubset(b) == expect, f"{a!r} in {b!r}")
        res.check("classification round trip", is_prime(FinGenIdeal.principal(a.generator)) == a, repr(a))
    for p in ctx.primes:
        lo, hi = PrimeIdeal(ctx, p, Level.MINIMAL), PrimeIdeal(ctx, p, Level.MAXIMAL)
        res.check("chain is strict", lo.issubset(hi) and lo.ideal != hi.ideal, str(p))
    small = RingContext(ctx.primes[:2], 3)
    choices = [AtLeastPrecision] + list(range(small.precision + 1))
    for vec in itertools.product(choices, repeat=len(small.primes)):
        a = FinGenIdeal.from_vector(small, vec)
        if not a.is_proper():
            continue
        res.check("primality vs zero divisors", (is_prime(a) is not None) == _is_domain_bruteforce(small, vec),
                  repr(a))
    small = RingContext(ctx.primes[:2], 3)
    for _ in range(30):
        gens = [small.random_element(rng, max_valuation=2) for _ in range(rng.randint(1, 2))]
        a = FinGenIdeal.generated_by(small, gens)
        f = small.random_element(rng, zero_rate=0.3, max_valuation=3)
        res.check("normal form vs brute-force membership",
                  membership(f, a) == bruteforce_member(f, gens), f"{f!r} in {gens!r}")


@suite("pm-ring", "every prime lies in a unique maximal ideal and over a unique minimal prime")
def _pm_ring(res: SuiteResult, cfg: Config, rng, **_):
    ctx = cfg.context
    maxs = max_spec(ctx)
    mins = min_spec(ctx)
    for q in spec_enumerate(ctx):
        over = [m for m in maxs if q.issubset(m)]
        res.check("unique maximal", len(over) == 1, f"{q!r} under {over!r}")
        res.check("matches chain", unique_maximal_over(q) == PrimeIdeal(ctx, q.chain_prime, Level.MAXIMAL), repr(q))
        under = [m for m in mins if m.issubset(q)]
        res.check("unique minimal", len(under) == 1 and unique_minimal_under(q) == under[0], repr(q))


@suite("ideals-above-prime", "the ideals containing a prime are linearly ordered")
def _ideals_above(res: SuiteResult, cfg: Config, rng, **_):
    ctx = cfg.context
    N = ctx.precision
    for q in spec_enumerate(ctx):
        chain = ideals_above(q)
        res.check("count", len(chain) == (N + 2 if q.level is Level.MINIMAL else 2), f"{q!r}: {len(chain)}")
        res.check("pairwise comparable", is_chain(chain), repr(q))
        res.check("starts at the prime, ends at R",
                  chain[0] == q.ideal and chain[-1] == FinGenIdeal.unit(ctx), repr(q))
        for a, b in zip(chain, chain[1:]):
            x = a.generator * ctx.random_element(rng)
            res.check("sampled containment", membership(x, b), f"{x!r} from {a!r} not in {b!r}")
            res.check("strict step", a < b, f"{a!r} vs {b!r}")


@suite("min-max-bijection", "ultrafilters correspond bijectively to minimal and to maximal primes")
def _min_max(res: SuiteResult, cfg: Config, rng, samples: int = 100, **_):
    ctx = cfg.context
    ufs = enumerate_ultrafilters(ctx)
    lows = [alpha_lower(d, ctx) for d in ufs]
    highs = [alpha_upper(d, ctx) for d in ufs]
    res.check("alpha_* injective", len(set(lows)) == len(ufs))
    res.check("alpha_* onto Min", set(lows) == set(min_spec(ctx)))
    res.check("alpha^* injective", len(set(highs)) == len(ufs))
    res.check("alpha^* onto Max", set(highs) == set(max_spec(ctx)))
    mins, maxs = set(min_spec(ctx)), set(max_spec(ctx))
    for _ in range(samples):
        f = ctx.random_element(rng, zero_rate=0.4)
        V = closed_set_of(f)
        zeros = truth_set(f, Predicate.IS_ZERO).members
        nonunits = truth_set(f, Predicate.IN_MAXIMAL).members
        res.check("closed set on Min", V & mins == {alpha_lower(d, ctx) for d in ufs if zeros in d}, repr(f))
        res.check("closed set on Max", V & maxs == {alpha_upper(d, ctx) for d in ufs if nonunits in d}, repr(f))
    for q in spec_enumerate(ctx):
        hits = [n for n in range(1, 101) if ctx.diagonal(n) in q]
        if q.level is Level.MINIMAL:
            res.check("minimal primes meet Z only in 0", not hits, f"{q!r}: {hits[:5]}")
        else:
            p = q.chain_prime
            res.check("p generates the maximal prime", FinGenIdeal.principal(ctx.diagonal(p)) == q.ideal, repr(q))
            res.check("integers in the maximal prime", all(n % p == 0 for n in hits) and p in hits, repr(q))


def _lift_at(ctx: RingContext, p: int, value: int) -> ProductElement:
    """value at p, 0 elsewhere."""
    return ctx.element([value if q == p else 0 for q in ctx.primes])


def _ring_hom_sample(res, name, phi, ctx, rng, pairs):
    for _ in range(pairs):
        f, g = ctx.random_element(rng, zero_rate=0.2), ctx.random_element(rng, zero_rate=0.2)
        res.check(f"{name} additive", _close(phi(f + g), phi(f) + phi(g)), repr((f, g)))
        res.check(f"{name} multiplicative", _close(phi(f * g), phi(f) * phi(g)), repr((f, g)))
    res.check(f"{name} unital", _close(phi(ctx.one()), phi(ctx.one()) * phi(ctx.one())))


@suite("quotients", "R/q is F_p for the maximal and Z_p for the minimal prime at p")
def _quotients(res: SuiteResult, cfg: Config, rng, pairs: int = 500, kernel_samples: int = 200, **_):
    ctx = cfg.context
    for p in ctx.primes:
        m, q0 = PrimeIdeal(ctx, p, Level.MAXIMAL), PrimeIdeal(ctx, p, Level.MINIMAL)
        Qm, Q0 = quotient(m), quotient(q0)
        res.check("kinds", Qm.kind is RingKind.RESIDUE_FIELD and Q0.kind is RingKind.COMPONENT_DVR)
        for a in range(p):
            for b in range(p):
                fa, fb = Qm.lift(a), Qm.lift(b)
                res.check("F_p addition table", Qm(fa + fb).residue == (a + b) % p, f"{a}+{b} mod {p}")
                res.check("F_p multiplication table", Qm(fa * fb).residue == (a * b) % p, f"{a}*{b} mod {p}")
        res.check("surjective onto F_p", {Qm(Qm.lift(a)).residue for a in range(p)} == set(range(p)))
        _ring_hom_sample(res, f"R -> Z_{p}", Q0, ctx, rng, pairs)
        _ring_hom_sample(res, f"R -> F_{p}", Qm, ctx, rng, pairs // 5)
        for _ in range(kernel_samples):
            f = ctx.random_element(rng, zero_rate=0.3)
            res.check("kernel of R -> F_p is m_p", Qm.in_kernel(f) == (f in m), repr(f))
            res.check("kernel of R -> Z_p is p_p", Q0.in_kernel(f) == (f in q0), repr(f))
            res.check("F_p map factors through Z_p", Qm(f) == Q0(f).truncate(1), repr(f))


@suite("localizations", "R_q is Z_p at the maximal and Q_p at the minimal prime; kernels are delta_*")
def _localizations(res: SuiteResult, cfg: Config, rng, pairs: int = 500, kernel_samples: int = 200, **_):
    ctx = cfg.context
    for p in ctx.primes:
        m, q0 = PrimeIdeal(ctx, p, Level.MAXIMAL), PrimeIdeal(ctx, p, Level.MINIMAL)
        Lm, L0 = localize(m), localize(q0)
        res.check("kinds", Lm.kind is RingKind.COMPONENT_DVR and L0.kind is RingKind.COMPONENT_FIELD)
        _ring_hom_sample(res, f"R -> R_m{p}", Lm, ctx, rng, pairs)
        _ring_hom_sample(res, f"R -> R_p{p}", L0, ctx, rng, pairs)
        for q, L in ((m, Lm), (q0, L0)):
            ker = localization_kernel(q)
            res.check("kernel is delta_*", ker == delta_lower(q.ultrafilter, ctx), repr(q))
            for _ in range(kernel_samples):
                f = ctx.random_element(rng, zero_rate=0.3)
                res.check("kernel membership", L.in_kernel(f) == membership(f, ker), f"{q!r}: {f!r}")
                g = ctx.random_element(rng, zero_rate=0.3)
                if g in q:
                    continue
                res.check("denominators become units", L.is_unit_image(g), f"{q!r}: {g!r}")
                # dividing by g loses v(g) digits of absolute precision
                lost = g[p].valuation()
                res.check("f g / g == f", _close(L.fraction(f * g, g), L(f), ctx.precision - lost), f"{q!r}: {f!r}/{g!r}")
        for _ in range(kernel_samples // 4):
            u = rng.randrange(1, p**ctx.precision)
            if u % p == 0:
                u += 1
            t = PAdicInt(p, ctx.precision, u)
            res.check("R -> R_m onto Z_p", Lm(_lift_at(ctx, p, u)) == t, str(u))
            e = rng.randint(-3, 3)
            target = PAdicRational(p, ctx.precision, e, t)
            num = _lift_at(ctx, p, u * p ** max(e, 0))
            den = ctx.diagonal(p ** max(-e, 0))
            res.check("R -> R_p onto Q_p", _close(L0.fraction(num, den), target), f"{u} p^{e}")
        for n in range(1, 101):
            d = ctx.diagonal(n)
            res.check("integers invertible in R_p", L0.is_unit_image(d), str(n))
            res.check("n unit in R_m iff p does not divide n", Lm.is_unit_image(d) == (n % p != 0), str(n))


@suite("henselian", "the localizations R_q are Henselian")
def _henselian(res: SuiteResult, cfg: Config, rng, **_):
    ctx = RingContext((2, 7), 3)
    L = localize(PrimeIdeal(ctx, 7, Level.MAXIMAL))
    roots = _square_roots_bruteforce(2, 343)
    res.check("brute-force roots of 2 mod 343", roots == [108, 235], str(roots))
    x = henselian_check(L, [-2, 0, 1], 3)
    res.check("sqrt 2 in Z_7 is 108 mod 343", x.residue == 108, repr(x))
    res.check("other root", henselian_check(L, [-2, 0, 1], 4).residue == 235)
    res.check("quotient by p_7 lifts too",
              henselian_check(quotient(PrimeIdeal(ctx, 7, Level.MINIMAL)), [-2, 0, 1], 3).residue == 108)
    field = localize(PrimeIdeal(ctx, 7, Level.MINIMAL))
    res.check("field: roots lift to themselves", henselian_check(field, [-2, 0, 1], x) == x)
    big = cfg.context
    for p in big.primes:
        if p == 2:
            continue
        for _ in range(5):
            a = rng.randrange(1, p)
            c = a * a + p * rng.randrange(p**3)
            root = hensel_lift([-c, 0, 1], from_integer(a, p, big.precision))
            res.check("root squares to c", root * root == from_integer(c, p, big.precision), f"{c} in Z_{p}")
            res.check("root reduces to a mod p", root.residue % p == a % p)
            res.check("fixed by a Newton step", newton_step([-c, 0, 1], root) == root)


@suite("sheaf-sections", "sections over U are an inverse limit of R_f; stalks are localizations")
def _sheaf_sections(res: SuiteResult, cfg: Config, rng, **_):
    for size in range(1, min(3, len(cfg.primes)) + 1):
        ctx = RingContext(cfg.primes[:size], cfg.precision)
        opens = all_opens(ctx)
        res.check("3^|S| opens", len(opens) == 3**size, str(len(opens)))
        for U in opens:
            res.check("closed form == inverse limit", sections(U) == sections_inverse_limit(U), repr(U))
        whole = OpenSet.whole(ctx)
        res.check("global sections are R", all(k is SectionKind.INTEGRAL for k in sections(whole).kinds))
        for _ in range(20):
            U, V, W = sorted(rng.sample(opens, 3), key=len, reverse=True)
            V, W = U & V, U & V & W
            rUV, rVW, rUW = restriction(U, V), restriction(V, W), restriction(U, W)
            s, t = sections(U).random_element(rng), sections(U).random_element(rng)
            res.check("functorial", rVW(rUV(s)) == rUW(s), repr((U, V, W)))
            SV = sections(V)
            res.check("restriction additive", _close(rUV(sections(U).add(s, t)), SV.add(rUV(s), rUV(t))))
            res.check("restriction multiplicative", _close(rUV(sections(U).mul(s, t)), SV.mul(rUV(s), rUV(t))))
        for _ in range(50):
            f, g = ctx.random_element(rng, zero_rate=0.3), ctx.random_element(rng, zero_rate=0.3)
            res.check("D(f) & D(g) == D(fg)", basic_open(f) & basic_open(g) == basic_open(f * g), repr((f, g)))
        for r in range(1, size):
            for X in itertools.combinations(ctx.primes, r):
                e = ctx.idempotent(X)
                A, B = closed_set_of(e), closed_set_of(ctx.one() - e)
                res.check("disconnected", A | B == whole.points and not A & B, str(X))
        for x in spec_enumerate(ctx):
            res.check("stalk == localization", stalk_matches_localization(x), repr(x))


@suite("sheaf-axiom", "sections glue uniquely along covers by basic opens")
def _sheaf_axiom(res: SuiteResult, cfg: Config, rng, max_cover: int = 3, samples: int = 1, **_):
    for size in range(1, min(3, len(cfg.primes)) + 1):
        ctx = RingContext(cfg.primes[:size], cfg.precision)
        for U in all_opens(ctx):
            n = 0
            for cover in covers_by_basic_opens(U, max_cover):
                n += 1
                res.check("gluing", sheaf_axiom_check(U, cover, rng, samples), f"{U!r} by {cover!r}")
            res.check("has a cover", n > 0, repr(U))


@suite("boolean-localization", "in F_2^S, R_f = R/(1 - f) = F_2^(support f); sections are reduced products")
def _boolean(res: SuiteResult, cfg: Config, rng, max_size: int = 4, **_):
    for size in range(1, max_size + 1):
        ring = BooleanRing(tuple(range(1, size + 1)))
        for f in ring.elements():
            res.check("R_f = R/(1-f) = F_2^supp", boolean_localization_check(ring, f), f"{size}: {sorted(f)}")
        for r in range(1, size + 1):
            for base in itertools.combinations(ring.indices, r):
                rp = reduced_product(["F2"] * size, Filter(frozenset(base)), ring.indices)
                fams = [tuple(1 if i in e else 0 for i in ring.indices) for e in ring.elements()]
                classes = {rp.quotient_map(a) for a in fams}
                res.check("reduced product size", len(classes) == 2**r)
                a, b = rng.choice(fams), rng.choice(fams)
                res.check("identified iff equal images",
                          rp.identified(a, b) == (rp.quotient_map(a) == rp.quotient_map(b)))
        for i in ring.indices:
            rp = reduced_product(["F2"] * size, Filter(frozenset([i])), ring.indices)
            res.check("stalk is F_2", rp.factor_labels == ("F2",))


@suite("adeles", "Spec of the adeles is the set of minimal primes, each both minimal and maximal")
def _adeles(res: SuiteResult, cfg: Config, rng, pairs: int = 200, **_):
    ctx = cfg.context
    primes = spec_adeles(ctx)
    res.check("|S| primes", len(primes) == len(ctx.primes), str(len(primes)))
    res.check("bijection with primes avoiding integers",
              [q.contraction for q in primes] == primes_avoiding_integers(ctx))
    for q in spec_enumerate(ctx):
        if q.level is Level.MAXIMAL:
            res.check("maximal primes extend to the unit ideal", extend(q).is_unit_ideal(), repr(q))
        else:
            res.check("extension then contraction", extend(q).contraction == q.ideal, repr(q))
    for a in primes:
        others = [b for b in primes if b != a]
        res.check("both minimal and maximal",
                  not any(b.ideal.issubset(a.ideal) or a.ideal.issubset(b.ideal) for b in others))
        Q, L = adele_quotient(a), adele_localize(a)
        res.check("localization agrees with R_p", L.as_localization_of_product().kind is L.kind)
        for _ in range(pairs):
            x, y = random_adele(ctx, rng), random_adele(ctx, rng)
            res.check("projection additive", Q(x + y) == Q(x) + Q(y))
            res.check("projection multiplicative", Q(x * y) == Q(x) * Q(y))
            z = x * AdeleElement.from_product(ctx.idempotent(set(ctx.primes) - {a.chain_prime})) \
                if rng.random() < 0.5 else x
            res.check("kernel is the prime", Q(z).is_zero() == (z in a), repr(z))
            t = Q(x)
            res.check("surjective", Q(Q.lift(t)) == t)
    one = AdeleElement.from_rational(ctx, 1)
    for n in range(1, 101):
        d = AdeleElement.from_rational(ctx, n)
        res.check("integers are units", d.is_unit() and d * d.inverse() == one, str(n))
        res.check("n * (1/n) == 1", adele_from_fraction(ctx.one(), n) * n == one, str(n))
    for _ in range(50):
        f = ctx.random_element(rng)
        n, k = rng.randint(1, 30), rng.choice([1, 7, 11, 13, 77])
        if any(k % p == 0 for p in ctx.primes):
            continue
        a, b = adele_from_fraction(f * k, n * k), adele_from_fraction(f, n)
        # f / n is known modulo p^(N - v_p(n)) at p
        ok = all(x.agrees(y, ctx.precision - int_valuation(n, p))
                 for p, x, y in zip(ctx.primes, a.components, b.components))
        res.check("well defined", ok, repr((f, n, k)))


_ORDER_KINDS = [asym.ConvexSubsemigroup.zero(), asym.ConvexSubsemigroup.standard()] + \
    [asym.ConvexSubsemigroup.degree_at_most(d) for d in range(1, 6)] + [asym.ConvexSubsemigroup.all()]


@suite("asymptotic-order", "eventual dominance is a total, translation-invariant, cancellative order")
def _asymptotic(res: SuiteResult, cfg: Config, rng, pairs: int = 10_000, archimedean_pairs: int = 2_000, **_):
    failures = {"oracle": 0, "total": 0, "translation": 0, "cancellation": 0, "archimedean": 0, "convex": 0}
    first = {}
    for i in range(pairs):
        x, y, z = (asym.random_asymptotic(rng) for _ in range(3))
        c = asym.compare(x, y)
        if c != _eventual_sign(x, y):
            failures["oracle"] += 1
            first.setdefault("oracle", (x, y))
        if asym.compare(y, x) != -c or (c == 0) != (x == y):
            failures["total"] += 1
        xz, yz = x + z, y + z
        if c < 0 and not asym.compare(xz, yz) < 0:
            failures["translation"] += 1
            first.setdefault("translation", (x, y, z))
        if (xz == yz) != (x == y):
            failures["cancellation"] += 1
        if i < archimedean_pairs and not x.is_zero() and not y.is_zero():
            bounded = any(_eventual_sign(x, y.scale(m)) <= 0 and _eventual_sign(y, x.scale(m)) <= 0
                          for m in (1, 2, 5, 11, 101))
            if bounded != asym.archimedean_equivalent(x, y):
                failures["archimedean"] += 1
                first.setdefault("archimedean", (x, y))
        delta = asym.least_convex_containing(x)
        if not (x in delta and (x + x) in delta and (asym.compare(y, x) > 0 or y in delta)):
            failures["convex"] += 1
            first.setdefault("convex", (x, y))
    for name, n in failures.items():
        res.check(name, n == 0, f"{n} failures, first {first.get(name)!r}")
    for D in _ORDER_KINDS:
        members = [m for m in (asym.random_asymptotic(rng) for _ in range(200)) if m in D][:30]
        ok = all((a + b) in D for a in members for b in members)
        res.check(f"{D!r} closed under addition", ok)
        top = D.top_class()
        expect = {asym.ConvexKind.ZERO: None, asym.ConvexKind.ALL: None}.get(D.kind, D.max_degree)
        res.check(f"{D!r} top class", top == expect, str(top))


@suite("galois-correspondence", "convex subsemigroups and primes of the valuation ring correspond, reversing order")
def _galois(res: SuiteResult, cfg: Config, rng, **_):
    probes = [asym.random_asymptotic(rng, max_degree=8) for _ in range(300)]
    probes += [asym.AsymptoticNat.monomial(d) for d in range(0, 9)] + [asym.AsymptoticNat()]
    for D in _ORDER_KINDS:
        P = asym.galois_maps(D)
        res.check("Delta of P_Delta is Delta", asym.galois_maps(P) == D, repr(D))
        P2 = asym.galois_maps(asym.galois_maps(P))
        res.check("P of Delta_P is P",
                  all(P.contains_valuation(v) == P2.contains_valuation(v) for v in probes), repr(P))
        res.check("members of Delta are not in P_Delta", not any(P.contains_valuation(v) for v in probes if v in D))
        res.check("infinity in every prime", P.contains_valuation(asym.INFINITY))
    zero, everything = _ORDER_KINDS[0], _ORDER_KINDS[-1]
    res.check("{0} gives the maximal ideal",
              all(asym.galois_maps(zero).contains_valuation(v) == (not v.is_zero()) for v in probes))
    res.check("everything gives {0}", not any(asym.galois_maps(everything).contains_valuation(v) for v in probes))
    for D1 in _ORDER_KINDS:
        for D2 in _ORDER_KINDS:
            if not D1.issubset(D2):
                continue
            P1, P2 = asym.galois_maps(D1), asym.galois_maps(D2)
            res.check("order reversing",
                      all(P1.contains_valuation(v) for v in probes if P2.contains_valuation(v)),
                      f"{D1!r} <= {D2!r}")
    gammas = [asym.AsymptoticNat.monomial(d) for d in range(1, 6)]
    res.check("degree jumps give a strictly growing chain of classes",
              all(asym.compare(gammas[i + 1], gammas[i].scale(m)) > 0 for i in range(4) for m in (1, 10, 10**6)))


@suite("negative-controls", "non-primes, non-open sets and non-residues are rejected")
def _negative(res: SuiteResult, cfg: Config, rng, **_):
    ctx = RingContext((2, 3, 5), cfg.precision)
    a = FinGenIdeal.from_vector(ctx, (0, 2, 0))
    x = ctx.element([1, 3, 1])
    res.check("w=(0,2,0) is not prime", is_prime(a) is None)
    res.check("witness x not in a, x^2 in a", x not in a and x * x in a and bruteforce_member(
        RingContext((2, 3, 5), 4).element([1, 9, 1]), [RingContext((2, 3, 5), 4).element([1, 9, 1])]))
    for q in spec_enumerate(ctx):
        if q.level is Level.MAXIMAL:
            try:
                OpenSet(ctx, frozenset([q]))
                res.check("lone maximal point rejected", False, repr(q))
            except NotOpen:
                res.check("lone maximal point rejected", True)
    res.check("2 is a non-residue mod 5 (brute force)", not _square_roots_bruteforce(2, 5))
    try:
        hensel_lift([-2, 0, 1], from_integer(rng.randrange(5), 5, cfg.precision))
        res.check("x^2 - 2 over Z_5 rejected", False)
    except NotApproximateRoot:
        res.check("x^2 - 2 over Z_5 rejected", True)
