"""Command-line front end.

Elements are written as comma-separated integers, one per prime of the
context (``1,0,4`` over ``--primes 2,3,5``) or as a JSON list.  Primes are
JSON objects ``{"prime": 3, "level": "minimal"}``; open sets are JSON lists
of such objects.  Output is JSON by default and byte-for-byte deterministic
for a fixed configuration and seed.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from typing import Callable

from . import asymptotic as asym
from .adeles import adele_localize, adele_quotient, extend, spec_adeles
from .config import Config
from .errors import InputError, ZhatError
from .ideals import FinGenIdeal, membership_detail
from .padic import PAdicInt, PAdicRational
from .product import Predicate, ProductElement, RingContext, division_witness, truth_set
from .quotient import localization_kernel, localize, quotient
from .sheaf import OpenSet, basic_open, sections, stalk, stalk_matches_localization
from .spectrum import PrimeIdeal, is_prime, spec_enumerate
from .verify import SUITES, run_all

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError("arguments", message)


# --- parsing helpers ---------------------------------------------------------


def _json_arg(text: str, field: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(field, f"not valid JSON ({exc.msg})") from None


def parse_element(ctx: RingContext, text: str, field: str = "element") -> ProductElement:
    text = text.strip()
    if text.startswith(("[", "{")):
        values = _json_arg(text, field)
        if isinstance(values, dict):
            try:
                values = {int(k): int(v) for k, v in values.items()}
            except ValueError:
                raise InputError(field, "keys must be primes and values integers") from None
            if set(values) - set(ctx.primes):
                raise InputError(field, f"primes outside the context: {sorted(set(values) - set(ctx.primes))}")
    else:
        values = text.split(",")
    try:
        values = values if isinstance(values, dict) else [int(v) for v in values]
    except (TypeError, ValueError):
        raise InputError(field, f"expected integers, got {text!r}") from None
    if isinstance(values, list) and len(values) != len(ctx.primes):
        raise InputError(field, f"expected {len(ctx.primes)} components, got {len(values)}")
    return ctx.element(values)


def parse_prime(ctx: RingContext, text: str, field: str = "prime") -> PrimeIdeal:
    data = _json_arg(text, field)
    if not isinstance(data, dict) or "prime" not in data or "level" not in data:
        raise InputError(field, 'expected {"prime": p, "level": "minimal" | "maximal"}')
    if data["level"] not in ("minimal", "maximal"):
        raise InputError(f"{field}.level", f"unknown level {data['level']!r}")
    if data["prime"] not in ctx.primes:
        raise InputError(f"{field}.prime", f"{data['prime']!r} is not in the prime set {list(ctx.primes)}")
    return PrimeIdeal.from_json(ctx, data)


def parse_open(ctx: RingContext, text: str, field: str = "open") -> OpenSet:
    data = _json_arg(text, field)
    if not isinstance(data, list):
        raise InputError(field, "expected a JSON list of primes")
    points = [parse_prime(ctx, json.dumps(d), f"{field}[{i}]") for i, d in enumerate(data)]
    try:
        return OpenSet(ctx, frozenset(points))
    except ZhatError as exc:
        raise InputError(field, str(exc)) from None


def parse_asymptotic(text: str, field: str) -> asym.AsymptoticNat:
    data = _json_arg(text, field)
    if not isinstance(data, list) or not all(isinstance(c, int) for c in data):
        raise InputError(field, "expected a JSON list of integer coefficients, constant term first")
    try:
        return asym.AsymptoticNat(tuple(data))
    except ValueError as exc:
        raise InputError(field, str(exc)) from None


def parse_convex(text: str, field: str = "delta") -> asym.ConvexSubsemigroup:
    kind, _, degree = text.partition(":")
    makers = {"zero": asym.ConvexSubsemigroup.zero, "standard": asym.ConvexSubsemigroup.standard,
              "all": asym.ConvexSubsemigroup.all}
    if kind in makers and not degree:
        return makers[kind]()
    if kind == "degree" and degree.isdigit() and int(degree) >= 1:
        return asym.ConvexSubsemigroup.degree_at_most(int(degree))
    raise InputError(field, "expected zero, standard, all or degree:<d> with d >= 1")


def _parse_primes(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(p) for p in text.split(","))
    except ValueError:
        raise InputError("primes", f"expected comma-separated integers, got {text!r}") from None


# --- rendering -----------------------------------------------------------------


def _residues(f: ProductElement) -> list[str]:
    return [str(c.residue) for c in f.components]


def _valuations(f: ProductElement) -> list:
    return [v if isinstance(v, int) else "inf" for v in f.valuations()]


def _scalar(x) -> dict:
    if isinstance(x, PAdicRational):
        return {"exp": x.exponent, "unit": "0" if x.unit is None else str(x.unit.residue)}
    if isinstance(x, PAdicInt):
        return {"value": str(x.residue), "N": x.precision}
    return {"value": None}


def _render_text(obj, indent: int = 0) -> list[str]:
    pad = "  " * indent
    if isinstance(obj, dict):
        lines = []
        for k, v in obj.items():
            if isinstance(v, (dict, list)) and v and any(isinstance(x, (dict, list)) for x in
                                                         (v.values() if isinstance(v, dict) else v)):
                lines.append(f"{pad}{k}:")
                lines.extend(_render_text(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {json.dumps(v)}")
        return lines
    if isinstance(obj, list):
        lines = []
        for item in obj:
            sub = _render_text(item, indent + 1)
            lines.append(f"{pad}- " + (sub[0].strip() if sub else ""))
            lines.extend(sub[1:])
        return lines
    return [pad + json.dumps(obj)]


def _verify_text(report: dict) -> list[str]:
    lines = []
    for r in report["suites"]:
        status = "PASS" if r["passed"] else "FAIL"
        lines.append(f"{status} {r['suite']}: {r['statement']} ({r['checks']} checks)")
        if r.get("error"):
            lines.append(f"  error: {r['error']}")
        for f in r["failures"][:5]:
            lines.append(f"  {f['check']}: {f['detail']}")
    lines.append(f"{'PASS' if report['passed'] else 'FAIL'}: {report['passed_count']}/{len(report['suites'])} suites")
    return lines


# --- subcommands ----------------------------------------------------------------


def cmd_eval(cfg: Config, args) -> tuple[dict, int]:
    ctx = cfg.context
    a = parse_element(ctx, args.a, "a")
    ops: dict[str, Callable] = {
        "add": lambda: a + parse_element(ctx, _need(args.b, "b"), "b"),
        "sub": lambda: a - parse_element(ctx, _need(args.b, "b"), "b"),
        "mul": lambda: a * parse_element(ctx, _need(args.b, "b"), "b"),
        "neg": lambda: -a,
        "inv": lambda: a.inverse(),
        "pow": lambda: a ** _int(_need(args.b, "b"), "b"),
    }
    result = ops[args.op]()
    return {"context": ctx.to_json(), "op": args.op, "result": _residues(result),
            "valuations": _valuations(result)}, EXIT_OK


def _need(value, field):
    if value is None:
        raise InputError(field, "this operation needs a second operand")
    return value


def _int(text, field):
    try:
        return int(text)
    except ValueError:
        raise InputError(field, f"expected an integer, got {text!r}") from None


def cmd_truthset(cfg: Config, args) -> tuple[dict, int]:
    ctx = cfg.context
    f = parse_element(ctx, args.f, "f")
    out = {"element": _residues(f)}
    for pred in Predicate:
        ts = truth_set(f, pred)
        out[pred.value] = {"members": sorted(ts.members), "certain": ts.certain}
    g, X = division_witness(f)
    out["division_witness"] = {"g": _residues(g), "X": sorted(X)}
    return out, EXIT_OK


def cmd_spec(cfg: Config, args) -> tuple[list, int]:
    return [q.to_json() for q in spec_enumerate(cfg.context)], EXIT_OK


def cmd_ideal(cfg: Config, args) -> tuple[dict, int]:
    ctx = cfg.context
    if not args.generators:
        raise InputError("generators", "give at least one generator")
    gens = [parse_element(ctx, g, f"generators[{i}]") for i, g in enumerate(args.generators)]
    a = FinGenIdeal.generated_by(ctx, gens)
    q = is_prime(a)
    out = {
        "vector": [w if isinstance(w, int) else "inf" for w in a.vector],
        "proper": a.is_proper(),
        "prime": q.to_json() if q is not None else None,
    }
    if args.member is not None:
        f = parse_element(ctx, args.member, "member")
        verdict, certain = membership_detail(f, a)
        out["member"] = {"element": _residues(f), "verdict": verdict, "certain": certain}
    return out, EXIT_OK


def _samples(ctx: RingContext, seed: int, count: int) -> list[ProductElement]:
    rng = random.Random(f"{seed}:samples")
    return [ctx.random_element(rng) for _ in range(count)]


def cmd_quotient(cfg: Config, args) -> tuple[dict, int]:
    ctx = cfg.context
    q = parse_prime(ctx, args.prime)
    ring = quotient(q)
    return {
        "prime": q.to_json(),
        "ring": ring.kind.value.replace("p", str(q.chain_prime)),
        "kernel": q.to_json(),
        "samples": [{"element": _residues(f), "image": _scalar(ring(f))}
                    for f in _samples(ctx, cfg.seed, args.samples)],
    }, EXIT_OK


def cmd_localize(cfg: Config, args) -> tuple[dict, int]:
    ctx = cfg.context
    q = parse_prime(ctx, args.prime)
    ring = localize(q)
    kernel = localization_kernel(q)
    return {
        "prime": q.to_json(),
        "ring": ring.kind.value.replace("p", str(q.chain_prime)),
        "kernel": [w if isinstance(w, int) else "inf" for w in kernel.vector],
        "samples": [{"element": _residues(f), "image": _scalar(ring(f))}
                    for f in _samples(ctx, cfg.seed, args.samples)],
    }, EXIT_OK


def cmd_sections(cfg: Config, args) -> tuple[dict, int]:
    ctx = cfg.context
    if (args.open is None) == (args.basic is None):
        raise InputError("open", "give exactly one of an open set or --basic f")
    U = basic_open(parse_element(ctx, args.basic, "basic")) if args.basic is not None else parse_open(ctx, args.open)
    ring = sections(U)
    return {"open": U.to_json(), "components": {str(p): k for p, k in ring.classification().items()},
            "ring": ring.describe()}, EXIT_OK


def cmd_stalk(cfg: Config, args) -> tuple[dict, int]:
    ctx = cfg.context
    x = parse_prime(ctx, args.prime)
    ring = stalk(x)
    return {"prime": x.to_json(), "stalk": ring.describe(),
            "matches_localization": stalk_matches_localization(x)}, EXIT_OK


def cmd_adele(cfg: Config, args) -> tuple[dict, int]:
    ctx = cfg.context
    primes = spec_adeles(ctx)
    out = {
        "spec": [a.to_json() for a in primes],
        "extensions": [{"prime": q.to_json()["prime"], "level": q.level.value,
                        "unit_ideal": extend(q).is_unit_ideal()} for q in spec_enumerate(ctx)],
    }
    if args.prime is not None:
        if args.prime not in ctx.primes:
            raise InputError("prime", f"{args.prime} is not in the prime set {list(ctx.primes)}")
        a = next(x for x in primes if x.chain_prime == args.prime)
        out["quotient"] = "Q_" + str(args.prime) if adele_quotient(a).kind.value == "Q_p" else None
        out["localization"] = "Q_" + str(args.prime) if adele_localize(a).kind.value == "Q_p" else None
    return out, EXIT_OK


def cmd_asymptotic(cfg: Config, args) -> tuple[dict, int]:
    x = parse_asymptotic(args.x, "x")
    out = {"x": x.to_json(), "class": None if x.is_zero() else asym.archimedean_class(x),
           "hull": asym.least_convex_containing(x).to_json()}
    if args.y is not None:
        y = parse_asymptotic(args.y, "y")
        c = asym.compare(x, y)
        out["y"] = y.to_json()
        out["compare"] = {-1: "<", 0: "=", 1: ">"}[c]
        if not x.is_zero() and not y.is_zero():
            out["archimedean_equivalent"] = asym.archimedean_equivalent(x, y)
    if args.delta is not None:
        delta = parse_convex(args.delta)
        prime = asym.galois_maps(delta)
        out["delta"] = delta.to_json()
        out["in_delta"] = x in delta
        out["valuation_in_prime"] = prime.contains_valuation(x)
        out["round_trip"] = asym.galois_maps(prime) == delta
    return out, EXIT_OK


def cmd_verify(cfg: Config, args) -> tuple[dict, int]:
    names = args.suite or None
    if names:
        unknown = [n for n in names if n not in SUITES]
        if unknown:
            raise InputError("suite", f"unknown suite {unknown[0]!r}; choose from {', '.join(SUITES)}")
    results = run_all(cfg, names)
    suites = [r.to_json() for r in results]
    passed = all(r.passed for r in results)
    report = {"config": cfg.to_json(), "passed": passed,
              "passed_count": sum(r.passed for r in results), "suites": suites}
    return report, EXIT_OK if passed else EXIT_FAILED


COMMANDS = {
    "eval": cmd_eval, "truthset": cmd_truthset, "spec": cmd_spec, "ideal": cmd_ideal,
    "quotient": cmd_quotient, "localize": cmd_localize, "sections": cmd_sections, "stalk": cmd_stalk,
    "adele": cmd_adele, "asymptotic": cmd_asymptotic, "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--primes", help="comma-separated primes, e.g. 2,3,5")
    common.add_argument("--precision", "-N", type=int, help="p-adic precision N (>= 4)")
    common.add_argument("--seed", type=int, help="seed for sampled checks")
    common.add_argument("--config", help="JSON config file with the same keys")
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="output", action="store_const", const="json", help="JSON output (default)")
    fmt.add_argument("--text", dest="output", action="store_const", const="text", help="plain text output")

    parser = _Parser(prog="zhat", description="Prime spectrum of a product of p-adic integers, computed exactly.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    p = sub.add_parser("eval", parents=[common], help="ring arithmetic in prod Z_p")
    p.add_argument("op", choices=["add", "sub", "mul", "neg", "inv", "pow"])
    p.add_argument("a")
    p.add_argument("b", nargs="?")

    p = sub.add_parser("truthset", parents=[common], help="truth sets and the division witness of f")
    p.add_argument("f")

    sub.add_parser("spec", parents=[common], help="list the prime ideals")

    p = sub.add_parser("ideal", parents=[common], help="normal form, primality and membership")
    p.add_argument("generators", nargs="*")
    p.add_argument("--member", help="element to test for membership")

    for name, text in (("quotient", "the quotient R/q"), ("localize", "the localization R_q")):
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument("prime", help='JSON, e.g. {"prime": 3, "level": "maximal"}')
        p.add_argument("--samples", type=int, default=3)

    p = sub.add_parser("sections", parents=[common], help="ring of sections over an open set")
    p.add_argument("open", nargs="?", help='JSON list of primes, e.g. [{"prime": 3, "level": "minimal"}]')
    p.add_argument("--basic", help="use the basic open D(f) for this element f")

    p = sub.add_parser("stalk", parents=[common], help="stalk of the structure sheaf at a prime")
    p.add_argument("prime")

    p = sub.add_parser("adele", parents=[common], help="primes of the finite adeles")
    p.add_argument("--prime", type=int, help="also describe the quotient and localization at this prime")

    p = sub.add_parser("asymptotic", parents=[common], help="eventual dominance of integer polynomials")
    p.add_argument("x", help="JSON coefficient list, constant term first")
    p.add_argument("y", nargs="?")
    p.add_argument("--delta", help="convex subsemigroup: zero, standard, all or degree:<d>")

    p = sub.add_parser("verify", parents=[common], help="run the verification suites")
    p.add_argument("--suite", action="append", help=f"suite to run (repeatable): {', '.join(SUITES)}")
    return parser


def _config(args) -> Config:
    overrides = {
        "primes": _parse_primes(args.primes) if args.primes else None,
        "precision": args.precision,
        "seed": args.seed,
        "output": args.output,
    }
    if args.config:
        return Config.from_file(args.config, **overrides)
    return Config(**{k: v for k, v in overrides.items() if v is not None})


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise InputError("command", f"choose one of {', '.join(COMMANDS)}")
        cfg = _config(args)
        report, status = COMMANDS[args.command](cfg, args)
    except SystemExit as exc:  # --help
        return exc.code or EXIT_OK
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ZhatError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if cfg.output == "json":
        print(json.dumps(report, indent=2))
    elif args.command == "verify":
        print("\n".join(_verify_text(report)))
    else:
        print("\n".join(_render_text(report)))
    return status


if __name__ == "__main__":
    sys.exit(main())
