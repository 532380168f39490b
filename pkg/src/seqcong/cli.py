"""Command-line entry point.

Subcommands: check, map, orbit, enum, ideal, series, zeta.  Results go to
stdout (JSON unless noted), diagnostics to stderr.  Exit codes: 0 success
or property verified; 1 predicate false or property violation (witness on
stdout); 2 usage, parse, or extent error; 3 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction
from itertools import islice

import mpmath

from . import families, maps, predicates, series
from .errors import (
    BoundsMismatch,
    DivergentParameters,
    ExtentExceeded,
    InsufficientMultiplicity,
    InvalidDeletion,
    InvalidExponent,
    InvalidPart,
    NonDistinctA,
    NotMemberPBA,
    NotSequentiallyCongruent,
    ParseError,
    PartNotInA,
    ResourceBound,
)
from .partition import Partition
from .predicates import ViolationReport
from .sequences import SequenceSpec

_USAGE_ERRORS = (
    ParseError,
    ExtentExceeded,
    NonDistinctA,
    InvalidPart,
    InvalidExponent,
    InvalidDeletion,
    BoundsMismatch,
    DivergentParameters,
    InsufficientMultiplicity,
)


def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _report_json(report: ViolationReport) -> str:
    return _dump({"ok": report.ok, "index": report.index, "detail": report.detail})


def parse_partition(text: str) -> Partition:
    """JSON array (e.g. ``[5,3,3]``) or frequency form (e.g. ``1^3 2 5^2``)."""
    text = text.strip()
    if not text:
        raise ParseError("empty partition text")
    if text.startswith("["):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise ParseError(f"bad JSON at position {e.pos}: {e.msg}")
        if not isinstance(data, list) or not all(
            isinstance(v, int) and not isinstance(v, bool) for v in data
        ):
            raise ParseError("partition JSON must be an array of integers")
        try:
            return Partition.from_parts(data)
        except InvalidPart as e:
            raise ParseError(str(e))
    freq: dict[int, int] = {}
    for pos, tok in enumerate(text.split(), start=1):
        m = re.fullmatch(r"(\d+)(?:\^(\d+))?", tok)
        if not m:
            raise ParseError(f"bad token {tok!r} at position {pos}")
        v = int(m.group(1))
        k = int(m.group(2)) if m.group(2) else 1
        if v < 1 or k < 1:
            raise ParseError(f"token {tok!r} at position {pos}: values must be positive")
        freq[v] = freq.get(v, 0) + k
    return Partition.from_frequencies(freq)


def parse_sequence(text: str) -> SequenceSpec:
    text = text.strip()
    if text in ("naturals", "nat"):
        return SequenceSpec.naturals()
    if text == "ones":
        return SequenceSpec.ones()
    if text == "odds":
        return SequenceSpec.odds()
    if text.startswith(("constant:", "const:")):
        try:
            return SequenceSpec.constant(int(text.split(":", 1)[1]))
        except (ValueError, InvalidPart) as e:
            raise ParseError(f"bad constant sequence {text!r}: {e}")
    try:
        return SequenceSpec.table(int(v) for v in text.split(","))
    except (ValueError, InvalidPart) as e:
        raise ParseError(f"bad sequence {text!r}: {e}")


def _parse_kv(rest: str, what: str) -> dict[str, str]:
    out = {}
    for piece in rest.split(";"):
        if "=" not in piece:
            raise ParseError(f"expected key=value in {what}, got {piece!r}")
        key, val = piece.split("=", 1)
        out[key.strip()] = val.strip()
    return out


def _check_function(text: str):
    """Map a family string to a Partition -> ViolationReport callable."""
    if text == "seqcong":
        return predicates.is_sequentially_congruent
    if text == "freqcong":
        return predicates.is_frequency_congruent
    if text == "step":
        return predicates.is_step_bounded_seqcong
    if text == "distinct":
        return lambda p: ViolationReport(
            predicates.has_distinct_parts(p),
            None,
            "all parts distinct" if predicates.has_distinct_parts(p) else "a part repeats",
        )
    if text == "selfconj":
        return lambda p: ViolationReport(
            predicates.is_self_conjugate(p),
            None,
            "self-conjugate" if predicates.is_self_conjugate(p) else "not self-conjugate",
        )
    if text.startswith("pba:"):
        kv = _parse_kv(text[4:], "pba family")
        if "A" not in kv or "B" not in kv:
            raise ParseError("pba family needs A=... and B=...")
        a, b = parse_sequence(kv["A"]), parse_sequence(kv["B"])
        return lambda p: predicates.is_member_pba(p, a, b)
    if text.startswith("sna:"):
        kv = _parse_kv(text[4:], "sna family")
        if "A" not in kv:
            raise ParseError("sna family needs A=...")
        a = parse_sequence(kv["A"])
        return lambda p: predicates.is_member_sna(p, a)
    raise ParseError(f"unknown check family {text!r}")


def _membership_function(text: str):
    """Map a family string to a Partition -> bool callable."""
    if text == "all":
        return lambda p: True
    if text == "empty":
        return lambda p: p.length == 0
    if text == "oddparts":
        return lambda p: all(v % 2 == 1 for v in p.parts)
    if text == "distinct":
        return predicates.has_distinct_parts
    if text == "selfconj":
        return predicates.is_self_conjugate
    if text.startswith("parts:"):
        try:
            allowed = frozenset(int(v) for v in text[6:].split(","))
        except ValueError as e:
            raise ParseError(f"bad part set in {text!r}: {e}")
        if not allowed or any(v < 1 for v in allowed):
            raise ParseError(f"part set in {text!r} must be positive integers")
        return lambda p: all(v in allowed for v in p.parts)
    fn = _check_function(text)
    return lambda p: fn(p).ok


_SIMPLE_FAMILIES = {
    "all": families.all_of_size,
    "distinct": families.distinct_of_size,
    "seqcong-lg": families.seqcong_largest,
    "step-lg": families.step_bounded_largest,
}


def parse_family(text: str) -> families.FamilyDescriptor:
    if ":" not in text:
        raise ParseError(f"family {text!r} needs parameters after ':'")
    kind, rest = text.split(":", 1)
    if kind in _SIMPLE_FAMILIES:
        try:
            return _SIMPLE_FAMILIES[kind](int(rest))
        except ValueError as e:
            raise ParseError(f"bad family size in {text!r}: {e}")
    kv = _parse_kv(rest, f"family {kind}")
    if "n" not in kv:
        raise ParseError(f"family {text!r} needs n=...")
    try:
        n = int(kv["n"])
    except ValueError as e:
        raise ParseError(f"bad n in {text!r}: {e}")
    if kind == "parts":
        if "T" not in kv:
            raise ParseError("parts family needs T=...")
        try:
            return families.parts_in((int(v) for v in kv["T"].split(",")), n)
        except ValueError as e:
            raise ParseError(f"bad part set in {text!r}: {e}")
    if kind == "pba":
        if "A" not in kv or "B" not in kv:
            raise ParseError("pba family needs A=... and B=...")
        return families.pba_length(parse_sequence(kv["A"]), parse_sequence(kv["B"]), n)
    if kind == "sna-lg":
        if "A" not in kv:
            raise ParseError("sna-lg family needs A=...")
        return families.sna_largest(parse_sequence(kv["A"]), n)
    raise ParseError(f"unknown family kind {kind!r}")


def parse_weights(text: str, extent: int) -> series.WeightSpec:
    if text in ("one", "1"):
        return series.WeightSpec.one()
    if text.startswith(("random-seeded:", "random:")):
        try:
            seed = int(text.split(":", 1)[1])
        except ValueError as e:
            raise ParseError(f"bad seed in {text!r}: {e}")
        return series.WeightSpec.random_table(seed, extent)
    if text.startswith("table:"):
        try:
            return series.WeightSpec.from_values(
                Fraction(v) for v in text[6:].split(",")
            )
        except (ValueError, ZeroDivisionError) as e:
            raise ParseError(f"bad weight table {text!r}: {e}")
    if text.startswith("indicator:"):
        try:
            return series.WeightSpec.indicator(int(v) for v in text[10:].split(","))
        except ValueError as e:
            raise ParseError(f"bad indicator set {text!r}: {e}")
    raise ParseError(f"unknown weight spec {text!r}")


def _format_fixed(value, places: int = 12) -> str:
    scaled = int(mpmath.nint(value * mpmath.mpf(10) ** places))
    sign = "-" if scaled < 0 else ""
    ip, fp = divmod(abs(scaled), 10**places)
    return f"{sign}{ip}.{fp:0{places}d}"


# ---------------------------------------------------------------------------
# subcommand handlers


def _cmd_check(args) -> int:
    fn = _check_function(args.family)
    if args.partition is not None:
        texts = [args.partition]
    else:
        texts = [line for line in sys.stdin.read().splitlines() if line.strip()]
    # parse everything first so bad input never yields partial output
    inputs = [parse_partition(text) for text in texts]
    worst = 0
    for lam in inputs:
        report = fn(lam)
        print(_report_json(report))
        if not report.ok:
            worst = 1
    return worst


_MAP_OPS = {
    "pi": maps.pi,
    "pi-inv": maps.pi_inverse,
    "sigma": maps.sigma,
    "sigma-inv": maps.sigma_inverse,
    "conjugate": lambda p: p.conjugate(),
}


def _cmd_map(args) -> int:
    lam = parse_partition(args.partition)
    if args.op in _MAP_OPS:
        result = _MAP_OPS[args.op](lam)
    else:
        if args.A is None or args.B is None:
            raise ParseError(f"map {args.op} needs --A and --B")
        a, b = parse_sequence(args.A), parse_sequence(args.B)
        if args.op == "scale":
            result = maps.scale_map(lam, a, b)
        else:
            result = maps.scale_map_inverse(lam, a, b)
    print(_dump(list(result.parts)))
    return 0


def _cmd_orbit(args) -> int:
    lam = parse_partition(args.partition)
    trace = maps.orbit(lam, side=args.side)
    payload = {
        "states": [list(p.parts) for p in trace.states],
        "cycle_length": trace.cycle_length,
        "closed": trace.closed,
    }
    print(_dump(payload))
    return 0


def _cmd_enum(args) -> int:
    desc = parse_family(args.family)
    stream = families.enumerate_family(desc, max_items=args.max_items)
    if args.limit is not None:
        stream = islice(stream, args.limit)
    if args.count_only:
        print(sum(1 for _ in stream))
        return 0
    if args.json:
        print(_dump([list(p.parts) for p in stream]))
        return 0
    for p in stream:
        print(_dump(list(p.parts)))
    return 0


def _cmd_ideal(args) -> int:
    if args.ideal_cmd == "closure":
        report = families.check_ideal_closure(
            _membership_function(args.family), args.max_size
        )
        print(_report_json(report))
        return 0 if report.ok else 1
    if args.ideal_cmd == "quasi":
        report = families.check_quasi_ideal(
            parse_sequence(args.A), parse_sequence(args.B), args.max_size
        )
        print(_report_json(report))
        return 0 if report.ok else 1
    if args.ideal_cmd == "equiv":
        result = families.ideal_equivalent_upto(
            _membership_function(args.family), _membership_function(args.other),
            args.max_size,
        )
        print(
            _dump(
                {
                    "equivalent": result.equivalent,
                    "first_difference": result.first_difference,
                    "counts_first": list(result.counts_first),
                    "counts_second": list(result.counts_second),
                }
            )
        )
        return 0 if result.equivalent else 1
    report = families.count_invariance_suite(
        parse_sequence(args.A),
        parse_sequence(args.B),
        args.max_size,
        a_prime=parse_sequence(args.A_prime) if args.A_prime else None,
        b_prime=parse_sequence(args.B_prime) if args.B_prime else None,
    )
    print(
        _dump(
            {
                "ok": report.ok,
                "detail": report.detail,
                "sets_differ_at": report.sets_differ_at,
                "counts": list(report.counts),
            }
        )
    )
    return 0 if report.ok else 1


def _series_pair(args):
    """Build the two sides of the requested identity."""
    n = args.qtrunc
    if args.identity == "product-sum":
        f = parse_weights(args.f, n)
        return series.product_side(f, n), series.partition_sum_side(f, n)
    if args.identity == "product-seqcong":
        f = parse_weights(args.f, n)
        return series.product_side(f, n), series.seqcong_sum_side(f, n)
    if args.identity == "distinct":
        return series.distinct_product_side(n), series.step_bounded_sum_side(n)
    # two-variable
    if args.A is None or args.B is None:
        raise ParseError("identity two-variable needs --A and --B")
    a, b = parse_sequence(args.A), parse_sequence(args.B)
    m = args.xtrunc
    if m is None:
        raise ParseError("identity two-variable needs --xtrunc")
    return series.two_var_product_side(a, b, m, n), series.pba_sum_side(a, b, m, n)


def _cmd_series_verify(args) -> int:
    lhs, rhs = _series_pair(args)
    outcome = series.compare(lhs, rhs)
    if outcome.equal:
        print(f"PASS {args.identity} qtrunc={args.qtrunc}")
        return 0
    print(
        f"FAIL {args.identity} at x^{outcome.x_exponent} q^{outcome.q_exponent}: "
        f"lhs={outcome.lhs_coefficient} rhs={outcome.rhs_coefficient}"
    )
    return 1


def _expand_series(args) -> series.BivariateSeries:
    n = args.qtrunc
    side = args.side
    if side in ("product", "partition-sum", "seqcong-sum"):
        f = parse_weights(args.f, n if n is not None else 0)
        if n is None:
            raise ParseError(f"side {side} needs --qtrunc")
        if side == "product":
            return series.product_side(f, n)
        if side == "partition-sum":
            return series.partition_sum_side(f, n)
        return series.seqcong_sum_side(f, n)
    if side == "distinct-product":
        if n is None:
            raise ParseError("side distinct-product needs --qtrunc")
        return series.distinct_product_side(n)
    if side == "step-sum":
        if n is None:
            raise ParseError("side step-sum needs --qtrunc")
        return series.step_bounded_sum_side(n)
    if side == "euler":
        if args.A is None or args.xtrunc is None:
            raise ParseError("side euler needs --A and --xtrunc")
        return series.euler_limit_side(parse_sequence(args.A), args.xtrunc)
    if args.A is None or args.B is None or args.xtrunc is None or n is None:
        raise ParseError(f"side {side} needs --A, --B, --xtrunc and --qtrunc")
    a, b = parse_sequence(args.A), parse_sequence(args.B)
    if side == "two-variable":
        return series.two_var_product_side(a, b, args.xtrunc, n)
    return series.pba_sum_side(a, b, args.xtrunc, n)


def _cmd_series_expand(args) -> int:
    s = _expand_series(args)
    if args.json:
        print(
            _dump(
                {
                    "xtrunc": s.xtrunc,
                    "qtrunc": s.qtrunc,
                    "coefficients": [
                        [a, b, str(c)] for (a, b), c in s.items()
                    ],
                }
            )
        )
        return 0
    for (a, b), c in s.items():
        if s.xtrunc == 0:
            print(f"q^{b}: {c}")
        elif s.qtrunc == 0:
            print(f"x^{a}: {c}")
        else:
            print(f"x^{a} q^{b}: {c}")
    return 0


def _cmd_zeta(args) -> int:
    try:
        part_set = [int(v) for v in args.T.split(",")]
        s = Fraction(args.s)
    except (ValueError, ZeroDivisionError) as e:
        raise ParseError(f"bad zeta parameters: {e}")
    result = series.partition_zeta(part_set, s, args.depth, dps=args.dps)
    print(f"sum_side {_format_fixed(result.sum_side)}")
    print(f"product_side {_format_fixed(result.product_side)}")
    print(f"depth {result.qdepth} terms {result.terms}")
    return 0


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="seqcong",
        description="Sequentially congruent partitions: predicates, bijections, "
        "enumerators, series identities.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="membership test with first-violation witness")
    p.add_argument("family", help="seqcong | freqcong | distinct | selfconj | step | "
                   "pba:A=...;B=... | sna:A=...")
    p.add_argument("partition", nargs="?", help="JSON array or frequency form; "
                   "omit to read JSON lines from stdin")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("map", help="apply a bijection to one partition")
    p.add_argument("op", choices=["pi", "pi-inv", "sigma", "sigma-inv", "conjugate",
                                  "scale", "scale-inv"])
    p.add_argument("partition")
    p.add_argument("--A", help="sequence for scale/scale-inv")
    p.add_argument("--B", help="sequence for scale/scale-inv")
    p.set_defaults(func=_cmd_map)

    p = sub.add_parser("orbit", help="alternate the two maps until the input recurs")
    p.add_argument("partition")
    p.add_argument("--side", choices=["P", "S"], default="P")
    p.set_defaults(func=_cmd_orbit)

    p = sub.add_parser("enum", help="stream a family as JSON lines")
    p.add_argument("family", help="all:N | distinct:N | seqcong-lg:N | step-lg:N | "
                   "parts:T=...;n=N | pba:A=...;B=...;n=N | sna-lg:A=...;n=N")
    p.add_argument("--limit", type=int)
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--json", action="store_true", help="one JSON array instead of lines")
    p.add_argument("--max-items", type=int, default=None)
    p.set_defaults(func=_cmd_enum)

    p = sub.add_parser("ideal", help="deletion-closure and count-invariance checks")
    isub = p.add_subparsers(dest="ideal_cmd", required=True)
    c = isub.add_parser("closure")
    c.add_argument("family")
    c.add_argument("--max-size", type=int, required=True)
    c.set_defaults(func=_cmd_ideal)
    c = isub.add_parser("quasi")
    c.add_argument("--A", required=True)
    c.add_argument("--B", required=True)
    c.add_argument("--max-size", type=int, required=True)
    c.set_defaults(func=_cmd_ideal)
    c = isub.add_parser("equiv")
    c.add_argument("family")
    c.add_argument("other")
    c.add_argument("--max-size", type=int, required=True)
    c.set_defaults(func=_cmd_ideal)
    c = isub.add_parser("invariance")
    c.add_argument("--A", required=True)
    c.add_argument("--B", required=True)
    c.add_argument("--A-prime", dest="A_prime")
    c.add_argument("--B-prime", dest="B_prime")
    c.add_argument("--max-size", type=int, required=True)
    c.set_defaults(func=_cmd_ideal)

    p = sub.add_parser("series", help="expand or verify generating-function identities")
    ssub = p.add_subparsers(dest="series_cmd", required=True)
    v = ssub.add_parser("verify")
    v.add_argument("identity", choices=["product-sum", "product-seqcong",
                                        "two-variable", "distinct"])
    v.add_argument("--qtrunc", type=int, required=True)
    v.add_argument("--xtrunc", type=int)
    v.add_argument("--f", default="one")
    v.add_argument("--A")
    v.add_argument("--B")
    v.set_defaults(func=_cmd_series_verify)
    e = ssub.add_parser("expand")
    e.add_argument("side", choices=["product", "partition-sum", "seqcong-sum",
                                    "two-variable", "pba-sum", "euler",
                                    "distinct-product", "step-sum"])
    e.add_argument("--qtrunc", type=int)
    e.add_argument("--xtrunc", type=int)
    e.add_argument("--f", default="one")
    e.add_argument("--A")
    e.add_argument("--B")
    e.add_argument("--json", action="store_true")
    e.set_defaults(func=_cmd_series_expand)

    p = sub.add_parser("zeta", help="restricted-partition zeta values, both sides")
    p.add_argument("--T", required=True, help="comma-separated part set, all >= 2")
    p.add_argument("--s", required=True, help="rational exponent > 1, e.g. 2 or 5/2")
    p.add_argument("--depth", type=int, required=True)
    p.add_argument("--dps", type=int, default=30)
    p.set_defaults(func=_cmd_zeta)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 0 if not e.code else 2
    try:
        return args.func(args)
    except (NotSequentiallyCongruent, NotMemberPBA) as e:
        print(_report_json(e.report))
        return 1
    except PartNotInA as e:
        print(_dump({"ok": False, "index": None, "detail": str(e)}))
        return 1
    except ResourceBound as e:
        print(f"error: {e}", file=sys.stderr)
        return 3
    except _USAGE_ERRORS as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
