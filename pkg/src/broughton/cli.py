"""Command-line interface.

Exit codes: 0 on success, 1 when a polynomial or rational argument fails
to parse, 2 when a precondition is violated (inadmissible pair, constant
input, bad degree or exponent arguments), 3 when a connectivity
certificate comes back inconclusive.

Output is text by default; ``--format json`` prints a deterministic JSON
document instead, and ``--quiet`` silences the text rendering (exit codes
and JSON are unaffected).
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from .arrangement import betti, check_hypotheses, special_fiber_divisor
from .decompose import connectivity_certificate, uni_decompose_at
from .parser import ParseError, parse_uni, print_canonical
from .report import (
    SCHEMA_VERSION,
    build_report,
    render_json,
    render_text,
    report_mapping,
    zahid_polynomials,
)

EXIT_OK = 0
EXIT_PARSE_ERROR = 1
EXIT_PRECONDITION = 2
EXIT_INCONCLUSIVE = 3


def _emit(args, mapping: dict, text_lines) -> None:
    if args.format == "json":
        print(render_json(mapping))
    elif not args.quiet:
        print("\n".join(text_lines))


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


def cmd_check(args) -> int:
    p = parse_uni(args.p)
    q = parse_uni(args.q)
    hypotheses = check_hypotheses(p, q)
    mapping = {
        "schema_version": SCHEMA_VERSION,
        "command": "check",
        "inputs": {"p": print_canonical(p), "q": print_canonical(q)},
        "hypotheses": {
            "common_root_pq": hypotheses.common_root_pq,
            "no_common_root_p1_q": hypotheses.no_common_root_p1_q,
            "satisfied": hypotheses.satisfied,
        },
    }
    lines = [
        f"common root of p and q: {_yes(hypotheses.common_root_pq)}",
        f"no common root of p+1 and q: {_yes(hypotheses.no_common_root_p1_q)}",
        f"admissible: {_yes(hypotheses.satisfied)}",
    ]
    _emit(args, mapping, lines)
    return EXIT_OK if hypotheses.satisfied else EXIT_PRECONDITION


def cmd_betti(args) -> int:
    p = parse_uni(args.p)
    q = parse_uni(args.q)
    numbers = betti(p, q)
    mapping = {
        "schema_version": SCHEMA_VERSION,
        "command": "betti",
        "inputs": {"p": print_canonical(p), "q": print_canonical(q)},
        "betti": {
            "b0": numbers.b0,
            "b1": numbers.b1,
            "b2": numbers.b2,
            "s": numbers.s,
            "t": numbers.t,
        },
    }
    lines = [
        f"b0 = {numbers.b0}, b1 = {numbers.b1}, b2 = {numbers.b2} "
        f"(s = {numbers.s}, t = {numbers.t})"
    ]
    _emit(args, mapping, lines)
    return EXIT_OK


def cmd_charvar(args) -> int:
    p = parse_uni(args.p)
    q = parse_uni(args.q)
    return _emit_report(args, p, q)


def _emit_report(args, p, q) -> int:
    document = build_report(p, q)
    if args.format == "json":
        print(render_json(report_mapping(document)))
    elif not args.quiet:
        print(render_text(document))
    return EXIT_OK


def cmd_zahid(args) -> int:
    p, q = zahid_polynomials(args.p_exponent, args.q_factors)
    return _emit_report(args, p, q)


def cmd_divisor(args) -> int:
    p = parse_uni(args.p)
    divisor = special_fiber_divisor(p)
    mapping = {
        "schema_version": SCHEMA_VERSION,
        "command": "divisor",
        "inputs": {"p": print_canonical(p)},
        "divisor": {
            "value": f"{divisor.value.numerator}/{divisor.value.denominator}",
            "unit": f"{divisor.unit.numerator}/{divisor.unit.denominator}",
            "components": [
                {"factor": print_canonical(factor), "multiplicity": multiplicity}
                for factor, multiplicity in divisor.components
            ],
            "divisor_multiplicity": divisor.divisor_multiplicity,
        },
    }
    pieces = " * ".join(
        f"({print_canonical(factor)})^{multiplicity}"
        for factor, multiplicity in divisor.components
    )
    lines = [
        f"special fiber at -1: {pieces}",
        f"divisor multiplicity: {divisor.divisor_multiplicity}",
    ]
    _emit(args, mapping, lines)
    return EXIT_OK


def cmd_decompose(args) -> int:
    p = parse_uni(args.p)
    result = uni_decompose_at(p, args.inner_degree)
    mapping = {
        "schema_version": SCHEMA_VERSION,
        "command": "decompose",
        "inputs": {"p": print_canonical(p)},
        "inner_degree": args.inner_degree,
        "decomposition": None
        if result is None
        else {
            "outer": print_canonical(result.outer),
            "inner": print_canonical(result.inner),
        },
    }
    if result is None:
        lines = [f"no decomposition with inner degree {args.inner_degree}"]
    else:
        lines = [
            f"outer: {print_canonical(result.outer)}",
            f"inner: {print_canonical(result.inner)}",
        ]
    _emit(args, mapping, lines)
    return EXIT_OK


def cmd_connectivity(args) -> int:
    p = parse_uni(args.p)
    try:
        c = Fraction(args.c)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"invalid rational constant {args.c!r}", 0)
    certificate = connectivity_certificate(p, args.m, args.n, c)
    r_x, r_y = certificate.eliminants
    mapping = {
        "schema_version": SCHEMA_VERSION,
        "command": "connectivity",
        "inputs": {
            "p": print_canonical(p),
            "m": args.m,
            "n": args.n,
            "c": f"{c.numerator}/{c.denominator}",
        },
        "certificate": {
            "status": certificate.status,
            "singular_locus_finite": certificate.singular_finite,
            "eliminant_x": print_canonical(r_x),
            "eliminant_y": print_canonical(r_y),
            "notes": certificate.notes,
        },
    }
    lines = [
        f"status: {certificate.status}",
        f"singular locus finite: {certificate.singular_finite}",
        f"eliminants: {print_canonical(r_x)} ; {print_canonical(r_y)}",
    ]
    _emit(args, mapping, lines)
    return EXIT_OK if certificate.singular_finite else EXIT_INCONCLUSIVE


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=("json", "text"), default="text",
        help="output format (default: text)",
    )
    common.add_argument(
        "--quiet", action="store_true",
        help="suppress text output; exit codes and JSON are unaffected",
    )

    parser = argparse.ArgumentParser(
        prog="broughton",
        description="Exact invariants of generalized Broughton curve arrangements.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("check", parents=[common],
                        help="test the admissibility hypotheses on (p, q)")
    sp.add_argument("p")
    sp.add_argument("q")
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("betti", parents=[common],
                        help="Betti numbers of the arrangement complement")
    sp.add_argument("p")
    sp.add_argument("q")
    sp.set_defaults(func=cmd_betti)

    for name, help_text in (
        ("charvar", "full characteristic-variety report for (p, q)"),
        ("report", "alias of charvar"),
    ):
        sp = sub.add_parser(name, parents=[common], help=help_text)
        sp.add_argument("p")
        sp.add_argument("q")
        sp.set_defaults(func=cmd_charvar)

    sp = sub.add_parser("divisor", parents=[common],
                        help="multiple-fiber divisor of the pencil at -1")
    sp.add_argument("p")
    sp.set_defaults(func=cmd_divisor)

    sp = sub.add_parser("decompose", parents=[common],
                        help="functional decomposition at a given inner degree")
    sp.add_argument("p")
    sp.add_argument("--inner-degree", type=int, required=True)
    sp.set_defaults(func=cmd_decompose)

    sp = sub.add_parser("connectivity", parents=[common],
                        help="connectivity certificate for the auxiliary surface")
    sp.add_argument("p")
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--c", required=True,
                    help="nonzero rational constant, e.g. -2 or 3/2; "
                         "spell negative fractions as --c=-3/2")
    sp.set_defaults(func=cmd_connectivity)

    sp = sub.add_parser("zahid", parents=[common],
                        help="report for the standard family x^a, x*(x+2)*...*(x+b)")
    sp.add_argument("p_exponent", type=int)
    sp.add_argument("q_factors", type=int)
    sp.set_defaults(func=cmd_zahid)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as error:
        print(f"error: {error}", file=sys.stderr)
        return EXIT_PARSE_ERROR
    except (ValueError, ZeroDivisionError, ArithmeticError) as error:
        print(f"error: {error}", file=sys.stderr)
        return EXIT_PRECONDITION


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
