"""Command-line front end.

Commands:

* ``compute``  -- twisted Alexander polynomial of a diagram (or a raw
  presentation) with a representation file.
* ``classical`` -- classical multivariable Alexander polynomial.
* ``torres``   -- delete a component, pull the representation back, and
  verify the factorization of the specialized polynomial.
* ``selftest`` -- run the bundled invariant suites.

Exit codes: 0 success (including degenerate results, which are reported with
a notice), 1 verification failure, 2 I/O trouble, 3 invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys

from .algebra import canonical_unit_form, field_from_name
from .diagram import parse_pd, wirtinger
from .errors import (DegenerateInputError, ParseError, TwistalexError,
                     ValidationError)
from .freegroup import parse_presentation
from .representation import parse_representation_file, validate
from .selftest import run_all
from .torres import verify_torres
from .twisted import classical_alexander, twisted_invariant

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_IO = 2
EXIT_INVALID = 3


def _read(path: str) -> str:
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _emit(records, fmt: str, text_renderer):
    if fmt == "json-lines":
        for r in records:
            print(json.dumps(r, ensure_ascii=False))
    else:
        print(text_renderer())


def _load_link(path: str):
    return parse_pd(_read(path), name=path.rsplit("/", 1)[-1], source=path)


def _load_rep(path: str, pres, field_flag):
    spec = parse_representation_file(_read(path), source=path)
    if field_flag is not None and field_from_name(field_flag) != spec.field:
        raise ValidationError(
            f"--field {field_flag} conflicts with representation file header "
            f"({spec.field.name})")
    rep = spec.bind(pres)
    violations = validate(rep, pres)
    if violations:
        raise ValidationError(f"representation in {path} is invalid", violations)
    return rep


def cmd_compute(args) -> int:
    if bool(args.link) == bool(args.pres):
        print("compute: exactly one of --link or --pres is required", file=sys.stderr)
        return EXIT_INVALID
    if args.link:
        pres = wirtinger(_load_link(args.link))
    else:
        pres = parse_presentation(_read(args.pres), source=args.pres)
    rep = _load_rep(args.rep, pres, args.field)
    inv = twisted_invariant(pres, rep, remove_gen=args.remove_gen, validated=True)
    n = rep.degree
    numerator = canonical_unit_form(inv.numerator, n).to_text()
    denominator = canonical_unit_form(inv.denominator, n).to_text()
    quotient = (None if inv.quotient is None
                else canonical_unit_form(inv.quotient, n).to_text())
    record = {
        "record": "twisted-invariant",
        "removed_generator": inv.removed_generator,
        "degree": n,
        "field": rep.field.name,
        "numerator": numerator,
        "denominator": denominator,
        "quotient": quotient,
        "polynomiality_warning": inv.polynomiality_warning,
    }

    def text():
        lines = [
            f"removed generator: {inv.removed_generator}",
            f"numerator   = {numerator}",
            f"denominator = {denominator}",
        ]
        if quotient is not None:
            lines.append(f"quotient    = {quotient}")
        else:
            lines.append("quotient    = (not a polynomial)")
        if inv.polynomiality_warning:
            lines.append("warning: numerator is not divisible by the denominator "
                         "at degree >= 2; the value is only a rational function")
        return "\n".join(lines)

    _emit([record], args.format, text)
    return EXIT_OK


def cmd_classical(args) -> int:
    d = _load_link(args.link)
    poly = classical_alexander(d).to_text()
    record = {"record": "classical-alexander", "link": d.name, "polynomial": poly}
    _emit([record], args.format, lambda: poly)
    return EXIT_OK


def cmd_torres(args) -> int:
    d = _load_link(args.link)
    if args.drop is None:
        print("torres: --drop <component> is required", file=sys.stderr)
        return EXIT_INVALID
    from .diagram import delete_component
    deletion = delete_component(d, args.drop)
    pres_prime = wirtinger(deletion.diagram)
    rep_prime = _load_rep(args.rep, pres_prime, args.field)
    report = verify_torres(d, args.drop, rep_prime, remove_arc=args.remove_gen)
    _emit([report.to_dict()], args.format, report.render_text)
    if report.passed:
        return EXIT_OK
    return EXIT_FAIL


def cmd_selftest(args) -> int:
    results = run_all(fast=args.fast)
    if args.format == "json-lines":
        for r in results:
            print(json.dumps({
                "record": "selftest",
                "suite": r.name,
                "checks": r.checks,
                "failures": list(r.failures),
                "passed": r.passed,
            }, ensure_ascii=False))
    else:
        for r in results:
            print(r.render())
        total = sum(r.checks for r in results)
        bad = sum(len(r.failures) for r in results)
        print(f"\n{len(results)} suites, {total} checks, {bad} failures")
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="twistalex",
        description="Exact twisted Alexander polynomials of links and "
                    "Torres-condition verification.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, link_required=True):
        p.add_argument("--link", help="PD diagram file")
        p.add_argument("--field", help="coefficient field: Q or Fp:<p>")
        p.add_argument("--format", choices=("text", "json-lines"), default="text")
        return p

    p = common(sub.add_parser("compute", help="twisted Alexander polynomial"))
    p.add_argument("--pres", help="presentation file (alternative to --link)")
    p.add_argument("--rep", required=True, help="representation file")
    p.add_argument("--remove-gen", help="generator label whose column is removed")
    p.set_defaults(func=cmd_compute)

    p = common(sub.add_parser("classical", help="classical Alexander polynomial"))
    p.set_defaults(func=cmd_classical)

    p = common(sub.add_parser("torres", help="verify the deletion factorization"))
    p.add_argument("--drop", type=int, help="component to delete (1-based)")
    p.add_argument("--rep", required=True,
                   help="representation file for the smaller link")
    p.add_argument("--remove-gen",
                   help="arc label (on the full link) whose column is removed")
    p.set_defaults(func=cmd_torres)

    p = sub.add_parser("selftest", help="run bundled invariant suites")
    p.add_argument("--fast", action="store_true", help="cut randomized counts")
    p.add_argument("--format", choices=("text", "json-lines"), default="text")
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except FileNotFoundError as exc:
        print(f"error: file not found: {exc.filename}", file=sys.stderr)
        return EXIT_IO
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (ParseError, ValidationError, DegenerateInputError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except TwistalexError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
