"""Command-line interface.

Subcommands: validate, trop, grtrop, compare, poly, ftt, examples, render.
Exit codes: 0 success, 1 domain failure (invalid fan, mismatch, nonmember),
2 input error (unreadable file, malformed JSON or polynomial text).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import examples as ex
from . import jsonio
from .fundthm import (
    WitnessPoint,
    check_equivalence,
    membership_set1,
    membership_set2,
    trop_hypersurface,
)
from .grobtrop import compare_tropicalizations, grobner_tropicalize_embedding
from .puiseux import INF, PuiseuxScalar, ValuedPolynomial, parse_weight
from .render import render_ascii, render_svg
from .spherical import validate_colored_fan
from .troposphere import tropicalize_embedding


class InputError(Exception):
    pass


class DomainError(Exception):
    pass


def _load_json(path: str) -> dict:
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as e:
        raise InputError(f"cannot read {path}: {e}")
    except json.JSONDecodeError as e:
        raise InputError(f"malformed JSON in {path}: {e}")


def _load_pair(args):
    try:
        datum = jsonio.datum_from_json(_load_json(args.datum))
        fan = jsonio.fan_from_json(_load_json(args.fan), datum.rank)
    except (KeyError, ValueError, TypeError) as e:
        raise InputError(f"bad datum/fan structure: {e}")
    return datum, fan


def _load_poly(source: str, laurent: bool) -> ValuedPolynomial:
    try:
        if os.path.exists(source):
            if source.endswith(".json"):
                return jsonio.polynomial_from_json(_load_json(source))
            with open(source) as fh:
                return ValuedPolynomial.parse(fh.read(), laurent=laurent)
        return ValuedPolynomial.parse(source, laurent=laurent)
    except (ValueError, KeyError) as e:
        raise InputError(f"cannot parse polynomial: {e}")


def _emit(text: str, out: str | None):
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_validate(args) -> int:
    datum, fan = _load_pair(args)
    report = validate_colored_fan(datum, fan)
    _emit(jsonio.dumps(report.to_json()), args.out)
    return 0 if report.ok else 1


def _tropicalize(datum, fan, mode: str):
    try:
        if mode == "grobner":
            return grobner_tropicalize_embedding(datum, fan), None
        facewise = tropicalize_embedding(datum, fan)
        if mode == "facewise":
            return facewise, None
        grobner = grobner_tropicalize_embedding(datum, fan)
        return facewise, compare_tropicalizations(facewise, grobner)
    except ValueError as e:
        raise DomainError(str(e))


def cmd_trop(args) -> int:
    datum, fan = _load_pair(args)
    trop, comparison = _tropicalize(datum, fan, args.mode)
    payload = jsonio.trop_to_json(trop)
    rc = 0
    if comparison is not None:
        payload["comparison"] = comparison.to_json()
        rc = 0 if comparison.equal else 1
    _emit(jsonio.dumps(payload), args.out)
    return rc


def cmd_grtrop(args) -> int:
    args.mode = "grobner"
    return cmd_trop(args)


def cmd_compare(args) -> int:
    try:
        a = jsonio.trop_from_json(_load_json(args.left))
        b = jsonio.trop_from_json(_load_json(args.right))
        report = compare_tropicalizations(a, b)
    except (KeyError, ValueError, TypeError) as e:
        raise InputError(f"bad tropicalization file: {e}")
    _emit(jsonio.dumps(report.to_json()), args.out)
    return 0 if report.equal else 1


def cmd_poly(args) -> int:
    f = _load_poly(args.poly, laurent=not args.ordinary)
    try:
        if args.action == "hypersurface":
            cx = trop_hypersurface(f)
            _emit(jsonio.dumps(jsonio.complex_to_json(cx)), args.out)
            return 0
        if args.weight is None:
            raise InputError("--weight is required for this action")
        w = parse_weight(args.weight, f.nvars)
        if args.action == "trop":
            value = f.trop_eval(w)
            text = "inf" if value is INF else jsonio.frac_to_json(value)
            _emit(text + "\n", args.out)
        else:
            _emit(str(f.initial_form(w)) + "\n", args.out)
        return 0
    except InputError:
        raise
    except ValueError as e:
        raise InputError(str(e))


def cmd_ftt(args) -> int:
    f = _load_poly(args.poly, laurent=not args.ordinary)
    try:
        samples = [parse_weight(w, f.nvars) for w in args.weight or []]
        witnesses = [
            WitnessPoint(tuple(_parse_scalar(c) for c in wtext.split(";")))
            for wtext in args.witness or []]
        report = check_equivalence(f, samples, witnesses)
    except ValueError as e:
        raise InputError(str(e))
    _emit(jsonio.dumps(report.to_json()), args.out)
    return 0 if report.ok else 1


def _parse_scalar(text: str) -> PuiseuxScalar:
    f = ValuedPolynomial.parse(text, nvars=1, laurent=True)
    for u, c in f.terms:
        if u != (0,):
            raise ValueError(f"witness coordinate is not a scalar: {text}")
    if not f.terms:
        return PuiseuxScalar.zero()
    return f.terms[0][1]


def cmd_examples(args) -> int:
    outdir = args.out or "."
    os.makedirs(outdir, exist_ok=True)
    written = []

    def write(name: str, payload: dict):
        path = os.path.join(outdir, name)
        with open(path, "w") as fh:
            fh.write(jsonio.dumps(payload))
        written.append(path)

    name = args.name
    if name == "e3":
        write("e3.poly.json",
              jsonio.polynomial_to_json(ex.e3_polynomial()))
    elif name in ("table1", "table2"):
        datum = ex.table1_datum() if name == "table1" else ex.table2_datum()
        fans = ex.table1_fans() if name == "table1" else ex.table2_fans()
        write(f"{name}.datum.json", jsonio.datum_to_json(datum))
        for fname, (fan, _) in fans.items():
            write(f"{name}.{fname}.fan.json", jsonio.fan_to_json(fan))
            write(f"{name}.{fname}.trop.json",
                  jsonio.trop_to_json(tropicalize_embedding(datum, fan)))
    elif name == "blowup-a4":
        datum, fan = ex.blowup_a4()
        write("blowup-a4.datum.json", jsonio.datum_to_json(datum))
        write("blowup-a4.fan.json", jsonio.fan_to_json(fan))
        write("blowup-a4.trop.json",
              jsonio.trop_to_json(tropicalize_embedding(datum, fan)))
    elif name == "p1xp1":
        datum, fan = ex.p1xp1()
        write("p1xp1.datum.json", jsonio.datum_to_json(datum))
        write("p1xp1.fan.json", jsonio.fan_to_json(fan))
        write("p1xp1.trop.json",
              jsonio.trop_to_json(tropicalize_embedding(datum, fan)))
    else:
        raise InputError(f"unknown example {name!r}")
    for path in written:
        print(path)
    return 0


def cmd_render(args) -> int:
    try:
        trop = jsonio.trop_from_json(_load_json(args.trop))
    except (KeyError, ValueError, TypeError) as e:
        raise InputError(f"bad tropicalization file: {e}")
    try:
        extent = Fraction(args.extent)
        if args.format == "svg":
            _emit(render_svg(trop, extent), args.out)
        else:
            _emit(render_ascii(trop, extent), args.out)
    except ValueError as e:
        raise DomainError(str(e))
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="sphtrop",
        description="Colored fans and extended tropicalization of "
                    "spherical embeddings, with exact arithmetic.")
    sub = p.add_subparsers(dest="command", required=True)

    def add_pair(sp):
        sp.add_argument("--datum", required=True, help="datum JSON file")
        sp.add_argument("--fan", required=True, help="fan JSON file")
        sp.add_argument("--out", help="output file (default stdout)")

    sp = sub.add_parser("validate", help="check the colored-fan axioms")
    add_pair(sp)
    sp.set_defaults(func=cmd_validate)

    sp = sub.add_parser("trop", help="extended tropicalization of a fan")
    add_pair(sp)
    sp.add_argument("--mode", choices=["facewise", "grobner", "both"],
                    default="facewise")
    sp.set_defaults(func=cmd_trop)

    sp = sub.add_parser("grtrop", help="Groebner-side tropicalization")
    add_pair(sp)
    sp.set_defaults(func=cmd_grtrop)

    sp = sub.add_parser("compare", help="diff two tropicalization files")
    sp.add_argument("left")
    sp.add_argument("right")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_compare)

    sp = sub.add_parser("poly", help="tropical polynomial queries")
    sp.add_argument("action", choices=["trop", "init", "hypersurface"])
    sp.add_argument("--poly", required=True,
                    help="polynomial text, text file, or JSON file")
    sp.add_argument("--weight", help='weight vector, e.g. "(-2,0)" or "1,inf"')
    sp.add_argument("--ordinary", action="store_true",
                    help="restrict to nonnegative exponents")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_poly)

    sp = sub.add_parser("ftt", help="fundamental-theorem set comparison")
    sp.add_argument("--poly", required=True)
    sp.add_argument("--weight", action="append",
                    help="sample weight (repeatable)")
    sp.add_argument("--witness", action="append",
                    help='witness point, coordinates separated by ";"')
    sp.add_argument("--ordinary", action="store_true")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_ftt)

    sp = sub.add_parser("examples", help="write the builtin corpus")
    sp.add_argument("name",
                    choices=["table1", "table2", "blowup-a4", "p1xp1", "e3"])
    sp.add_argument("--out", help="output directory (default cwd)")
    sp.set_defaults(func=cmd_examples)

    sp = sub.add_parser("render", help="SVG or ASCII figure of a trop file")
    sp.add_argument("--trop", required=True)
    sp.add_argument("--format", choices=["svg", "ascii"], default="svg")
    sp.add_argument("--extent", default="2", help="half-width of the view box")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_render)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except DomainError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
