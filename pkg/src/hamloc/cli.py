"""Command-line interface.

Subcommands wrap the library operations one-to-one and print exact rationals
as "p/q"; decimals appear only in CSV plot output.  Exit codes are stable per
error class so the tool scripts cleanly:

    0  success (the mathematical postcondition holds)
    2  parse/usage error (malformed file, bad flag value)
    3  inconsistent fixed-point data (localization sums, inexact division,
       failed multiplicity comparison)
    4  non-regular level
    5  non-generic circle direction

The only environment knob is HAMLOC_CSV_PLACES, the number of decimal places
in CSV output (default 12).  Output is deterministic: identical inputs give
byte-identical bytes.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from pathlib import Path

from . import __version__
from .algebra import as_rational, format_rational
from .errors import (
    ConsistencyError,
    InexactDivisionError,
    NonGenericDirectionError,
    NonRegularError,
    SpaceFormatError,
)
from .dh import cut_measure, dh_measure, total_volume
from .quantization import PrequantSpace, cut_character, verify_rr_identity, character
from .reduction import jk_pairing, reduced_volume
from .spaces import (
    HamiltonianSpaceData,
    build_projective,
    build_projective_torus,
    restrict_to_circle,
    space_from_json_dict,
    space_to_json_dict,
    validate_consistency,
)

EXIT_PARSE = 2
EXIT_INCONSISTENT = 3
EXIT_NON_REGULAR = 4
EXIT_NON_GENERIC = 5


def load_space(path: str) -> HamiltonianSpaceData:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise SpaceFormatError(f"cannot read {path}: {exc}") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpaceFormatError(
            f"{path}: invalid JSON at line {exc.lineno}, column {exc.colno}: "
            f"{exc.msg}") from exc
    return space_from_json_dict(data)


def _dump_json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def _parse_rational_arg(text: str) -> Fraction:
    try:
        return as_rational(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise SpaceFormatError(f"malformed rational {text!r}") from exc


def _decimal_str(x: Fraction, places: int) -> str:
    scaled = round(x * Fraction(10) ** places)
    sign = "-" if scaled < 0 else ""
    digits = str(abs(scaled)).rjust(places + 1, "0")
    return f"{sign}{digits[:-places]}.{digits[-places:]}" if places else f"{sign}{digits}"


def _csv_places() -> int:
    raw = os.environ.get("HAMLOC_CSV_PLACES", "12")
    try:
        places = int(raw)
    except ValueError as exc:
        raise SpaceFormatError(f"HAMLOC_CSV_PLACES must be an integer, got {raw!r}") from exc
    if places < 1:
        raise SpaceFormatError("HAMLOC_CSV_PLACES must be >= 1")
    return places


def cmd_validate(args) -> int:
    report = validate_consistency(load_space(args.file))
    for line in report.lines():
        print(line)
    if report.passed:
        print("consistency: pass")
        return 0
    print("consistency: fail")
    return EXIT_INCONSISTENT


def cmd_dh(args) -> int:
    measure = dh_measure(load_space(args.file))
    if args.format == "json":
        sys.stdout.write(_dump_json(measure.to_json_dict()))
        return 0
    places = _csv_places()
    if args.samples < 1:
        raise SpaceFormatError("--samples must be >= 1")
    span = measure.support
    if span is None:
        return 0
    lo, hi = span
    n = args.samples
    step = (hi - lo) / n
    for i in range(n + 1):
        t = lo + i * step
        offset = step / 2
        while t in measure.breakpoints:
            t = t + offset if i < n else t - offset
            offset /= 2
        print(f"{_decimal_str(t, places)},{_decimal_str(measure.density_at(t), places)}")
    return 0


def cmd_volume(args) -> int:
    space = load_space(args.file)
    if args.at is None:
        print(format_rational(total_volume(space)))
    else:
        print(format_rational(reduced_volume(space, _parse_rational_arg(args.at))))
    return 0


def cmd_jk(args) -> int:
    space = load_space(args.file)
    print(format_rational(jk_pairing(space, _parse_rational_arg(args.at))))
    return 0


def cmd_character(args) -> int:
    chi = character(PrequantSpace(load_space(args.file)))
    sys.stdout.write(_dump_json(chi.to_json_dict()))
    return 0


def cmd_rr(args) -> int:
    ps = PrequantSpace(load_space(args.file))
    report = verify_rr_identity(ps, args.from_level, args.to_level)
    for a, mult, psum in report.rows:
        print(f"{a}\t{mult}\t{psum}")
    if report.passed:
        print("PASS")
        return 0
    print("FAIL")
    return EXIT_INCONSISTENT


def cmd_cut(args) -> int:
    space = load_space(args.file)
    level = _parse_rational_arg(args.at)
    measure = cut_measure(space, level)
    payload = {"measure": measure.to_json_dict(), "character": None}
    if all(fp.moment[0].denominator == 1 for fp in space.fixed_points):
        chi = cut_character(PrequantSpace(space), level)
        payload["character"] = chi.to_json_dict()
    _emit(_dump_json(payload), args.out)
    return 0


def cmd_example(args) -> int:
    scale = _parse_rational_arg(args.scale)
    try:
        if args.name == "cp_d":
            if args.weights is None:
                raise SpaceFormatError("cp_d requires --weights")
            weights = [int(w) for w in args.weights.split(",")]
            space = build_projective(weights, scale)
        elif args.name == "cp_d_torus":
            if args.dim is None:
                raise SpaceFormatError("cp_d_torus requires --dim")
            space = build_projective_torus(args.dim, scale)
        else:
            raise SpaceFormatError(f"unknown example {args.name!r}")
    except ValueError as exc:
        raise SpaceFormatError(str(exc)) from exc
    _emit(_dump_json(space_to_json_dict(space)), args.out)
    return 0


def cmd_restrict(args) -> int:
    space = load_space(args.file)
    try:
        xi = [int(c) for c in args.xi.split(",")]
    except ValueError as exc:
        raise SpaceFormatError(f"malformed direction {args.xi!r}") from exc
    try:
        restricted = restrict_to_circle(space, xi)
    except NonGenericDirectionError:
        raise
    except ValueError as exc:
        raise SpaceFormatError(str(exc)) from exc
    _emit(_dump_json(space_to_json_dict(restricted)), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hamloc",
        description="Exact cobordism invariants of Hamiltonian circle/torus "
                    "actions from fixed-point data.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check the localization consistency sums")
    p.add_argument("file")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("dh", help="Duistermaat-Heckman measure")
    p.add_argument("file")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--samples", type=int, default=100,
                   help="number of CSV sample intervals (default 100)")
    p.set_defaults(func=cmd_dh)

    p = sub.add_parser("volume", help="total Liouville mass, or reduced volume at --at")
    p.add_argument("file")
    p.add_argument("--at", default=None, metavar="LEVEL")
    p.set_defaults(func=cmd_volume)

    p = sub.add_parser("jk", help="Jeffrey-Kirwan pairing of the top generator power")
    p.add_argument("file")
    p.add_argument("--at", required=True, metavar="LEVEL")
    p.set_defaults(func=cmd_jk)

    p = sub.add_parser("character", help="equivariant Riemann-Roch character")
    p.add_argument("file")
    p.set_defaults(func=cmd_character)

    p = sub.add_parser("rr", help="compare multiplicities with partition sums")
    p.add_argument("file")
    p.add_argument("--from", dest="from_level", type=int, required=True)
    p.add_argument("--to", dest="to_level", type=int, required=True)
    p.set_defaults(func=cmd_rr)

    p = sub.add_parser("cut", help="symplectic cut: truncated measure (and character)")
    p.add_argument("file")
    p.add_argument("--at", required=True, metavar="LEVEL")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_cut)

    p = sub.add_parser("example", help="write a built-in example space")
    p.add_argument("name", choices=("cp_d", "cp_d_torus"))
    p.add_argument("--weights", default=None,
                   help="comma-separated integers a_0,...,a_d (cp_d)")
    p.add_argument("--dim", type=int, default=None, help="dimension d (cp_d_torus)")
    p.add_argument("--scale", default="1", help="positive rational moment scale")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_example)

    p = sub.add_parser("restrict", help="restrict a torus space to a circle direction")
    p.add_argument("file")
    p.add_argument("--xi", required=True, help="comma-separated integer direction")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_restrict)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SpaceFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except NonRegularError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NON_REGULAR
    except NonGenericDirectionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NON_GENERIC
    except (ConsistencyError, InexactDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


def run() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    run()
