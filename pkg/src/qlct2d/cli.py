"""Command-line front end.

Subcommands: transform, invert, charfn, moments, verify.  Grid files
are CSV (with a JSON sidecar header) or single-file JSON; parameters
are JSON files with per-axis unimodular matrices.

Exit codes: 0 success, 2 input/parse error, 3 config/invariant
violation, 4 verification failure.  The environment variable
QLCT_THREADS caps BLAS parallelism.
"""

from __future__ import annotations

import argparse
import json
import sys

from .field import GridSpec
from .gridio import (ParseError, read_field, read_spectrum, write_field,
                     write_spectrum)
from .lct import LctParams, TransformParams, fourier_params
from .prob import charfn, covariance
from .transform import forward, inverse
from .verify import ledger_json, ledger_text, run_verify

__all__ = ["main"]

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_CONFIG = 3
EXIT_VERIFY = 4


class VerificationFailure(Exception):
    """A required verification check did not pass."""


def _parse_grid(text: str) -> GridSpec:
    parts = text.split(",")
    if len(parts) != 6:
        raise ValueError(
            f"--grid expects x1min,x1max,x2min,x2max,n1,n2 (got {text!r})")
    return GridSpec(float(parts[0]), float(parts[1]),
                    float(parts[2]), float(parts[3]),
                    int(parts[4]), int(parts[5]))


def _load_params(path: str) -> TransformParams:
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except OSError as e:
        raise ParseError(f"cannot read {path}: {e}") from e
    except json.JSONDecodeError as e:
        raise ParseError(f"{path}: invalid JSON ({e})") from e
    if "A1" in doc or "A2" in doc:
        axes = []
        for key in ("A1", "A2"):
            if key not in doc:
                raise ValueError(f"{path}: missing matrix {key}")
            try:
                axes.append(LctParams.from_dict(doc[key]))
            except (KeyError, ValueError) as e:
                raise ValueError(
                    f"{path}: {key}: {str(e).replace('det(A)', f'det({key})')}"
                ) from e
        return TransformParams(axes[0], axes[1])
    # a single matrix applies to both axes
    try:
        p = LctParams.from_dict(doc)
    except (KeyError, ValueError) as e:
        raise ValueError(f"{path}: {e}") from e
    return TransformParams(p, p)


def _default_freq(spec: GridSpec) -> GridSpec:
    # frequency grid defaults to the spatial grid box
    return spec


def _cmd_transform(args) -> int:
    f = read_field(args.input)
    params = _load_params(args.params) if args.params else fourier_params()
    freq = _parse_grid(args.freq_grid) if args.freq_grid \
        else _default_freq(f.spec)
    s = forward(f, params, freq)
    write_spectrum(s, args.out, args.format)
    return EXIT_OK


def _cmd_invert(args) -> int:
    s = read_spectrum(args.input)
    if args.params:
        s = type(s)(s.spec, s.values, _load_params(args.params))
    if args.grid is None:
        raise ValueError("invert requires --grid for the output box")
    space = _parse_grid(args.grid)
    f = inverse(s, space)
    write_field(f, args.out, args.format)
    return EXIT_OK


def _cmd_charfn(args) -> int:
    f = read_field(args.input)
    if args.freq_grid is None:
        raise ValueError("charfn requires --freq-grid")
    freq = _parse_grid(args.freq_grid)
    params = _load_params(args.params) if args.params else None
    if args.mode == "lct" and params is None:
        params = fourier_params()
    cf = charfn(f, freq, mode=args.mode, params=params)
    write_spectrum(cf.spectrum, args.out, args.format)
    return EXIT_OK


def _cmd_moments(args) -> int:
    f = read_field(args.input)
    report = covariance(f)
    with open(args.out, "w") as fh:
        json.dump(report.to_dict(), fh, indent=1)
        fh.write("\n")
    return EXIT_OK


def _cmd_verify(args) -> int:
    claims = run_verify(quick=args.quick, tol=args.tol)
    sys.stdout.write(ledger_text(claims))
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(ledger_json(claims, quick=args.quick))
    if not all(c.passed for c in claims if c.required):
        raise VerificationFailure("one or more required checks failed")
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="qlct2d",
        description="two-sided 2D quaternion linear canonical transform")
    sub = ap.add_subparsers(dest="command", required=True)

    def add_common(p, needs_input=True):
        if needs_input:
            p.add_argument("input", help="input grid file (csv or json)")
        p.add_argument("--params", help="transform parameter JSON file")
        p.add_argument("--grid", help="x1min,x1max,x2min,x2max,n1,n2")
        p.add_argument("--freq-grid", dest="freq_grid",
                       help="frequency grid, same form as --grid")
        p.add_argument("--tol", type=float, default=None,
                       help="tolerance override")
        p.add_argument("--out", required=needs_input, help="output path")
        p.add_argument("--format", choices=("csv", "json"), default=None,
                       help="output format (default: from extension)")

    p = sub.add_parser("transform", help="forward transform of a field")
    add_common(p)
    p.set_defaults(func=_cmd_transform)

    p = sub.add_parser("invert", help="inverse transform of a spectrum")
    add_common(p)
    p.set_defaults(func=_cmd_invert)

    p = sub.add_parser("charfn", help="characteristic function of a density")
    add_common(p)
    p.add_argument("--mode", choices=("fourier", "lct"), default="fourier")
    p.set_defaults(func=_cmd_charfn)

    p = sub.add_parser("moments", help="moment and covariance report")
    add_common(p)
    p.set_defaults(func=_cmd_moments)

    p = sub.add_parser("verify", help="run the verification suite")
    add_common(p, needs_input=False)
    p.add_argument("--quick", action="store_true",
                   help="reduced resolutions for a fast run")
    p.set_defaults(func=_cmd_verify)

    return ap


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except VerificationFailure as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_VERIFY
    except (ValueError, TypeError, ZeroDivisionError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
