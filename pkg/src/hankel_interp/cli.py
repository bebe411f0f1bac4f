"""Command-line front end: ``hankel-interp <subcommand> ...``.

Results go to standard output as deterministic JSON (sorted keys, scalar
text). Errors go to standard error as ``{"error": code, "message": ...}``.
Exit status is 0 on success, 1 when well-formed input has no acceptable
answer (undecodable table, invalid rational split, no common-zero regime)
and 2 for bad input.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
from dataclasses import dataclass, field as dc_field
from typing import Dict, List, Optional, Tuple

from . import io as fio
from .error_correct import UNDECODABLE, correct_table
from .errors import HankelInterpError, IoFailure
from .exact_field import FieldSpec, set_max_bits
from .hankel_core import hankel_poly_naive, hankel_sequence_with_zero
from .poly_interp import interpolate_hankel, interpolate_lagrange, interpolate_sigma_recursion
from .rational_interp import rational_family, rational_interpolate
from .resultant import (
    SampleRatioTable,
    common_zero_from_samples,
    resultant_minors_from_samples,
    sylvester_resultant,
)

MAX_BITS_ENV = "HANKEL_INTERP_MAX_BITS"


class UsageError(HankelInterpError):
    code = "UsageError"


@dataclass
class RunConfig:
    subcommand: str
    inputs: Dict[str, str]
    field: Optional[FieldSpec] = None
    options: Dict[str, object] = dc_field(default_factory=dict)
    pretty: bool = False
    output: Optional[str] = None


class _Parser(argparse.ArgumentParser):
    def __init__(self, *args, **kw):
        # prefix matching would read "--p" as an abbreviation of --prime/--pretty
        kw.setdefault("allow_abbrev", False)
        super().__init__(*args, **kw)

    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    # global flags are accepted before or after the subcommand
    common = _Parser(add_help=False)
    common.add_argument("--prime", type=int, default=argparse.SUPPRESS,
                        help="work in GF(P) instead of the rationals")
    common.add_argument("--pretty", action="store_true", default=argparse.SUPPRESS,
                        help="render polynomials in descending notation")
    common.add_argument("-o", "--output", default=argparse.SUPPRESS,
                        help="write JSON here instead of standard output")
    parser = _Parser(prog="hankel-interp", description=__doc__.splitlines()[0], parents=[common])
    sub = parser.add_subparsers(dest="subcommand", parser_class=_Parser)
    sub.required = True
    _add = sub.add_parser

    def add_parser(name, **kw):
        return _add(name, parents=[common], **kw)

    sub.add_parser = add_parser

    p = sub.add_parser("hankel", help="Hankel polynomials of a generator sequence")
    p.add_argument("--seq", required=True)
    p.add_argument("--kmax", required=True, type=int)
    p.add_argument("--naive", action="store_true", help="use the determinant oracle, not the recursion")

    p = sub.add_parser("interp", help="polynomial interpolation")
    p.add_argument("--table", required=True)
    p.add_argument("--method", choices=("lagrange", "sigma", "hankel"), default="hankel")

    p = sub.add_parser("correct", help="detect and correct corrupted values")
    p.add_argument("--table", required=True)
    p.add_argument("--degree", type=int)
    p.add_argument("--max-errors", type=int)

    p = sub.add_parser("rational", help="rational interpolation")
    p.add_argument("--table", required=True)
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--num-degree", type=int)
    g.add_argument("--all", action="store_true")

    p = sub.add_parser("resultant", help="resultant from samples or coefficients")
    p.add_argument("--table")
    p.add_argument("--num-degree", type=int)
    p.add_argument("--den-degree", type=int)
    p.add_argument("--p0", help="leading numerator coefficient, to locate a common zero")
    p.add_argument("--p1", help="next numerator coefficient, to locate a common zero")
    p.add_argument("--p", dest="p_file")
    p.add_argument("--q", dest="q_file")
    return parser


def config_from_args(argv: Optional[List[str]] = None) -> RunConfig:
    args = build_parser().parse_args(argv)
    prime = getattr(args, "prime", None)
    spec = FieldSpec.prime(prime) if prime is not None else None
    cmd = args.subcommand
    inputs: Dict[str, str] = {}
    opts: Dict[str, object] = {}
    if cmd == "hankel":
        inputs["seq"] = args.seq
        if args.kmax < 0:
            raise UsageError("--kmax must be non-negative")
        opts.update(kmax=args.kmax, naive=args.naive)
    elif cmd == "interp":
        inputs["table"] = args.table
        opts["method"] = args.method
    elif cmd == "correct":
        inputs["table"] = args.table
        opts.update(degree=args.degree, max_errors=args.max_errors)
    elif cmd == "rational":
        inputs["table"] = args.table
        opts.update(num_degree=args.num_degree, all=args.all)
    elif cmd == "resultant":
        sample_mode = args.table is not None
        coeff_mode = args.p_file is not None or args.q_file is not None
        if sample_mode == coeff_mode:
            raise UsageError("resultant takes either --table with degrees or --p and --q")
        if sample_mode:
            if args.num_degree is None or args.den_degree is None:
                raise UsageError("--table needs --num-degree and --den-degree")
            if (args.p0 is None) != (args.p1 is None):
                raise UsageError("--p0 and --p1 go together")
            inputs["table"] = args.table
            opts.update(n=args.num_degree, m=args.den_degree, p0=args.p0, p1=args.p1)
        else:
            if args.p_file is None or args.q_file is None:
                raise UsageError("coefficient mode needs both --p and --q")
            inputs.update(p=args.p_file, q=args.q_file)
    return RunConfig(cmd, inputs, spec, opts, getattr(args, "pretty", False), getattr(args, "output", None))


def _hankel(cfg: RunConfig) -> Tuple[int, dict]:
    seq = fio.parse_sequence_file(cfg.inputs["seq"], cfg.field)
    kmax = cfg.options["kmax"]
    if cfg.options["naive"]:
        polys = [hankel_poly_naive(seq, k) for k in range(kmax + 1)]
    else:
        polys = hankel_sequence_with_zero(seq, kmax)
    return 0, {
        "field": seq.field.to_json(),
        "polynomials": [
            {
                "order": hp.order,
                "coefficients": fio.poly_json(hp.as_polynomial(), cfg.pretty),
                "leading_minor": str(hp.leading_minor),
                "identically_zero": hp.is_identically_zero(),
            }
            for hp in polys[1:]
        ],
    }


_METHODS = {"lagrange": interpolate_lagrange, "sigma": interpolate_sigma_recursion, "hankel": interpolate_hankel}


def _interp(cfg: RunConfig) -> Tuple[int, dict]:
    table = fio.parse_table_file(cfg.inputs["table"], cfg.field)
    p = _METHODS[cfg.options["method"]](table)
    return 0, {
        "field": table.field.to_json(),
        "method": cfg.options["method"],
        "degree": p.degree,
        "polynomial": fio.poly_json(p, cfg.pretty),
    }


def _correct(cfg: RunConfig) -> Tuple[int, dict]:
    table = fio.parse_table_file(cfg.inputs["table"], cfg.field)
    rep = correct_table(table, cfg.options["degree"], cfg.options["max_errors"])
    out = {
        "field": table.field.to_json(),
        "status": rep.status,
        "degree": rep.degree,
        "error_count": rep.error_count,
        "errors": [
            {"node": str(x), "given": str(y), "corrected": str(c)} for x, y, c in rep.corrections(table)
        ],
        "polynomial": None if rep.recovered is None else fio.poly_json(rep.recovered, cfg.pretty),
        "locator": None if rep.locator is None else fio.poly_json(rep.locator, cfg.pretty),
        "cross_check": rep.diagnostics.get("cross_check"),
    }
    if "reason" in rep.diagnostics:
        out["reason"] = rep.diagnostics["reason"]
    return (1 if rep.status == UNDECODABLE else 0), out


def _interpolant_json(r, pretty: bool) -> dict:
    return {
        "n": r.n,
        "m": r.m,
        "numerator": fio.poly_json(r.numerator, pretty),
        "denominator": fio.poly_json(r.denominator, pretty),
        "valid": r.valid,
        "degenerate": r.degenerate,
        "failure_nodes": [str(x) for x in r.failure_nodes],
    }


def _rational(cfg: RunConfig) -> Tuple[int, dict]:
    table = fio.parse_table_file(cfg.inputs["table"], cfg.field)
    if cfg.options["all"]:
        fam = rational_family(table)
        return 0, {"field": table.field.to_json(), "interpolants": [_interpolant_json(r, cfg.pretty) for r in fam]}
    r = rational_interpolate(table, cfg.options["num_degree"])
    out = _interpolant_json(r, cfg.pretty)
    out["field"] = table.field.to_json()
    return (0 if r.valid else 1), out


def _resultant(cfg: RunConfig) -> Tuple[int, dict]:
    if "p" in cfg.inputs:
        p = fio.parse_polynomial_file(cfg.inputs["p"], cfg.field)
        q = fio.parse_polynomial_file(cfg.inputs["q"], p.field)
        res = sylvester_resultant(p, q)
        return 0, {"field": p.field.to_json(), "resultant": str(res), "vanishing": not res}
    field, xs, rs = fio.parse_ratio_file(cfg.inputs["table"], cfg.field)
    samples = SampleRatioTable(field, tuple(xs), tuple(rs), cfg.options["n"], cfg.options["m"])
    minors = resultant_minors_from_samples(samples)
    out = {
        "field": field.to_json(),
        "minors": {k: str(v) for k, v in minors.items()},
        "vanishing": not minors["H_n_ttau"],
    }
    if cfg.options["p0"] is not None:
        lam = common_zero_from_samples(samples, field.parse(cfg.options["p0"]), field.parse(cfg.options["p1"]))
        out["common_zero"] = str(lam)
    return 0, out


_DISPATCH = {
    "hankel": _hankel,
    "interp": _interp,
    "correct": _correct,
    "rational": _rational,
    "resultant": _resultant,
}


def run(cfg: RunConfig) -> Tuple[int, dict]:
    """Execute one command; returns (exit status, JSON-ready payload)."""
    return _DISPATCH[cfg.subcommand](cfg)


def _apply_env():
    raw = os.environ.get(MAX_BITS_ENV)
    if raw is None or not raw.strip():
        set_max_bits(None)
        return
    try:
        bits = int(raw)
    except ValueError:
        raise UsageError(f"{MAX_BITS_ENV} must be a positive integer, got {raw!r}") from None
    if bits <= 0:
        raise UsageError(f"{MAX_BITS_ENV} must be a positive integer, got {raw!r}")
    set_max_bits(bits)


def main(argv: Optional[List[str]] = None) -> int:
    logging.basicConfig(level=logging.WARNING, format="hankel-interp: %(message)s", stream=sys.stderr)
    try:
        _apply_env()
        cfg = config_from_args(argv)
        status, payload = run(cfg)
        text = fio.dumps(payload) + "\n"
        if cfg.output:
            try:
                with open(cfg.output, "w", encoding="utf-8") as fh:
                    fh.write(text)
            except OSError as exc:
                raise IoFailure(f"cannot write {cfg.output}: {exc.strerror or exc}") from exc
        else:
            sys.stdout.write(text)
        return status
    except HankelInterpError as exc:
        sys.stderr.write(fio.error_json(exc) + "\n")
        return exc.exit_status


if __name__ == "__main__":
    sys.exit(main())
