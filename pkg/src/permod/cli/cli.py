# Copyright (C) 2026 permod developers
# SPDX-License-Identifier: BSD-3-Clause
# See: https://spdx.org/licenses/

import argparse
import csv
import io
import json
import logging
import sys
import typing as ty
from dataclasses import dataclass
from fractions import Fraction

from permod.cli.exceptions import MalformedLiteralError, MissingArgumentError
from permod.exact.exact import QQ
from permod.ff.ff import FiniteField, make_field
from permod.linalg.field import AbstractField
from permod.modules.modules import (
    ModVector,
    affine_construction,
    block_vector,
    generated_submodule,
    orbit_sum_vector,
    small_support_vector,
    verify_inequalities)
from permod.permgrp.group_file import load_group
from permod.permgrp.permgrp import PermGroup
from permod.poly.poly import Poly, factor_cyclic
from permod.uncertainty.enums import SearchMode
from permod.uncertainty.uncertainty import (
    chebotarev_refute_mod_q,
    chebotarev_verify,
    exhaustive_char_p,
    fourier_support,
    gcd_criterion,
    minimal_table,
    search_counterexample)
from permod.utils.exceptions import InvariantViolationError
from permod.utils.math import prime_power

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INVARIANT_VIOLATED = 1
EXIT_INPUT_ERROR = 2

SUBCOMMANDS = ("verify", "search", "table", "chebotarev", "construct",
               "fourier", "criterion", "exhaustive", "refute", "factor")
CONSTRUCTIONS = ("block", "orbit", "affine", "lemma-f")
FORMATS = ("json", "csv", "text")


def parse_field(text: str) -> AbstractField:
    """
    Parses a field literal: "p" for GF(p), "p^k" for GF(p^k) or "Q" for
    the rationals.
    """
    text = text.strip()
    if text.upper() == "Q":
        return QQ
    base, _, exponent = text.partition("^")
    try:
        p = int(base)
        k = int(exponent) if exponent else 1
    except ValueError:
        raise MalformedLiteralError(f"field literal {text!r} is not of the "
                                    f"form p or p^k")
    if prime_power(p) != (p, 1):
        raise MalformedLiteralError(f"{p} is not a prime")
    return make_field(p, k)


def _parse_coefficient(token: str, field: AbstractField) -> ty.Any:
    token = token.strip()
    if field is QQ:
        try:
            return Fraction(token)
        except ValueError:
            raise MalformedLiteralError(f"{token!r} is not a rational "
                                        f"number")
    assert isinstance(field, FiniteField)
    try:
        digits = [int(d) for d in token.split(";")]
    except ValueError:
        raise MalformedLiteralError(f"{token!r} is not an element of "
                                    f"{field}")
    if len(digits) > field.k or any(not 0 <= d < field.p for d in digits):
        raise MalformedLiteralError(f"coefficient {token!r} is out of "
                                    f"range for {field}")
    return field.element(digits)


def _parse_coefficients(text: str, field: AbstractField) -> ty.List[ty.Any]:
    if not text.strip():
        raise MalformedLiteralError("empty coefficient list")
    return [_parse_coefficient(token, field) for token in text.split(",")]


def parse_poly(text: str, field: AbstractField) -> Poly:
    """
    Parses a comma-separated coefficient list in ascending degree, e.g.
    "1,1,0,1" over GF(2) is X^3 + X + 1. Coefficients of extension fields
    are ;-joined representative digits.

    Parameters
    ----------
    text : str
        polynomial literal
    field : AbstractField
        coefficient field

    Returns
    -------
    f : Poly
        with trailing zeros stripped

    """
    return Poly(field, _parse_coefficients(text, field))


def parse_vector(text: str, group: PermGroup,
                 field: AbstractField) -> ModVector:
    """Parses a comma-separated coefficient list in point order"""
    coeffs = _parse_coefficients(text, field)
    if len(coeffs) != group.n:
        raise MalformedLiteralError(f"vector has {len(coeffs)} coefficients "
                                    f"but the group has degree {group.n}")
    return ModVector(group, field, coeffs)


def parse_int_list(text: str, name: str) -> ty.List[int]:
    try:
        return [int(token) for token in text.split(",") if token.strip()]
    except ValueError:
        raise MalformedLiteralError(f"{name} must be a comma-separated list "
                                    f"of integers")


@dataclass(frozen=True)
class RunConfig:
    """Settings of one command-line invocation."""
    subcommand: str
    field: ty.Optional[str] = None
    prime: ty.Optional[int] = None
    primes: ty.Optional[str] = None
    q_max: int = 16
    group: ty.Optional[str] = None
    vector: ty.Optional[str] = None
    poly: ty.Optional[str] = None
    construction: ty.Optional[str] = None
    block: ty.Optional[str] = None
    point: int = 0
    subgroup: ty.Optional[str] = None
    unit: ty.Optional[str] = None
    mode: str = SearchMode.DIVISORS_ONLY.value
    cross_check: bool = False
    max_minor: ty.Optional[int] = None
    samples: int = 10_000
    seed: int = 0
    jobs: int = 1
    output_format: str = "json"

    def __post_init__(self) -> None:
        if self.subcommand not in SUBCOMMANDS:
            raise ValueError(f"unknown subcommand {self.subcommand!r}")
        if self.output_format not in FORMATS:
            raise ValueError(f"unknown output format "
                             f"{self.output_format!r}")

    @classmethod
    def from_namespace(cls, args: argparse.Namespace) -> "RunConfig":
        values = {name: getattr(args, name) for name in
                  cls.__dataclass_fields__ if hasattr(args, name)}
        return cls(**values)

    def require(self, option: str) -> ty.Any:
        value = getattr(self, option)
        if value is None:
            raise MissingArgumentError("--" + option.replace("_", "-"))
        return value

    def finite_field(self) -> FiniteField:
        field = parse_field(self.require("field"))
        if not isinstance(field, FiniteField):
            raise MalformedLiteralError(f"{self.subcommand} needs a finite "
                                        f"field")
        return field


def _report_verify(config: RunConfig) -> ty.Dict[str, ty.Any]:
    group = load_group(config.require("group"))
    field = parse_field(config.require("field"))
    v = parse_vector(config.require("vector"), group, field)
    return verify_inequalities(v).to_dict()


def _report_search(config: RunConfig) -> ty.Dict[str, ty.Any]:
    p = config.require("prime")
    field = config.finite_field()
    entry = search_counterexample(p, field, SearchMode(config.mode))
    if entry is None:
        return {"p": p, "q": field.order, "field": f"GF({field.order})",
                "found": False}
    return {**entry.to_dict(), "found": True}


def _report_table(config: RunConfig) -> ty.Dict[str, ty.Any]:
    primes = parse_int_list(config.require("primes"), "--primes")
    entries = minimal_table(primes, config.q_max, SearchMode(config.mode))
    return {str(p): [e.field_name for e in entries if e.p == p]
            for p in primes}


def _report_chebotarev(config: RunConfig) -> ty.Dict[str, ty.Any]:
    return chebotarev_verify(config.require("prime"), config.max_minor,
                             config.jobs).to_dict()


def _vector_summary(v: ModVector) -> ty.Dict[str, ty.Any]:
    return {"n": v.n,
            "t": v.t,
            "d": generated_submodule(v).dim,
            "vector": v.to_literal()}


def _report_construct(config: RunConfig) -> ty.Dict[str, ty.Any]:
    kind = config.require("construction")
    if kind == "affine":
        field = config.finite_field()
        unit = None
        if config.unit is not None:
            unit = _parse_coefficient(config.unit, field)
        group, v = affine_construction(field, unit)
        return {"construction": kind, **_vector_summary(v),
                "primitive": group.is_primitive()}

    group = load_group(config.require("group"))
    field = parse_field(config.require("field"))
    if kind == "block":
        block = parse_int_list(config.require("block"), "--block")
        v = block_vector(group, block, None, field)
        return {"construction": kind, **_vector_summary(v)}
    if kind == "orbit":
        subgroup = load_group(config.require("subgroup"))
        if subgroup.n != group.n:
            raise MalformedLiteralError(f"subgroup acts on {subgroup.n} "
                                        f"points, group on {group.n}")
        v, report = orbit_sum_vector(group, config.point,
                                     subgroup.group_elements(), field)
        return {"construction": kind, **_vector_summary(v),
                "index": report.index,
                "conclusions": dict(sorted(report.conclusions.items()))}
    if kind == "lemma-f":
        v = parse_vector(config.require("vector"), group, field)
        w = small_support_vector(generated_submodule(v))
        return {"construction": kind, **_vector_summary(w)}
    raise ValueError(f"unknown construction {kind!r}")


def _report_fourier(config: RunConfig) -> ty.Dict[str, ty.Any]:
    group = load_group(config.require("group"))
    field = parse_field(config.field or "Q")
    v = parse_vector(config.require("vector"), group, field)
    support = fourier_support(v)
    d = generated_submodule(v).dim
    if support != d:
        raise InvariantViolationError(f"Fourier support {support} differs "
                                      f"from d = {d}")
    return {"n": v.n, "t": v.t, "d": d, "fourier_support": support}


def _report_criterion(config: RunConfig) -> ty.Dict[str, ty.Any]:
    field = parse_field(config.require("field"))
    f = parse_poly(config.require("poly"), field)
    return gcd_criterion(f, config.require("prime"),
                         cross_check=config.cross_check).to_dict()


def _report_exhaustive(config: RunConfig) -> ty.Dict[str, ty.Any]:
    return exhaustive_char_p(config.require("prime"), jobs=config.jobs,
                             samples=config.samples,
                             seed=config.seed).to_dict()


def _report_refute(config: RunConfig) -> ty.Dict[str, ty.Any]:
    field = config.finite_field()
    f = parse_poly(config.require("poly"), field)
    return chebotarev_refute_mod_q(config.require("prime"), field,
                                   f).to_dict()


def _report_factor(config: RunConfig) -> ty.Dict[str, ty.Any]:
    p = config.require("prime")
    field = config.finite_field()
    factors = factor_cyclic(p, field)
    return {"p": p,
            "field": str(field),
            "factors": [h.to_literal() for h in factors],
            "rendered": [str(h) for h in factors]}


_DISPATCH: ty.Dict[str, ty.Callable[[RunConfig], ty.Dict[str, ty.Any]]] = {
    "verify": _report_verify,
    "search": _report_search,
    "table": _report_table,
    "chebotarev": _report_chebotarev,
    "construct": _report_construct,
    "fourier": _report_fourier,
    "criterion": _report_criterion,
    "exhaustive": _report_exhaustive,
    "refute": _report_refute,
    "factor": _report_factor,
}


def _scalar(value: ty.Any) -> str:
    if isinstance(value, (dict, list)):
        return json.dumps(value)
    if value is None:
        return ""
    return str(value)


def render(report: ty.Dict[str, ty.Any], output_format: str,
           subcommand: str) -> str:
    """Renders a report as JSON, CSV or aligned text"""
    if output_format == "json":
        return json.dumps(report, indent=2) + "\n"
    if output_format == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        if subcommand == "table":
            writer.writerow(["p", "fields"])
            for p, fields in report.items():
                writer.writerow([p, " ".join(fields)])
        else:
            writer.writerow(list(report))
            writer.writerow([_scalar(v) for v in report.values()])
        return buffer.getvalue()
    width = max((len(k) for k in report), default=0)
    return "".join(f"{k:<{width}}  {_scalar(v)}\n" for k, v in report.items())


def run_cli(config: RunConfig,
            stream: ty.Optional[ty.TextIO] = None) -> int:
    """
    Runs one subcommand and writes its report to <stream>.

    Parameters
    ----------
    config : RunConfig
        parsed invocation
    stream : TextIO, optional
        output stream, standard output by default

    Returns
    -------
    status : int
        0 on success, 1 if a computed instance contradicts a proven
        result, 2 on invalid input

    """
    stream = sys.stdout if stream is None else stream
    try:
        report = _DISPATCH[config.subcommand](config)
    except InvariantViolationError as error:
        logger.error("invariant violated: %s", error)
        print(f"permod: invariant violated: {error}", file=sys.stderr)
        return EXIT_INVARIANT_VIOLATED
    except (ValueError, TypeError, RuntimeError, OSError) as error:
        logger.debug("input error", exc_info=True)
        print(f"permod: error: {error}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    stream.write(render(report, config.output_format, config.subcommand))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="permod",
        description="Support and dimension of vectors in permutation "
                    "modules: inequality checks, equality constructions "
                    "and the prime-characteristic counterexample search.")
    parser.add_argument("-v", "--verbose", action="count", default=0,
                        help="increase log verbosity (-v INFO, -vv DEBUG)")
    parser.add_argument("--format", dest="output_format", choices=FORMATS,
                        default="json", help="report format")
    subparsers = parser.add_subparsers(dest="subcommand", required=True)

    def add(name: str, help_text: str) -> argparse.ArgumentParser:
        return subparsers.add_parser(name, help=help_text)

    def field_option(sub: argparse.ArgumentParser) -> None:
        sub.add_argument("--field", help="p, p^k or Q")

    def prime_option(sub: argparse.ArgumentParser) -> None:
        sub.add_argument("--prime", type=int, help="prime p")

    def jobs_option(sub: argparse.ArgumentParser) -> None:
        sub.add_argument("--jobs", type=int, default=1,
                         help="number of worker processes")

    def mode_option(sub: argparse.ArgumentParser) -> None:
        sub.add_argument("--mode", choices=[m.value for m in SearchMode],
                         default=SearchMode.DIVISORS_ONLY.value)

    sub = add("verify", "check td >= n and (t+1)d >= 2n for a vector")
    sub.add_argument("--group", help="group file")
    field_option(sub)
    sub.add_argument("--vector", help="comma-separated coefficients")

    sub = add("search", "search a counterexample over one field")
    prime_option(sub)
    field_option(sub)
    mode_option(sub)

    sub = add("table", "minimal fields with a counterexample")
    sub.add_argument("--primes", help="comma-separated primes")
    sub.add_argument("--q-max", dest="q_max", type=int, default=16)
    mode_option(sub)

    sub = add("chebotarev", "check all minors of the Fourier matrix")
    prime_option(sub)
    sub.add_argument("--max-minor", dest="max_minor", type=int)
    jobs_option(sub)

    sub = add("construct", "build an equality vector")
    sub.add_argument("construction", choices=CONSTRUCTIONS)
    sub.add_argument("--group", help="group file")
    field_option(sub)
    sub.add_argument("--vector", help="generator of the submodule "
                                      "(lemma-f)")
    sub.add_argument("--block", help="comma-separated points (block)")
    sub.add_argument("--point", type=int, default=0, help="point (orbit)")
    sub.add_argument("--subgroup", help="group file of K (orbit)")
    sub.add_argument("--unit", help="generator of the multiplier group "
                                    "(affine)")

    sub = add("fourier", "compare Fourier support with d(v)")
    sub.add_argument("--group", help="group file of a cyclic group")
    field_option(sub)
    sub.add_argument("--vector", help="comma-separated coefficients")

    sub = add("criterion", "gcd criterion for v = f(z)")
    prime_option(sub)
    field_option(sub)
    sub.add_argument("--poly", help="comma-separated coefficients")
    sub.add_argument("--cross-check", dest="cross_check",
                     action="store_true",
                     help="also compute d(v) by submodule closure")

    sub = add("exhaustive", "sweep GF(p)[Z_p] in characteristic p")
    prime_option(sub)
    jobs_option(sub)
    sub.add_argument("--samples", type=int, default=10_000)
    sub.add_argument("--seed", type=int, default=0)

    sub = add("refute", "singular minor in characteristic q")
    prime_option(sub)
    field_option(sub)
    sub.add_argument("--poly", help="comma-separated coefficients")

    sub = add("factor", "factor X^p - 1 over a finite field")
    prime_option(sub)
    field_option(sub)
    return parser


def configure_logging(verbosity: int) -> None:
    level = {0: logging.WARNING, 1: logging.INFO}.get(verbosity,
                                                      logging.DEBUG)
    logging.basicConfig(level=level,
                        format="%(asctime)s %(name)s %(levelname)s "
                               "%(message)s")


def main(argv: ty.Optional[ty.Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    configure_logging(args.verbose)
    return run_cli(RunConfig.from_namespace(args))


if __name__ == "__main__":
    sys.exit(main())
