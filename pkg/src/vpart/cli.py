"""Batch command-line front end.

Reads one JSON problem document (file argument or stdin), runs a single
command, and writes deterministic plain text (or ``--json`` structured
output) to stdout.  Diagnostics go to stderr.  Exit codes: 0 for success or
a verified identity, 1 for a violated identity or a non-pointed step set,
2 for unusable input.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass
from fractions import Fraction

from .cone import ConeCertificate, NotPointedError, certify_pointed
from .core import (
    ConstantOne,
    GeometricWeights,
    LatticePathCount,
    LatticeVector,
    MultinomialMonomial,
    StepMatrix,
    TableWeight,
    WeightFunction,
)
from .enumeration import generalized_vp, generalized_vp_table, vector_partition
from .identities import (
    RecurrencePreconditionError,
    VerificationReport,
    partition_series,
    verify_basic_recurrence,
    verify_cb_1d,
    verify_cb_multidim,
    verify_cb_vector_partition,
    verify_partition_recurrence,
    verify_path_series,
    verify_summation_identity,
)
from .series import geometric_inverse

VERIFY_KINDS = ("thm1", "rec", "prop1", "prop2", "prop3", "cb", "cb1d")

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


class ProblemError(ValueError):
    """Unusable problem document; the message names the offending field."""


@dataclass
class ProblemSpec:
    """Parsed problem document; fields are optional until a command needs them."""

    matrix: StepMatrix | None = None
    weight: WeightFunction | None = None
    coeffs: tuple[Fraction, ...] | None = None
    bound: int | None = None
    target: LatticeVector | None = None
    nvars: int | None = None


def _parse_rational(value, where: str) -> Fraction:
    if isinstance(value, bool):
        raise ProblemError(f"{where}: expected a rational, got a boolean")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        if not _RATIONAL_RE.match(value):
            raise ProblemError(f"{where}: expected 'p/q' or an integer string, got {value!r}")
        num, _, den = value.partition("/")
        if den and int(den) == 0:
            raise ProblemError(f"{where}: zero denominator")
        return Fraction(int(num), int(den)) if den else Fraction(int(num))
    raise ProblemError(f"{where}: expected a rational as integer or 'p/q' string, got {value!r}")


def _parse_int(value, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ProblemError(f"{where}: expected an integer, got {value!r}")
    return value


def _parse_int_list(value, where: str) -> list[int]:
    if not isinstance(value, list) or not value:
        raise ProblemError(f"{where}: expected a nonempty array of integers")
    return [_parse_int(v, f"{where}[{i}]") for i, v in enumerate(value)]


def _parse_matrix(value, where: str) -> StepMatrix:
    if not isinstance(value, list) or not value:
        raise ProblemError(f"{where}: expected a nonempty row-major integer array")
    rows = []
    for i, row in enumerate(value):
        rows.append(_parse_int_list(row, f"{where}[{i}]"))
    if any(len(r) != len(rows[0]) for r in rows):
        raise ProblemError(f"{where}: rows have unequal lengths")
    try:
        return StepMatrix.from_rows(rows)
    except ValueError as err:
        raise ProblemError(f"{where}: {err}") from err


def _parse_weight(value, where: str) -> WeightFunction:
    if not isinstance(value, dict) or "kind" not in value:
        raise ProblemError(f"{where}: expected an object with a 'kind' tag")
    kind = value["kind"]
    try:
        if kind == "one":
            return ConstantOne()
        if kind == "geometric":
            ratios = value.get("q")
            if not isinstance(ratios, list) or not ratios:
                raise ProblemError(f"{where}.q: expected a nonempty array of rationals")
            return GeometricWeights(
                [_parse_rational(v, f"{where}.q[{i}]") for i, v in enumerate(ratios)]
            )
        if kind == "monomial":
            coeffs = value.get("c")
            if not isinstance(coeffs, list) or not coeffs:
                raise ProblemError(f"{where}.c: expected a nonempty array of rationals")
            axis = _parse_int(value.get("j"), f"{where}.j")
            return MultinomialMonomial(
                [_parse_rational(v, f"{where}.c[{i}]") for i, v in enumerate(coeffs)], axis
            )
        if kind == "paths":
            return LatticePathCount()
        if kind == "table":
            box = _parse_int_list(value.get("box"), f"{where}.box")
            values = value.get("values")
            if not isinstance(values, list):
                raise ProblemError(f"{where}.values: expected an array of rationals")
            return TableWeight(
                box, [_parse_rational(v, f"{where}.values[{i}]") for i, v in enumerate(values)]
            )
    except ValueError as err:
        if isinstance(err, ProblemError):
            raise
        raise ProblemError(f"{where}: {err}") from err
    raise ProblemError(f"{where}.kind: unknown weight kind {kind!r}")


def parse_problem(document) -> ProblemSpec:
    """Validate a decoded JSON document into exact library objects."""
    if not isinstance(document, dict):
        raise ProblemError("top level: expected a JSON object")
    known = {"matrix", "weight", "c", "bound", "target", "nvars"}
    for key in document:
        if key not in known:
            raise ProblemError(f"unknown field {key!r}")
    spec = ProblemSpec()
    if "matrix" in document:
        spec.matrix = _parse_matrix(document["matrix"], "matrix")
    if "weight" in document:
        spec.weight = _parse_weight(document["weight"], "weight")
    if "c" in document:
        raw = document["c"]
        if not isinstance(raw, list) or not raw:
            raise ProblemError("c: expected a nonempty array of rationals")
        spec.coeffs = tuple(_parse_rational(v, f"c[{i}]") for i, v in enumerate(raw))
    if "bound" in document:
        spec.bound = _parse_int(document["bound"], "bound")
        if spec.bound < 0:
            raise ProblemError("bound: must be nonnegative")
    if "target" in document:
        spec.target = LatticeVector(_parse_int_list(document["target"], "target"))
    if "nvars" in document:
        spec.nvars = _parse_int(document["nvars"], "nvars")
        if spec.nvars < 1:
            raise ProblemError("nvars: must be positive")
    return spec


def _require(spec: ProblemSpec, field: str):
    value = getattr(spec, "coeffs" if field == "c" else field)
    if value is None:
        raise ProblemError(f"missing required field {field!r}")
    return value


def _certified(spec: ProblemSpec) -> tuple[StepMatrix, ConeCertificate]:
    matrix = _require(spec, "matrix")
    return matrix, certify_pointed(matrix)


def _print_vector(v: LatticeVector) -> str:
    return "(" + ", ".join(str(c) for c in v.coords) + ")"


def _series_json(series) -> dict:
    return {
        "terms": [
            {"exponent": list(e.coords), "coefficient": f"{v.numerator}/{v.denominator}"}
            for e, v in series.terms()
        ]
    }


def cmd_pointed(spec: ProblemSpec, as_json: bool) -> int:
    matrix = _require(spec, "matrix")
    try:
        cert = certify_pointed(matrix)
    except NotPointedError as err:
        if as_json:
            print(json.dumps({"pointed": False, "witness": list(err.witness.coords)}))
        else:
            print(f"not pointed: witness combination {_print_vector(err.witness)}")
        return 1
    if as_json:
        print(
            json.dumps(
                {
                    "pointed": True,
                    "ell": list(cert.functional.coords),
                    "step_degrees": list(cert.step_degrees),
                }
            )
        )
    else:
        print(f"ell = {_print_vector(cert.functional)}")
    return 0


def cmd_count(spec: ProblemSpec, as_json: bool) -> int:
    matrix, cert = _certified(spec)
    target = _require(spec, "target")
    if spec.weight is None:
        value = Fraction(vector_partition(matrix, cert, target))
    else:
        value = generalized_vp(matrix, cert, target, spec.weight)
    print(json.dumps({"value": str(value)}) if as_json else str(value))
    return 0


def cmd_series(spec: ProblemSpec, as_json: bool) -> int:
    matrix, cert = _certified(spec)
    bound = _require(spec, "bound")
    if spec.weight is None:
        series = geometric_inverse(matrix, cert, bound)
    else:
        series = partition_series(matrix, cert, spec.weight, bound)
    if as_json:
        print(json.dumps(_series_json(series)))
    else:
        text = series.render()
        if text:
            print(text)
    return 0


def cmd_paths(spec: ProblemSpec, as_json: bool) -> int:
    matrix, cert = _certified(spec)
    bound = _require(spec, "bound")
    weight = spec.weight if spec.weight is not None else LatticePathCount()
    table = generalized_vp_table(matrix, cert, weight, bound)
    if as_json:
        entries = [
            {"target": list(t.coords), "value": f"{v.numerator}/{v.denominator}"}
            for t, v in table.items()
        ]
        print(json.dumps({"entries": entries}))
    else:
        for t, v in table.items():
            key = "(" + ",".join(str(c) for c in t.coords) + ")"
            print(f"{key} : {v.numerator}/{v.denominator}")
    return 0


def _run_verifier(kind: str, spec: ProblemSpec) -> VerificationReport:
    if kind == "thm1":
        matrix, cert = _certified(spec)
        return verify_summation_identity(
            matrix, cert, _require(spec, "weight"), _require(spec, "c"), _require(spec, "bound")
        )
    if kind == "rec":
        weight = _require(spec, "weight")
        nvars = spec.nvars if spec.nvars is not None else weight.arity
        if nvars is None and spec.matrix is not None:
            nvars = spec.matrix.nsteps
        if nvars is None:
            raise ProblemError("missing required field 'nvars' (weight has no fixed arity)")
        return verify_basic_recurrence(weight, nvars, _require(spec, "bound"))
    if kind == "prop1":
        matrix, cert = _certified(spec)
        return verify_partition_recurrence(
            matrix, cert, _require(spec, "weight"), _require(spec, "bound")
        )
    if kind == "prop2":
        matrix, cert = _certified(spec)
        return verify_path_series(matrix, cert, _require(spec, "bound"))
    if kind == "prop3":
        matrix, cert = _certified(spec)
        return verify_cb_vector_partition(
            matrix, cert, _require(spec, "c"), _require(spec, "target")
        )
    if kind == "cb":
        target = _require(spec, "target")
        return verify_cb_multidim(_require(spec, "c"), target)
    if kind == "cb1d":
        coeffs = _require(spec, "c")
        target = _require(spec, "target")
        if len(coeffs) != 2 or target.dim != 2:
            raise ProblemError("cb1d needs exactly two coefficients and a two-part target")
        return verify_cb_1d(coeffs[0], coeffs[1], target.coords[0], target.coords[1])
    raise ProblemError(f"unknown verifier {kind!r}")


def cmd_verify(kind: str, spec: ProblemSpec, as_json: bool) -> int:
    try:
        report = _run_verifier(kind, spec)
    except (ValueError, RecurrencePreconditionError) as err:
        if isinstance(err, ProblemError):
            raise
        print(f"error: {err}", file=sys.stderr)
        return 2
    print(json.dumps(report.to_json_dict()) if as_json else report.to_text())
    return 0 if report.holds else 1


def _load_document(path: str):
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, "r", encoding="utf-8") as handle:
                text = handle.read()
    except OSError as err:
        raise ProblemError(f"cannot read {path!r}: {err}") from err
    try:
        return json.loads(text)
    except json.JSONDecodeError as err:
        raise ProblemError(f"parse error at line {err.lineno} column {err.colno}: {err.msg}") from err


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="vpart",
        description="Exact vector partition counts, truncated generating series, "
        "and identity verification over pointed step sets.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_text in [
        ("pointed", "certify that the step columns span a pointed cone"),
        ("count", "count representations of the target, optionally weighted"),
        ("series", "print the truncated generating series over targets"),
        ("paths", "print the weighted count table over the cone slab"),
    ]:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("problem", nargs="?", default="-", help="JSON problem file ('-' for stdin)")
        p.add_argument("--json", action="store_true", help="structured JSON output")
    verify = sub.add_parser("verify", help="check one identity exactly; exit 0 iff it holds")
    verify.add_argument("which", choices=VERIFY_KINDS, help="identity to check")
    verify.add_argument("problem", nargs="?", default="-", help="JSON problem file ('-' for stdin)")
    verify.add_argument("--json", action="store_true", help="structured JSON output")

    try:
        args = parser.parse_args(argv)
    except SystemExit as err:
        # argparse exits 0 for --help and 2 for usage errors; keep both reachable
        # from direct main() calls in tests
        return int(err.code or 0)

    try:
        spec = parse_problem(_load_document(args.problem))
        if args.command == "pointed":
            return cmd_pointed(spec, args.json)
        if args.command == "count":
            return cmd_count(spec, args.json)
        if args.command == "series":
            return cmd_series(spec, args.json)
        if args.command == "paths":
            return cmd_paths(spec, args.json)
        return cmd_verify(args.which, spec, args.json)
    except ProblemError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except NotPointedError as err:
        print(f"error: {err}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
