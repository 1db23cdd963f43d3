"""Command-line front end: every computation as a reproducible command.

All numeric output is serialized as strings (decimal integers, "p/q"
rationals in lowest terms, coefficient arrays indexed by degree,
cyclotomic coordinate arrays tagged with their prime) so exact values
survive any JSON reader.  Identical invocations produce byte-identical
documents except for the timing fields.

Exit codes: 0 success, 1 bad input, 2 guardrail refusal, 3 verification
mismatch.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from time import perf_counter

from .counting import (
    DEFAULT_MAX_DEGREE,
    identity_check,
    necklace_polynomial,
    necklace_value,
    necklace_value_cyclo,
    poly_count_polynomial,
    poly_count_value,
    poly_count_value_cyclo,
)
from .digits import balanced_expansion, q_product_check
from .errors import InputError, ResourceError, VerificationError
from .euler import BaseField, euler_table
from .exact import CycloElem, RatPoly, is_prime
from .fq import DEFAULT_MAX_WORK, verify_grid

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_GUARDRAIL = 2
EXIT_MISMATCH = 3

ENV_MAX_DEGREE = "NECKPOLY_MAX_DEGREE"
ENV_MAX_WORK = "NECKPOLY_MAX_WORK"


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on bad flags; the CLI contract reserves 2 for guardrails."""

    def error(self, message):
        self.print_usage(sys.stderr)
        raise SystemExit(EXIT_INPUT)


def _fmt(value) -> str:
    """Exact string form of an int or Fraction."""
    return str(value)


def _poly_json(poly: RatPoly):
    return [_fmt(c) for c in poly.coeffs]


def _cyclo_json(elem: CycloElem):
    return {"prime": _fmt(elem.p), "coords": [_fmt(c) for c in elem.coords]}


def _resolve_cap(flag_value, env_name: str, default: int) -> int:
    """Guardrail precedence: explicit flag, then environment, then default."""
    if flag_value is not None:
        return flag_value
    env = os.environ.get(env_name)
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise InputError(f"{env_name} must be an integer, got {env!r}")
    return default


def _parse_eval_point(raw: str):
    """An integer, or 'zeta:p' for a primitive p-th root of unity."""
    if raw.startswith("zeta:"):
        try:
            p = int(raw.split(":", 1)[1])
        except ValueError:
            raise InputError(f"bad root-of-unity tag {raw!r}")
        if not is_prime(p):
            raise InputError(f"root-of-unity order must be prime, got {p}")
        return ("zeta", p)
    try:
        return int(raw)
    except ValueError:
        raise InputError(f"evaluation point must be an integer or zeta:p, got {raw!r}")


def _render_text(doc: dict) -> str:
    lines = [f"command: {doc['command']}"]
    for key, value in doc["parameters"].items():
        lines.append(f"{key}: {value}")
    lines.extend(_text_results(doc))
    lines.append(f"status: {doc['status']}")
    for key, value in doc["timings"].items():
        lines.append(f"time.{key}: {value}")
    return "\n".join(lines) + "\n"


def _text_results(doc: dict):
    results = doc["results"]
    out = []
    for key, value in results.items():
        if key == "rows":
            header = list(value[0].keys()) if value else []
            out.append("  ".join(header))
            for row in value:
                out.append("  ".join(str(row[h]) for h in header))
        elif isinstance(value, dict):
            inner = ", ".join(f"{k}={v}" for k, v in value.items())
            out.append(f"{key}: {inner}")
        elif isinstance(value, list):
            if value and isinstance(value[0], dict):
                rendered = "; ".join(
                    " ".join(f"{k}={v}" for k, v in item.items()) for item in value
                )
            else:
                rendered = ", ".join(str(v) for v in value)
            out.append(f"{key}: [{rendered}]")
        else:
            out.append(f"{key}: {value}")
    return out


def _render_csv(doc: dict) -> str:
    rows = doc["results"].get("rows")
    if rows is None:
        raise InputError(f"command {doc['command']} has no tabular output for csv")
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    header = list(rows[0].keys()) if rows else []
    writer.writerow(header)
    for row in rows:
        writer.writerow([row[h] for h in header])
    return buffer.getvalue()


def _emit(doc: dict, fmt: str) -> None:
    if fmt == "json":
        sys.stdout.write(json.dumps(doc, indent=2) + "\n")
    elif fmt == "csv":
        sys.stdout.write(_render_csv(doc))
    else:
        sys.stdout.write(_render_text(doc))


def _document(command: str, parameters: dict, results: dict, status: str, started: float) -> dict:
    return {
        "command": command,
        "parameters": {k: str(v) for k, v in parameters.items()},
        "results": results,
        "status": status,
        "timings": {"total_s": f"{perf_counter() - started:.6f}"},
    }


def _cmd_pcount(args) -> int:
    started = perf_counter()
    cap = _resolve_cap(args.max_degree, ENV_MAX_DEGREE, DEFAULT_MAX_DEGREE)
    params = {"d": args.d, "n": args.n}
    if args.at is None:
        poly = poly_count_polynomial(args.d, args.n, max_degree=cap)
        results = {"coefficients": _poly_json(poly)}
    else:
        point = _parse_eval_point(args.at)
        params["at"] = args.at
        if isinstance(point, tuple):
            results = {"value": _cyclo_json(poly_count_value_cyclo(args.d, args.n, point[1]))}
        else:
            results = {"value": _fmt(poly_count_value(args.d, args.n, point, max_degree=cap))}
    _emit(_document("pcount", params, results, "ok", started), args.format)
    return EXIT_OK


def _cmd_necklace(args) -> int:
    started = perf_counter()
    cap = _resolve_cap(args.max_degree, ENV_MAX_DEGREE, DEFAULT_MAX_DEGREE)
    params = {"d": args.d, "n": args.n}
    if args.at is None:
        poly = necklace_polynomial(args.d, args.n, max_degree=cap)
        results = {"coefficients": _poly_json(poly)}
    else:
        point = _parse_eval_point(args.at)
        params["at"] = args.at
        if isinstance(point, tuple):
            results = {"value": _cyclo_json(necklace_value_cyclo(args.d, args.n, point[1]))}
        else:
            results = {"value": _fmt(necklace_value(args.d, args.n, point, max_degree=cap))}
    _emit(_document("necklace", params, results, "ok", started), args.format)
    return EXIT_OK


def _cmd_balanced(args) -> int:
    started = perf_counter()
    expansion = balanced_expansion(args.n, args.base)
    if expansion is None:
        results = {"expansion": "none"}
    else:
        results = {
            "expansion": str(expansion),
            "terms": [
                {"sign": "+" if expansion.sign(i) > 0 else "-", "exponent": str(e)}
                for i, e in enumerate(expansion.exponents)
            ],
        }
    doc = _document("balanced", {"n": args.n, "base": args.base}, results, "ok", started)
    _emit(doc, args.format)
    return EXIT_OK


def _cmd_euler_table(args) -> int:
    started = perf_counter()
    field = BaseField.REAL if args.field == "real" else BaseField.COMPLEX
    table = euler_table(args.n, args.dmax, field)
    rows = [{"d": str(d), "chi_c": _fmt(table[d])} for d in range(1, args.dmax + 1)]
    results = {"method": table.method, "rows": rows}
    doc = _document(
        "euler-table", {"n": args.n, "dmax": args.dmax, "field": args.field}, results, "ok", started
    )
    _emit(doc, args.format)
    return EXIT_OK


def _cmd_verify_fq(args) -> int:
    started = perf_counter()
    cap = _resolve_cap(args.max_work, ENV_MAX_WORK, DEFAULT_MAX_WORK)
    grid = [(d, args.n, args.q) for d in range(1, args.dmax + 1)]
    report = verify_grid(grid, max_work=cap, workers=args.workers)
    rows = [
        {
            "d": str(cell.d),
            "n": str(cell.n),
            "q": str(cell.q),
            "enumerated": str(cell.enumerated),
            "predicted": str(cell.predicted),
            "irreducible": str(cell.irreducible),
            "expected": str(cell.expected),
            "cell": "pass" if cell.passed else "fail",
            "seconds": f"{cell.seconds:.6f}",
        }
        for cell in report.cells
    ]
    status = "pass" if report.passed else "fail"
    doc = _document(
        "verify-fq",
        {"q": args.q, "n": args.n, "dmax": args.dmax, "workers": args.workers},
        {"rows": rows},
        status,
        started,
    )
    _emit(doc, args.format)
    return EXIT_OK if report.passed else EXIT_MISMATCH


def _cmd_identity_check(args) -> int:
    started = perf_counter()
    cap = _resolve_cap(args.max_degree, ENV_MAX_DEGREE, DEFAULT_MAX_DEGREE)
    report = identity_check(args.n, args.dmax, max_degree=cap)
    results = {"checked_up_to": str(args.dmax), "result": "pass" if report.passed else "fail"}
    if not report.passed:
        degree, lhs, rhs = report.first_mismatch
        results["first_mismatch"] = {
            "degree": str(degree),
            "series": [_fmt(c) for c in lhs.coeffs],
            "product": [_fmt(c) for c in rhs.coeffs],
        }
    status = "pass" if report.passed else "fail"
    doc = _document("identity-check", {"n": args.n, "dmax": args.dmax}, results, status, started)
    _emit(doc, args.format)
    return EXIT_OK if report.passed else EXIT_MISMATCH


def _cmd_qproduct_check(args) -> int:
    started = perf_counter()
    report = q_product_check(args.n, args.p, args.dmax)
    results = {"checked_up_to": str(args.dmax), "result": "pass" if report.passed else "fail"}
    if not report.passed:
        degree, lhs, rhs = report.first_mismatch
        results["first_mismatch"] = {
            "degree": str(degree),
            "direct": _fmt(lhs),
            "product": _fmt(rhs),
        }
    status = "pass" if report.passed else "fail"
    doc = _document(
        "qproduct-check", {"n": args.n, "p": args.p, "dmax": args.dmax}, results, status, started
    )
    _emit(doc, args.format)
    return EXIT_OK if report.passed else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="neckpoly",
        description="Exact necklace-polynomial computations, evaluations, and verifications.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add_format(p, tabular=False):
        choices = ["text", "json", "csv"] if tabular else ["text", "json"]
        p.add_argument("--format", choices=choices, default="text")

    p = sub.add_parser("pcount", help="monic-count polynomial P or its value")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--at", help="integer, or zeta:p for a prime-order root of unity")
    p.add_argument("--max-degree", type=int, default=None)
    add_format(p)
    p.set_defaults(run=_cmd_pcount)

    p = sub.add_parser("necklace", help="irreducible-count polynomial M or its value")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--at", help="integer, or zeta:p for a prime-order root of unity")
    p.add_argument("--max-degree", type=int, default=None)
    add_format(p)
    p.set_defaults(run=_cmd_necklace)

    p = sub.add_parser("balanced", help="balanced base-b expansion, or none")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--base", type=int, required=True)
    add_format(p)
    p.set_defaults(run=_cmd_balanced)

    p = sub.add_parser("euler-table", help="chi_c of the irreducible loci, both routes")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--dmax", type=int, required=True)
    p.add_argument("--field", choices=["real", "complex"], required=True)
    add_format(p, tabular=True)
    p.set_defaults(run=_cmd_euler_table)

    p = sub.add_parser("verify-fq", help="enumeration oracle vs closed-form counts")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--dmax", type=int, required=True)
    p.add_argument("--max-work", type=int, default=None)
    p.add_argument("--workers", type=int, default=1)
    add_format(p, tabular=True)
    p.set_defaults(run=_cmd_verify_fq)

    p = sub.add_parser("identity-check", help="count series vs its Euler product in Q[x]")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--dmax", type=int, required=True)
    p.add_argument("--max-degree", type=int, default=None)
    add_format(p)
    p.set_defaults(run=_cmd_identity_check)

    p = sub.add_parser("qproduct-check", help="(1-t)Q(t) vs balanced-exponent product")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--dmax", type=int, required=True)
    add_format(p)
    p.set_defaults(run=_cmd_qproduct_check)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.run(args)
    except SystemExit as exc:  # argparse error or --help
        return exc.code if exc.code is not None else EXIT_OK
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ResourceError as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_GUARDRAIL
    except VerificationError as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return EXIT_MISMATCH


if __name__ == "__main__":
    sys.exit(main())
