"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 internal
disagreement between computation methods.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import matroid_kl as kl
from .graded import GradedSchurVector, IntPolynomial, dimension_poly
from .verify import SUITES, fan_out, run_suites

POLYS = ("P", "Q", "H", "ordinary-KL")
METHODS = ("closed", "recursive", "skew", "oracle", "all")
FORMATS = ("text", "json", "latex")

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_DISAGREE = 0, 1, 2, 3


class UsageError(Exception):
    pass


class Disagreement(Exception):
    pass


@dataclass(frozen=True)
class Request:
    command: str
    matroid: kl.MatroidId
    poly: str = "P"
    method: str = "closed"
    format: str = "text"

    def __post_init__(self):
        if self.poly not in POLYS:
            raise UsageError(f"unknown polynomial {self.poly!r}")
        if self.method not in METHODS:
            raise UsageError(f"unknown method {self.method!r}")
        if self.format not in FORMATS:
            raise UsageError(f"unknown format {self.format!r}")
        if self.method == "skew" and (self.poly != "P" or self.matroid.m < 1):
            raise UsageError("--method skew requires --poly P and m >= 1")
        if self.method == "oracle" and self.poly != "ordinary-KL":
            raise UsageError("--method oracle requires --poly ordinary-KL")
        if self.method == "recursive" and self.poly == "H":
            raise UsageError("H has no recursive method")
        if self.matroid.d < 1 and self.poly in ("H", "ordinary-KL"):
            raise UsageError(f"{self.poly} needs rank >= 1")
        if self.matroid.d < 1 and self.matroid.family == "uniform":
            raise UsageError("uniform matroids need d >= 1")


def _methods_for(req: Request) -> list[str]:
    if req.method != "all":
        return [req.method]
    m = req.matroid.m
    if req.poly == "P":
        return ["closed", "recursive"] + (["skew"] if m >= 1 else [])
    if req.poly == "Q":
        return ["closed", "recursive"]
    if req.poly == "H":
        return ["closed", "plethysm"] if m == 0 else ["closed"]
    return ["closed", "recursive", "oracle"] + (["skew-syt"] if m >= 1 else [])


def evaluate(matroid: kl.MatroidId, poly: str, method: str) -> GradedSchurVector | IntPolynomial:
    m, d = matroid.m, matroid.d
    boolean = matroid.family == "boolean"
    if poly == "P":
        if method == "closed":
            return kl.p_boolean(d) if boolean else kl.p_uniform_closed(m, d)
        if method == "recursive":
            return kl.p_boolean_recursive(d) if boolean else kl.p_uniform_recursive(m, d)
        if method == "skew":
            return kl.p_uniform_skew(m, d)
    elif poly == "Q":
        if method == "closed":
            return kl.q_boolean(d) if boolean else kl.q_uniform_closed(m, d)
        if method == "recursive":
            return kl.q_boolean_recursive(d) if boolean else kl.q_uniform_recursive(m, d)
    elif poly == "H":
        if method == "closed":
            return kl.char_boolean(d) if boolean else kl.char_uniform(m, d)
        if method == "plethysm":
            from .graded import Alphabet, h_plethysm

            return h_plethysm(d, Alphabet.T_MINUS_ONE_X)
    elif poly == "ordinary-KL":
        if method == "closed":
            return kl.ordinary_kl(m, d)
        if method == "recursive":
            return dimension_poly(kl.p_uniform_recursive(m, d))
        if method == "oracle":
            return kl.ordinary_kl_oracle(m, d)
        if method == "skew-syt":
            return kl.ordinary_kl_skew(m, d)
    raise UsageError(f"method {method!r} does not apply to {poly}")


def compute(req: Request):
    """Value of the request, checking agreement when several methods are asked for."""
    methods = _methods_for(req)
    values = [evaluate(req.matroid, req.poly, meth) for meth in methods]
    for meth, v in zip(methods[1:], values[1:]):
        if v != values[0]:
            raise Disagreement(
                f"{req.poly}[{req.matroid.label()}]: {methods[0]} gives {values[0].to_text()}, "
                f"{meth} gives {v.to_text()}"
            )
    return values[0], methods


# rendering ---------------------------------------------------------------------

def _latex_name(poly: str, matroid: kl.MatroidId) -> str:
    sub = f"B_{{{matroid.d}}}" if matroid.family == "boolean" else f"U_{{{matroid.m},{matroid.d}}}"
    if poly == "ordinary-KL":
        return f"P_{{{sub}}}(t)"
    return f"{poly}_{{{sub}}}^{{S_{{{matroid.ground_size}}}}}(t)"


def result_json(matroid: kl.MatroidId, poly: str, value) -> dict:
    return {"matroid": matroid.to_json(), "poly": poly, "value": value.to_json()}


def render_compute(req: Request, value, methods: list[str]) -> str:
    agreed = req.method == "all"
    if req.format == "json":
        obj = result_json(req.matroid, req.poly, value)
        if agreed:
            obj["methods"] = methods
            obj["agreement"] = "ok"
        return json.dumps(obj, indent=2)
    if req.format == "latex":
        body = value.to_latex()
        line = f"${_latex_name(req.poly, req.matroid)} = {body}$"
        return line + ("\n% agreement: ok" if agreed else "")
    line = f"{req.poly}[{req.matroid.label()}] = {value.to_text()}"
    return line + ("  agreement: ok" if agreed else "")


def render_table(rows: list[tuple[kl.MatroidId, object]], poly: str, fmt: str) -> str:
    if fmt == "json":
        return json.dumps([result_json(mat, poly, v) for mat, v in rows], indent=2)
    if fmt == "latex":
        head = "P_{U_{m,d}}(t)" if poly == "ordinary-KL" else f"{poly}_{{U_{{m,d}}}}^{{S_{{m+d}}}}(t)"
        lines = [
            r"\begin{tabular}{ccl}",
            rf"$m$ & $d$ & ${head}$ \\",
            r"\hline",
        ]
        for mat, v in rows:
            lines.append(rf"{mat.m} & {mat.d} & ${v.to_latex()}$ \\")
        lines.append(r"\end{tabular}")
        return "\n".join(lines)
    return "\n".join(f"{poly}[{mat.label()}] = {v.to_text()}" for mat, v in rows)


# commands ------------------------------------------------------------------------

def _matroid_from_args(args) -> kl.MatroidId:
    if args.family == "boolean":
        if args.n is None:
            raise UsageError("--family boolean needs -n")
        if args.m is not None or args.d is not None:
            raise UsageError("--family boolean takes -n, not -m/-d")
        if args.n < 0:
            raise UsageError("n must be nonnegative")
        return kl.MatroidId.boolean(args.n)
    if args.n is not None:
        raise UsageError("--family uniform takes -m and -d, not -n")
    if args.m is None or args.d is None:
        raise UsageError("--family uniform needs -m and -d")
    if args.m < 0 or args.d < 1:
        raise UsageError("need m >= 0 and d >= 1")
    return kl.MatroidId.uniform(args.m, args.d)


def run_compute(args) -> int:
    req = Request("compute", _matroid_from_args(args), args.poly, args.method, args.format)
    try:
        value, methods = compute(req)
    except Disagreement as exc:
        print(f"disagreement: {exc}", file=sys.stderr)
        return EXIT_DISAGREE
    except kl.InternalInconsistency as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return EXIT_DISAGREE
    print(render_compute(req, value, methods))
    return EXIT_OK


def run_table(args) -> int:
    if args.max_d < 1 or args.max_m < 0:
        raise UsageError("empty range: need --max-m >= 0 and --max-d >= 1")
    min_m = 1 if args.method == "skew" else 0
    if args.max_m < min_m:
        raise UsageError("empty range: --method skew needs --max-m >= 1")
    cells = [(m, d) for m in range(min_m, args.max_m + 1) for d in range(1, args.max_d + 1)]
    reqs = [
        Request("table", kl.MatroidId.uniform(m, d), args.poly, args.method, args.format)
        for m, d in cells
    ]
    try:
        results = fan_out(compute, reqs)
    except (Disagreement, kl.InternalInconsistency) as exc:
        print(f"disagreement: {exc}", file=sys.stderr)
        return EXIT_DISAGREE
    rows = [(r.matroid, value) for r, (value, _) in zip(reqs, results)]
    print(render_table(rows, args.poly, args.format))
    return EXIT_OK


def _parse_suites(raw: str) -> list[str]:
    names = [s.strip() for s in raw.split(",") if s.strip()]
    if not names:
        raise UsageError("no suites given")
    if "all" in names:
        return list(SUITES)
    unknown = [n for n in names if n not in SUITES]
    if unknown:
        raise UsageError(f"unknown suites {unknown}; choose from {', '.join(SUITES)} or all")
    return names


def run_verify(args) -> int:
    if args.max_m < 1 or args.max_d < 1:
        raise UsageError("--max-m and --max-d must be >= 1")
    suites = _parse_suites(args.suites)
    failed = False
    for res in run_suites(args.max_m, args.max_d, suites):
        if res.ok:
            print(f"PASS {res.name} ({res.checks} checks)")
        else:
            failed = True
            print(f"FAIL {res.name} ({len(res.failures)} of {res.checks} checks failed)")
            for line in res.failures[:5]:
                print(f"  counterexample: {line}")
    return EXIT_FAIL if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="klm",
        description="Equivariant Kazhdan-Lusztig polynomials of Boolean and uniform matroids.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", help="compute one polynomial")
    c.add_argument("--family", choices=("boolean", "uniform"), default="uniform")
    c.add_argument("-n", type=int)
    c.add_argument("-m", type=int)
    c.add_argument("-d", type=int)
    c.add_argument("--poly", choices=POLYS, default="P")
    c.add_argument("--method", choices=METHODS, default="closed")
    c.add_argument("--format", choices=FORMATS, default="text")
    c.set_defaults(func=run_compute)

    t = sub.add_parser("table", help="tabulate a polynomial over 0<=m<=max-m, 1<=d<=max-d")
    t.add_argument("--max-m", type=int, default=3)
    t.add_argument("--max-d", type=int, default=6)
    t.add_argument("--poly", choices=POLYS, default="P")
    t.add_argument("--method", choices=METHODS, default="closed")
    t.add_argument("--format", choices=FORMATS, default="text")
    t.set_defaults(func=run_table)

    v = sub.add_parser("verify", help="run the verification suites")
    v.add_argument("--max-m", type=int, default=3)
    v.add_argument("--max-d", type=int, default=6)
    v.add_argument(
        "--suites", default="all", help=f"comma-separated subset of: all, {', '.join(SUITES)}"
    )
    v.set_defaults(func=run_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"klm: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
