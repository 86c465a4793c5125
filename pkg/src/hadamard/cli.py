"""Command-line front end: replay session scripts and run one-shot operations.

    hadamard run session.txt [--format text|structured] [--budget N] [--order lex|grevlex]
    hadamard product --ring "x,y,z,w" "x-y+z, z+y+w" "2*x-y, w+x+y+z"

Exit status: 0 success, 2 parse error, 3 math-domain error, 4 budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Optional

from hadamard.algebra import GREVLEX, LEX, MonomialOrder, Ring
from hadamard.errors import (
    ArityError,
    BudgetExceededError,
    MathDomainError,
    ParseError,
    RingMismatchError,
)
from hadamard.groebner import DEFAULT_BUDGET, Ideal, computation_budget, ideal_equals, render_ideal
from hadamard.parser import (
    Binding,
    Call,
    Command,
    IntArg,
    ListExpr,
    Literal,
    Ref,
    RingDecl,
    parse_points,
    parse_polynomials,
    parse_script,
)
from hadamard.products import (
    ProjectivePoint,
    hadamard_power,
    hadamard_product_list,
    ideal_of_projective_points,
    linear_span_ideal,
)

EXIT_OK, EXIT_PARSE, EXIT_MATH, EXIT_BUDGET = 0, 2, 3, 4

_MATH_ERRORS = (MathDomainError, ArityError, RingMismatchError, ValueError, TypeError)


@dataclass
class CliConfig:
    script: str
    output_format: str = "text"
    budget: int = DEFAULT_BUDGET
    order_override: Optional[MonomialOrder] = None

    def __post_init__(self):
        if self.budget <= 0:
            raise ValueError("budget must be positive")
        if self.output_format not in ("text", "structured"):
            raise ValueError(f"unknown output format {self.output_format!r}")


# -- rendering ---------------------------------------------------------------

def render_value(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, Ideal):
        return render_ideal(value)
    if isinstance(value, ProjectivePoint):
        return str(value)
    if isinstance(value, (list, tuple)):
        return "{" + ", ".join(render_value(v) for v in value) + "}"
    return str(value)


def _fraction_pair(c):
    return [c.numerator, c.denominator]


def structured_record(index: int, op: str, value) -> dict:
    """One self-contained record; coefficients are exact ``num, den`` integer pairs."""
    rec = {"index": index, "op": op}
    if isinstance(value, bool):
        rec["ring"] = None
        rec["value"] = value
    elif isinstance(value, Ideal):
        rec["ring"] = list(value.ring.variables)
        gens = sorted(value.generators, key=lambda g: (g.degree(), value.ring.order.key(g.terms[0][0])))
        rec["generators"] = [[[list(m), c.numerator, c.denominator] for m, c in g.terms]
                             for g in gens]
    elif isinstance(value, ProjectivePoint):
        rec["ring"] = None
        rec["points"] = [[_fraction_pair(c) for c in value]]
    else:
        rec["ring"] = None
        rec["points"] = [[_fraction_pair(c) for c in p] for p in value]
    return rec


def format_result(index: int, op: str, value, output_format: str) -> str:
    if output_format == "structured":
        return json.dumps(structured_record(index, op, value))
    return f"o{index} = {render_value(value)}"


# -- execution ---------------------------------------------------------------

class _Runtime:
    def __init__(self):
        self.env = {}

    def eval(self, expr):
        if isinstance(expr, Literal):
            return expr.value
        if isinstance(expr, IntArg):
            return expr.value
        if isinstance(expr, Ref):
            return self.env[expr.name]
        if isinstance(expr, ListExpr):
            return [self.eval(i) for i in expr.items]
        if isinstance(expr, Call):
            return self.call(expr)
        raise TypeError(f"cannot evaluate {expr!r}")

    def call(self, call: Call):
        args = [self.eval(a) for a in call.args]
        name = call.command
        if name == "product":
            if len(args) == 1 and isinstance(args[0], list):
                return hadamard_product_list(args[0])
            return hadamard_product_list(args)
        if name == "power":
            return hadamard_power(args[0], args[1])
        if name in ("points-ideal", "span-ideal"):
            pts = args[0] if isinstance(args[0], list) else [args[0]]
            fn = ideal_of_projective_points if name == "points-ideal" else linear_span_ideal
            return fn(pts, call.ring)
        if name == "equal":
            a, b = args
            if isinstance(a, Ideal):
                return ideal_equals(a, b)
            if isinstance(a, list):
                return set(a) == set(b)
            return a == b
        if name == "gb":
            return Ideal._from_basis(args[0].gb())
        return args[0]


def execute(script, output_format: str = "text", emit=print) -> int:
    """Run a parsed script, emitting one line per command.  Returns the exit status."""
    rt = _Runtime()
    for index, stmt in enumerate(script.statements, start=1):
        try:
            if isinstance(stmt, RingDecl):
                continue
            if isinstance(stmt, Binding):
                rt.env[stmt.name] = rt.eval(stmt.value)
                continue
            assert isinstance(stmt, Command)
            value = rt.eval(stmt.call)
        except BudgetExceededError as exc:
            _report(stmt.token, exc)
            return EXIT_BUDGET
        except _MATH_ERRORS as exc:
            _report(stmt.token, exc)
            return EXIT_MATH
        emit(format_result(index, stmt.call.command, value, output_format))
    return EXIT_OK


def _report(tok, exc):
    print(f"error: line {tok.line}, column {tok.col}: {exc}", file=sys.stderr)


def run_script(config: CliConfig, emit=print) -> int:
    try:
        script = parse_script(config.script, config.order_override)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except MathDomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MATH
    with computation_budget(config.budget):
        return execute(script, config.output_format, emit)


# -- argument handling -------------------------------------------------------

def _order(name):
    return {"lex": LEX, "grevlex": GREVLEX}[name]


def _operand(text: str, ring: Ring):
    """Inline operand: a point list if it starts with a bracket, else generators."""
    stripped = text.lstrip()
    if stripped.startswith(("{", "[")):
        return parse_points(stripped)
    return Ideal(ring, parse_polynomials(text, ring))


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", dest="output_format", choices=("text", "structured"),
                        default="text")
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                        help="maximum S-pair reductions per Groebner basis")
    common.add_argument("--order", choices=("lex", "grevlex"), default=None,
                        help="override the monomial order of every ring")

    parser = argparse.ArgumentParser(prog="hadamard",
                                     description="Hadamard products of projective varieties")
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", parents=[common], help="execute a session script")
    run.add_argument("script", help="script file, or '-' for stdin")
    run.add_argument("-e", "--inline", action="store_true",
                     help="treat SCRIPT as the script text itself")

    def one_shot(name, help_text, nargs):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("--ring", required=True, help='comma-separated variables, e.g. "x,y,z"')
        p.add_argument("operands", nargs=nargs)
        return p

    one_shot("product", "Hadamard product of ideals or point lists", "+")
    power = one_shot("power", "Hadamard power of an ideal or point list", 1)
    power.add_argument("r", type=int)
    one_shot("points-ideal", "vanishing ideal of a point list", 1)
    one_shot("equal", "ideal equality", 2)
    one_shot("gb", "reduced Groebner basis", 1)
    return parser


def _one_shot(args) -> int:
    order = _order(args.order) if args.order else GREVLEX
    try:
        ring = Ring.of(args.ring, order)
        ops = [_operand(t, ring) for t in args.operands]
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (ValueError, MathDomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE if isinstance(exc, ValueError) else EXIT_MATH
    try:
        with computation_budget(args.budget):
            if args.command == "product":
                value = hadamard_product_list(ops)
            elif args.command == "power":
                value = hadamard_power(ops[0], args.r)
            elif args.command == "points-ideal":
                if not isinstance(ops[0], list):
                    raise TypeError("points-ideal expects a point list")
                value = ideal_of_projective_points(ops[0], ring)
            elif args.command == "equal":
                a, b = ops
                value = ideal_equals(a, b) if isinstance(a, Ideal) else set(a) == set(b)
            else:
                value = Ideal._from_basis(ops[0].gb())
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except _MATH_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MATH
    if args.output_format == "structured":
        print(json.dumps(structured_record(1, args.command, value)))
    else:
        print(render_value(value))
    return EXIT_OK


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.budget <= 0:
        print("error: --budget must be positive", file=sys.stderr)
        return EXIT_PARSE
    if args.command != "run":
        return _one_shot(args)
    if args.inline:
        text = args.script
    elif args.script == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(args.script, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_PARSE
    config = CliConfig(text, args.output_format, args.budget,
                       _order(args.order) if args.order else None)
    return run_script(config)


if __name__ == "__main__":
    sys.exit(main())
