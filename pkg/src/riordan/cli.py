"""Command-line front end.

Exit status: 0 on success (or a verified claim), 1 when a verification fails
(a relation does not hold, no conjugator exists, a predicate is false), 2 on
usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from typing import List, Optional, Sequence

from .demo import demo_paper, demo_sections
from .errors import RiordanError
from .expr import evaluate
from .group import element_order, is_involution, is_pseudo_involution
from .matrices import LowerTriMatrix, Matrix
from .presentations import builtin, is_faithful, parse_presentation, verify_assignment
from .rings import parse_ring
from .series import DEFAULT_PRECISION, MAX_PRECISION
from .truncated import (
    DEFAULT_BUDGET,
    classify_faithful_S3_in_R2Z3,
    enumerate_Rn,
    find_conjugator,
    subgroup_closure,
    truncate,
)

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _global_flags() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--ring", default="Q", help="coefficient ring: Q, Zmod:<n> or GF:<p> (default Q)")
    p.add_argument("--precision", type=int, default=DEFAULT_PRECISION, help=f"series precision (default {DEFAULT_PRECISION}, max {MAX_PRECISION})")
    p.add_argument("--size", type=int, default=None, help="matrix size for printing and truncation")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--cutoff", type=int, default=64, help="largest power tried when computing orders")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="element budget for enumerations and searches")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _global_flags()
    parser = _ArgumentParser(prog="riordan", description="Exact computations in the Riordan group.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)

    def add(name, help_text):
        return sub.add_parser(name, parents=[common], help=help_text, description=help_text)

    p = add("show", "print a Riordan array and its leading matrix block")
    p.add_argument("expr")
    p.add_argument("--b", default=None, help="make `pascal` the generalized P_b")

    p = add("mul", "multiply arrays left to right")
    p.add_argument("exprs", nargs="+")

    p = add("inv", "inverse of an array")
    p.add_argument("expr")

    p = add("order", "element order up to --cutoff")
    p.add_argument("expr")

    p = add("check-involution", "does the array square to the identity?")
    p.add_argument("expr")
    p.add_argument("--strict", action="store_true", help="exclude the identity itself")

    p = add("check-pseudo", "is x(1,-t) an involution?")
    p.add_argument("expr")

    p = add("verify", "check the relations of a Coxeter presentation on given images")
    p.add_argument("--presentation", required=True, help="file in the presentation format, or a builtin (S<n>, D<n>, K4, Dinfty)")
    p.add_argument("--images", nargs="+", required=True)
    p.add_argument("--truncate", action="store_true", help="check truncations to --size instead of the arrays")

    p = add("enumerate", "list the finite group R_n(ring)")

    p = add("closure", "subgroup generated by truncated arrays or matrices")
    p.add_argument("items", nargs="+", help="expressions or JSON matrices like [[1,0],[2,2]]")

    p = add("conjugate", "search GL(n) for T with T A_i = B_i T")
    p.add_argument("--from", dest="source", nargs="+", required=True)
    p.add_argument("--to", dest="target", nargs="+", required=True)

    p = add("classify", "classify faithful S_3 representations")
    p.add_argument("target", choices=["r2z3"])

    p = add("demo", "reproduce the worked examples")
    p.add_argument("target", choices=["paper"])
    return parser


def _emit(args, payload: dict, text: str):
    if args.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text)


def _setup(args):
    ring = parse_ring(args.ring)
    if not 1 <= args.precision <= MAX_PRECISION:
        raise UsageError(f"--precision must be in 1..{MAX_PRECISION}")
    if args.size is not None and not 1 <= args.size <= args.precision:
        raise UsageError("--size must satisfy 1 <= size <= precision")
    return ring


def _array_payload(args, label, x, size):
    payload = {"command": args.command, "expr": label, "array": x.to_json()}
    text = x.to_text()
    if size:
        m = truncate(x, size)
        payload["matrix"] = m.to_json()
        text += "\n" + m.to_text()
    return payload, text


def _matrix_or_expr(item: str, ring, precision, size):
    item = item.strip()
    if item.startswith("["):
        try:
            rows = json.loads(item)
        except json.JSONDecodeError as exc:
            raise UsageError(f"bad matrix literal {item!r}: {exc}") from None
        rows = [[Fraction(str(c)) for c in row] for row in rows]
        m = Matrix(ring, rows)
        return LowerTriMatrix(ring, rows) if m.is_lower_triangular() and all(
            ring.is_unit_raw(m.rows[i][i]) for i in range(m.n)
        ) else m
    if size is None:
        raise UsageError("truncating an expression needs --size")
    return truncate(evaluate(item, ring, precision), size)


def _run(args) -> int:
    ring = _setup(args)
    prec, size = args.precision, args.size
    cmd = args.command

    if cmd == "show":
        x = evaluate(args.expr, ring, prec, pascal_b=args.b)
        label = args.expr if args.b is None else f"{args.expr} (b={args.b})"
        _emit(args, *_array_payload(args, label, x, size))
        return EXIT_OK

    if cmd == "mul":
        arrays = [evaluate(e, ring, prec) for e in args.exprs]
        x = arrays[0]
        for y in arrays[1:]:
            x = x * y
        _emit(args, *_array_payload(args, " * ".join(args.exprs), x, size))
        return EXIT_OK

    if cmd == "inv":
        x = evaluate(args.expr, ring, prec).inverse()
        _emit(args, *_array_payload(args, f"inv({args.expr})", x, size))
        return EXIT_OK

    if cmd == "order":
        result = element_order(evaluate(args.expr, ring, prec), args.cutoff)
        _emit(args, {"command": cmd, "expr": args.expr, "result": result.to_json()}, str(result))
        return EXIT_OK

    if cmd == "check-involution":
        ok = is_involution(evaluate(args.expr, ring, prec), strict=args.strict)
        payload = {"command": cmd, "expr": args.expr, "strict": args.strict, "result": ok}
        _emit(args, payload, "involution" if ok else "not an involution")
        return EXIT_OK if ok else EXIT_FAILED

    if cmd == "check-pseudo":
        x = evaluate(args.expr, ring, prec)
        ok = is_pseudo_involution(x)
        left = is_pseudo_involution(x, side="left")
        payload = {"command": cmd, "expr": args.expr, "result": ok, "left_agrees": ok == left}
        text = "pseudo-involution" if ok else "not a pseudo-involution"
        if ok != left:
            text += " (warning: (1,-t)x gives the opposite answer)"
        _emit(args, payload, text)
        return EXIT_OK if ok else EXIT_FAILED

    if cmd == "verify":
        if os.path.exists(args.presentation):
            with open(args.presentation) as fh:
                pres = parse_presentation(fh.read())
        else:
            pres = builtin(args.presentation)
        images = [evaluate(e, ring, prec) for e in args.images]
        if args.truncate:
            if size is None:
                raise UsageError("--truncate needs --size")
            images = [truncate(x, size) for x in images]
        report = verify_assignment(pres, images, args.cutoff)
        faithful = None
        if pres.k == 2 and pres.entry(1, 2) != float("inf") and report.overall:
            faithful = is_faithful(pres, images, args.cutoff)
        payload = {"command": cmd, "presentation": pres.to_json(), "report": report.to_json(), "faithful": faithful}
        text = report.to_text()
        if faithful is not None:
            text += f"\nfaithful (dihedral normal forms distinct): {'yes' if faithful else 'no'}"
        _emit(args, payload, text)
        return EXIT_OK if report.overall else EXIT_FAILED

    if cmd in ("enumerate", "closure"):
        if cmd == "enumerate":
            if size is None:
                raise UsageError("enumerate needs --size")
            inv = enumerate_Rn(size, ring, args.budget)
        else:
            inv = subgroup_closure([_matrix_or_expr(i, ring, prec, size) for i in args.items], args.budget)
        profile = ", ".join(f"{k}:{v}" for k, v in inv.order_profile.items())
        lines = [f"{len(inv)} elements, order profile {{{profile}}}"]
        for m in inv:
            lines.append(m.to_text())
            lines.append("")
        _emit(args, {"command": cmd, "inventory": inv.to_json()}, "\n".join(lines).rstrip())
        return EXIT_OK

    if cmd == "conjugate":
        gen_a = [_matrix_or_expr(i, ring, prec, size) for i in args.source]
        gen_b = [_matrix_or_expr(i, ring, prec, size) for i in args.target]
        witness = find_conjugator(gen_a, gen_b, args.budget)
        payload = {"command": cmd, "witness": None if witness is None else witness.T.to_json()}
        _emit(args, payload, "no conjugator exists" if witness is None else "T =\n" + witness.T.to_text())
        return EXIT_OK if witness is not None else EXIT_FAILED

    if cmd == "classify":
        classes = classify_faithful_S3_in_R2Z3()
        lines = [f"{len(classes)} equivalence classes"]
        for idx, cls in enumerate(classes, 1):
            lines.append(f"class {idx}: image {{{', '.join(cls.image_names)}}}, {len(cls.pairs)} generator pairs")
        payload = {
            "command": cmd,
            "pair_count": sum(len(c.pairs) for c in classes),
            "classes": [c.to_json() for c in classes],
        }
        _emit(args, payload, "\n".join(lines))
        return EXIT_OK

    if cmd == "demo":
        if args.format == "json":
            sections = [{"title": t, "body": b} for t, b in demo_sections()]
            _emit(args, {"command": cmd, "sections": sections}, "")
        else:
            sys.stdout.write(demo_paper())
        return EXIT_OK

    raise UsageError(f"unknown command {cmd}")


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return _run(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (RiordanError, ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
