"""Command-line front end.

Exit codes: 0 success, 1 domain/validation/usage error, 2 a duality row failed.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from fractions import Fraction
from pathlib import Path
from typing import Sequence

from .errors import LinkgenusError
from .genus import (
    castelnuovo_genus,
    closed_form_genus,
    compute_parameters,
    delta_h_table,
    max_genus,
    min_admissible_degree,
    printed_castelnuovo_genus,
)
from .linkage import classify_example1, example2_construction
from .oracle.instances import (
    DEFAULT_SEED,
    LinkageInstance,
    Surface,
    build_random_ci_through_points,
    random_cone_instance,
    random_quadric_split,
)
from .oracle.verify import verify_duality
from .scroll import (
    ResolutionClass,
    VertexDivisor,
    canonical_characteristic,
    canonical_class,
    ci_curve_invariants,
    class_group,
    divisor_degree,
    integral_total_transform,
    intersection_number,
    make_scroll,
    proper_transform_line_vertex,
    vertex_multiplicity,
)

log = logging.getLogger("linkgenus")

EXIT_OK, EXIT_ERROR, EXIT_VERIFY_FAILED = 0, 1, 2


class UsageError(LinkgenusError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse would exit with 2, which is reserved
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def dumps(payload: dict) -> str:
    return json.dumps(payload, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def _rational(x: Fraction) -> int | str:
    return x.numerator if x.denominator == 1 else str(x)


def _ints(text: str, count: int | None = None) -> list[int]:
    try:
        values = [int(tok) for tok in text.replace(" ", "").split(",") if tok]
    except ValueError as exc:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from exc
    if count is not None and len(values) != count:
        raise UsageError(f"expected {count} integers, got {text!r}")
    return values


# -- genus / bound ----------------------------------------------------------


def cmd_genus(args: argparse.Namespace) -> tuple[dict, str, int]:
    params = compute_parameters(args.d, args.n, args.s)
    table = delta_h_table(params)
    genus = max_genus(params)
    closed = closed_form_genus(params)
    payload = {
        "params": params.as_dict(),
        "delta_h": [{"r": r, "delta_h": v} for r, v in table.rows()],
        "max_genus": genus,
        "closed_form": _rational(closed.value),
        "discrepancy": closed.discrepancy,
        "castelnuovo": {
            "degree": args.s,
            "ambient_dim": args.n - 1,
            "classical": castelnuovo_genus(args.s, args.n - 1),
            "printed": printed_castelnuovo_genus(args.s, args.n - 1),
        },
    }
    if args.csv:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["r", "delta_h"])
        writer.writerows(table.rows())
        Path(args.csv).write_text(buf.getvalue(), encoding="utf-8")

    p = params
    lines = [
        f"d={p.d} n={p.n} s={p.s}",
        f"  d-1 = {p.s}*{p.m} + {p.eps}    s-1 = {p.n - 2}*{p.w} + {p.v}",
        f"  branch {p.branch.value}: k={p.k} delta={p.delta} e={p.e}",
        "",
        "   r  delta_h",
    ]
    lines += [f"{r:4d}  {v:7d}" for r, v in table.rows()]
    lines += [
        f"  sum = {table.total}",
        "",
        f"max genus G(d,n,s) = {genus}",
        f"printed closed form = {closed.value}" + ("   (DISCREPANCY)" if closed.discrepancy else ""),
        f"Castelnuovo genus G({args.s}, {args.n - 1}) = {payload['castelnuovo']['classical']}"
        f"   (printed variant {payload['castelnuovo']['printed']})",
    ]
    return payload, "\n".join(lines) + "\n", EXIT_OK


def cmd_bound(args: argparse.Namespace) -> tuple[dict, str, int]:
    d = min_admissible_degree(args.n, args.s)
    return {"n": args.n, "s": args.s, "min_admissible_degree": d}, f"{d}\n", EXIT_OK


# -- scroll -----------------------------------------------------------------


def cmd_scroll(args: argparse.Namespace) -> tuple[dict, str, int]:
    scroll = make_scroll(args.n, _ints(args.type))
    payload: dict = {"scroll": scroll.describe(), "verb": args.verb}
    verb, operand = args.verb, args.operand
    if verb == "class-group":
        cg = class_group(scroll)
        payload["class_group"] = {"kind": cg.kind.value, "generators": list(cg.generators), "relation": cg.relation}
        text = f"{cg.kind.value} rank {cg.rank} on {', '.join(cg.generators)}" + (
            f"; {cg.relation}" if cg.relation else ""
        )
    elif verb == "canonical":
        k = canonical_class(scroll)
        as_dict = {"R": k.d} if hasattr(k, "d") else {"H": k.a, "R": k.b}
        payload["canonical_class"] = as_dict
        payload["canonical_degree"] = divisor_degree(scroll, k)
        payload["canonical_characteristic"] = canonical_characteristic(scroll)
        text = (
            f"K = {' + '.join(f'{v}{g}' for g, v in as_dict.items())}; "
            f"degree {payload['canonical_degree']}; ch = {payload['canonical_characteristic']}"
        )
    elif verb == "intersect":
        if not operand:
            raise UsageError("intersect needs 'alpha1,beta1;alpha2,beta2;...'")
        classes = [ResolutionClass(*_ints(chunk, 2)) for chunk in operand.split(";") if chunk.strip()]
        value = intersection_number(scroll, classes)
        payload["classes"] = [[c.alpha, c.beta] for c in classes]
        payload["intersection_number"] = value
        text = str(value)
    elif verb == "total-transform":
        (d,) = _ints(operand or "", 1)
        cls = integral_total_transform(scroll, d)
        payload["total_transform"] = {"H~": cls.alpha, "R~": cls.beta}
        text = f"{cls.alpha}H~ + {cls.beta}R~"
    elif verb == "proper-transform":
        c, a = _ints(operand or "", 2)
        cls = proper_transform_line_vertex(scroll, c, a)
        payload["proper_transform"] = {"H~": cls.alpha, "R~": cls.beta}
        text = f"{cls.alpha}H~ + {cls.beta}R~"
    elif verb == "vertex-mult":
        first, second = _vertex_divisors(operand or "")
        value = vertex_multiplicity(scroll, first, second)
        payload["vertex_multiplicity"] = value
        text = str(value)
    elif verb == "ci":
        a, b = _ints(operand or "", 2)
        deg, genus = ci_curve_invariants(scroll, a, b)
        payload["ci"] = {"a": a, "b": b, "degree": deg, "genus": genus}
        text = f"degree {deg}, arithmetic genus {genus}"
    else:  # pragma: no cover - argparse restricts choices
        raise UsageError(verb)
    return payload, text + "\n", EXIT_OK


def _vertex_divisors(operand: str) -> tuple[VertexDivisor, VertexDivisor]:
    """'c1,a1,c2,a2' where c = 0 or the token R denotes a ruling plane."""
    tokens = [t for t in operand.replace(" ", "").split(",") if t]
    divisors = []
    while tokens:
        head = tokens.pop(0)
        if head.upper() == "R":
            divisors.append(VertexDivisor(ruling=True))
            continue
        if not tokens:
            raise UsageError(f"vertex-mult operand {operand!r}: missing multiplicity")
        c, a = int(head), int(tokens.pop(0))
        divisors.append(VertexDivisor(ruling=True) if c == 0 else VertexDivisor(c, a))
    if len(divisors) != 2:
        raise UsageError(f"vertex-mult needs two divisors, got {operand!r}")
    return divisors[0], divisors[1]


# -- classify ---------------------------------------------------------------


def cmd_classify(args: argparse.Namespace) -> tuple[dict, str, int]:
    ex1 = classify_example1(args.d, args.n, args.s)
    payload: dict = {"plane_residual": ex1.as_dict(), "construction": None}
    lines = [f"(d, n, s) = ({args.d}, {args.n}, {args.s})   max genus {ex1.max_genus}"]
    lo, hi = args.s - 2 - ex1.params.w, args.s - 2
    if not ex1.applicable:
        lines.append(f"plane-residual case: not applicable (eps={ex1.params.eps} outside [{lo}, {hi}])")
    else:
        lines.append(f"plane-residual case: eps={ex1.params.eps} in [{lo}, {hi}]")
        lines.append(f"  C' plane curve of degree {ex1.deg_c_prime}, genus {ex1.p_c_prime}")
        if ex1.genus_cross_check is not None:
            lines.append(f"  {ex1.c_double_prime_parts}; p_a(C'') = {ex1.p_c_double_prime}, p_a(Y) = {ex1.p_y}")
            agree = "agrees" if ex1.genus_cross_check == ex1.max_genus else "DISAGREES"
            lines.append(f"  linked genus of C = {ex1.genus_cross_check} ({agree} with max genus)")
        else:
            lines.append(f"  {ex1.note}")
        try:
            ex2 = example2_construction(args.d, args.n, args.s)
        except LinkgenusError as exc:
            payload["construction"] = {"modeled": False, "note": str(exc)}
            lines.append(f"construction: {exc}")
        else:
            payload["construction"] = ex2.as_dict()
            if ex2.modeled:
                lines.append(
                    f"construction ({ex2.variant}): deg D = {ex2.deg_d}, S ~ {ex2.s_class.a}H{ex2.s_class.b:+d}R, "
                    f"deg C' = {ex2.deg_c_prime}, degree identity {'holds' if ex2.degree_identity else 'FAILS'}, "
                    f"linked genus {ex2.genus_cross_check}"
                )
            else:
                lines.append(f"construction: {ex2.note}")
    return payload, "\n".join(lines) + "\n", EXIT_OK


# -- verify -----------------------------------------------------------------


def _load_points(path: str) -> list:
    data = json.loads(Path(path).read_text(encoding="utf-8"))
    if isinstance(data, dict):
        data = data.get("points", data.get("z1"))
    if not isinstance(data, list):
        raise UsageError(f"{path}: expected a JSON list of coordinate lists")
    return data


def _build_instance(args: argparse.Namespace) -> LinkageInstance:
    if args.instance:
        return LinkageInstance.from_dict(json.loads(Path(args.instance).read_text(encoding="utf-8")))
    surface = Surface(args.surface)
    if args.z1:
        return build_random_ci_through_points(surface, args.a1, args.a2, _load_points(args.z1), args.seed)
    if surface is Surface.QUADRIC:
        return random_quadric_split(args.a1, args.a2, args.split, args.seed)
    size = args.split if args.split is not None else min(args.a1, args.a2)
    return random_cone_instance(args.a1, args.a2, size, args.seed, surface)


def cmd_verify(args: argparse.Namespace) -> tuple[dict, str, int]:
    instance = _build_instance(args)
    imax = min(instance.ci_degrees) - 1 if args.imax is None else args.imax
    report = verify_duality(instance, range(args.imin, imax + 1))
    log.info("verified %d rows in %.3fs", len(report.rows), report.seconds)
    payload = report.to_dict()
    lines = [
        f"surface {instance.surface.value}  degrees {instance.ci_degrees}  mode {instance.mode.value}  "
        f"split {instance.split}  seed {instance.seed}",
        f"twist: {payload['twist']}",
        "   i   lhs   rhs  equal",
    ]
    lines += [f"{r.i:4d}  {r.lhs:4d}  {r.rhs:4d}  {'yes' if r.equal else 'NO'}" for r in report.rows]
    lines.append("PASS" if report.passed else "FAIL")
    return payload, "\n".join(lines) + "\n", EXIT_OK if report.passed else EXIT_VERIFY_FAILED


# -- plumbing ---------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON instead of a table")
    common.add_argument("-o", "--output", help="write the output to this file instead of stdout")
    common.add_argument("-v", "--verbose", action="count", default=0)

    parser = _Parser(prog="linkgenus", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("genus", parents=[common], help="parameters, Δh profile and genus bounds")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--csv", metavar="PATH", help="also write the Δh table as CSV (header r,delta_h)")
    p.set_defaults(func=cmd_genus)

    p = sub.add_parser("bound", parents=[common], help="smallest admissible degree")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("scroll", parents=[common], help="divisor arithmetic on a rational normal scroll")
    p.add_argument("--type", required=True, help="a1,...,ar")
    p.add_argument("--n", type=int, required=True)
    p.add_argument(
        "verb",
        choices=["class-group", "canonical", "intersect", "total-transform", "proper-transform", "vertex-mult", "ci"],
    )
    p.add_argument("operand", nargs="?")
    p.set_defaults(func=cmd_scroll)

    p = sub.add_parser("classify", parents=[common], help="plane-residual case and explicit construction")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("verify", parents=[common], help="brute-force check of the linkage duality")
    p.add_argument("--surface", choices=[s.value for s in Surface], default=Surface.QUADRIC.value)
    p.add_argument("--a1", type=int, default=2)
    p.add_argument("--a2", type=int, default=2)
    src = p.add_mutually_exclusive_group()
    src.add_argument("--split", type=int, help="|Z1|; random if omitted on the quadric")
    src.add_argument("--z1", metavar="FILE", help="JSON list of Z1 points (rational coordinates as strings or ints)")
    src.add_argument("--instance", metavar="FILE", help="re-verify a saved instance (the 'instance' field of a report)")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--imin", type=int, default=0)
    p.add_argument("--imax", type=int, help="largest twist i (default min(a1, a2) - 1)")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.WARNING - 10 * min(args.verbose, 2), format="%(levelname)s %(message)s", stream=sys.stderr
    )
    try:
        payload, text, code = args.func(args)
    except (LinkgenusError, ValueError, OSError) as exc:
        print(f"linkgenus {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    out = dumps(payload) if args.json else text
    if args.output:
        Path(args.output).write_text(out, encoding="utf-8")
    else:
        sys.stdout.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
