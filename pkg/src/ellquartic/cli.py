"""Command line entry point ``ellquartic``.

Exit status: 0 when no check failed, 1 when a check failed, 2 for usage,
parse and data errors.
"""

from __future__ import annotations

import argparse
import ast
import sys
from importlib import resources
from pathlib import Path

from .algebra.gf import GF2k, gf2k
from .algebra.ratfunc import RatFunc
from .curves import NonReducedError, delta_blowup, delta_semigroup, integrality
from .elliptic import SingularCurveError
from .models import QuarticParams, WeierstrassCoeffs
from .quartic import (
    build_cubic,
    build_quartic,
    fibre_taxonomy,
    isomorphism_decide,
    singular_point,
    verify_witness,
)
from .report import Check, Report, check
from .series import branch_parametrization, expand_tate13, expand_y_at_infinity
from .surface import (
    ContractionError,
    InconsistentDataError,
    SchemaError,
    arithmetic_genus_reduced,
    check_minimal,
    classify_fibre,
    contract_curve,
    load_graphs,
    solve_self_intersections,
)
from .suites import MAX_K, SUITES, run_suite

DEFAULTS = {"k": 2, "seed": 0, "prec": 16}

LITERAL_GRAMMAR = """\
field literals:
  expr   := term (('+' | '-') term)*
  term   := factor (('*' | '/') factor)*
  factor := atom ('^' integer)?
  atom   := integer | 'w' | 't' | '(' expr ')'
  w is the generator of GF(2^k); t is the variable of GF(2^k)(t) and is only
  accepted by 'iso'.  Integers are read mod 2, and '-' equals '+'.
  examples: w^2*t + 1, (t^3 + t)/(t + w), w + 1
"""


class UsageError(ValueError):
    """Bad command line input, reported with exit status 2."""


class LiteralError(UsageError):
    pass


def parse_literal(text: str, field: GF2k, with_t: bool = False):
    """Evaluate a literal in GF(2^k), or in GF(2^k)(t) when ``with_t`` is set."""
    try:
        tree = ast.parse(text.replace("^", "**"), mode="eval")
    except SyntaxError as exc:
        raise LiteralError(f"cannot parse {text!r}") from exc
    one = RatFunc.const(field, 1) if with_t else field.one

    def ev(node):
        match node:
            case ast.Constant(value=int() as n) if not isinstance(n, bool):
                return one * (n & 1)
            case ast.Name(id="w"):
                return one * field.gen
            case ast.Name(id="t") if with_t:
                return RatFunc.t(field)
            case ast.UnaryOp(op=ast.USub() | ast.UAdd(), operand=x):
                return ev(x)
            case ast.BinOp(left=l, op=ast.Pow(), right=ast.Constant(value=int() as n)):
                return ev(l) ** n
            case ast.BinOp(left=l, op=ast.Add() | ast.Sub(), right=r):
                return ev(l) + ev(r)
            case ast.BinOp(left=l, op=ast.Mult(), right=r):
                return ev(l) * ev(r)
            case ast.BinOp(left=l, op=ast.Div(), right=r):
                return ev(l) / ev(r)
        raise LiteralError(f"unsupported syntax in {text!r}")

    try:
        return ev(tree.body)
    except ZeroDivisionError as exc:
        raise LiteralError(f"division by zero in {text!r}") from exc


def parse_params(texts, field: GF2k, with_t: bool = False) -> QuarticParams:
    if len(texts) == 1:
        texts = texts[0].split(",")
    if len(texts) != 4:
        raise UsageError(f"expected four parameters a, b, c, e, got {len(texts)}")
    return QuarticParams(*(parse_literal(s.strip(), field, with_t) for s in texts))


def _params(args, **extra) -> dict:
    out = {"k": args.k, "seed": args.seed, "prec": args.prec, "defaults": dict(DEFAULTS)}
    out.update(extra)
    return out


# subcommands --------------------------------------------------------------------------


def cmd_verify(args) -> Report:
    if args.suite != "all" and args.suite not in SUITES:
        raise UsageError(f"unknown suite {args.suite!r}; choose from all, {', '.join(sorted(SUITES))}")
    return Report("verify", args.suite, _params(args), run_suite(args.suite, args.k, args.seed))


def cmd_count(args) -> Report:
    F = gf2k(args.k)
    q = parse_params(args.params, F)
    label = fibre_taxonomy(q)
    nq = build_quartic(q).count_points()
    ne = build_cubic(q.a, q.eta).count_points()
    if label == "genus-one":
        genus = 1
        checks = [check("count/equal", nq == ne, f"#Q = {nq}, #E = {ne}")]
    else:
        genus = 0 if label == "nodal-rational" else "reducible"
        checks = [Check("count/equal", "skip", f"{label} fibre")]
    result = {"#Q": nq, "#E": ne, "equal": nq == ne, "label": label, "genus": genus}
    return Report("count", str(q), _params(args), checks, result)


def _load_fibres(path: str):
    p = Path(path)
    if not p.exists():
        shipped = resources.files("ellquartic").joinpath("data", p.name)
        if not shipped.is_file():
            raise UsageError(f"no such file {path}")
        with resources.as_file(shipped) as real:
            return load_graphs(real)
    return load_graphs(p)


def cmd_fibre(args) -> Report:
    # solving also checks given self-intersections against the fibre relation
    graphs = [solve_self_intersections(g) for g in _load_fibres(args.path)]
    action = args.action
    if action == "solve":
        result = [g.to_dict() for g in graphs]
    elif action == "genus":
        result = {}
        for g in graphs:
            subset = args.subset.split(",") if args.subset else g.names
            subset = [c for c in subset if c in g.names]
            if subset:
                result[g.name] = arithmetic_genus_reduced(g, subset)
    elif action == "contract":
        if not args.name:
            raise UsageError("contract needs a component name")
        owners = [g for g in graphs if args.name in g.names]
        if not owners:
            raise UsageError(f"no component named {args.name}")
        graphs = [contract_curve(g, args.name) if g is owners[0] else g for g in graphs]
        result = {"fibres": [g.to_dict() for g in graphs], "minimal": all(check_minimal(g) for g in graphs)}
    elif action == "classify":
        result = [classify_fibre(g) for g in graphs]
    else:
        result = {g.name: check_minimal(g) for g in graphs}
    return Report("fibre", action, _params(args, path=Path(args.path).name), [], result)


def cmd_iso(args) -> Report:
    F = gf2k(args.k)
    q1 = parse_params([args.left], F, with_t=True)
    q2 = parse_params([args.right], F, with_t=True)
    d = isomorphism_decide(q1, q2)
    result = {"decision": str(d), "status": d.status, "reason": d.reason}
    checks = []
    if d.isomorphic:
        w = d.witness
        result["witness"] = {n: str(v) for n, v in zip(("alpha", "sigma", "beta", "gamma"), w.as_tuple())}
        checks.append(check("iso/witness-verified", verify_witness(q1, q2, w), "coefficient identities"))
    return Report("iso", f"{q1} ~ {q2}", _params(args), checks, result)


def cmd_delta(args) -> Report:
    F = gf2k(args.k)
    q = parse_params(args.params, F)
    C = build_quartic(q)
    label = fibre_taxonomy(q)
    try:
        rep = integrality(C)
    except NonReducedError as exc:
        raise UsageError(str(exc)) from exc
    points = []
    for P in rep.singular_points:
        try:
            d = delta_blowup(C, P)
        except ArithmeticError:
            d = None
        points.append({"point": str(P), "delta": d})
    result = {"label": label, "status": rep.status, "singular_points": points}
    checks = []
    if label != "reducible-with-double-line":
        S = singular_point(q)
        x, _, z = branch_parametrization(q, max(args.prec, 8))
        ds = delta_semigroup(x, z + q.b.sqrt())
        db = delta_blowup(C, S)
        result["moving_singularity"] = {"point": str(S), "blowup": db, "semigroup": ds}
        checks.append(check("delta/methods-agree", db == ds, f"blowup {db}, semigroup {ds}"))
    return Report("delta", str(q), _params(args), checks, result)


def _series_dict(s, lo: int) -> dict:
    hi = s.prec
    return {"from": lo, "below": hi, "coefficients": [str(c) for c in s.coefficient_list(lo, hi)]}


def cmd_series(args) -> Report:
    F = gf2k(args.k)
    vals = [parse_literal(v, F) for v in args.values]
    need = {"y": 5, "tate13": 2, "branch": 4}[args.kind]
    if len(vals) != need:
        raise UsageError(f"series {args.kind} takes {need} values")
    if args.kind == "y":
        result = {"y": _series_dict(expand_y_at_infinity(WeierstrassCoeffs(*vals), args.prec), -3)}
    elif args.kind == "tate13":
        result = {"s": _series_dict(expand_tate13(*vals, args.prec), 0)}
    else:
        q = QuarticParams(*vals)
        x, y, z = branch_parametrization(q, max(args.prec, 6))
        result = {n: _series_dict(s, 0) for n, s in zip("xyz", (x, y, z))}
    return Report("series", args.kind, _params(args), [], result)


# parser --------------------------------------------------------------------------------


def _field_degree(text: str) -> int:
    k = int(text)
    if not 1 <= k <= MAX_K:
        raise argparse.ArgumentTypeError(f"k must lie in 1..{MAX_K}")
    return k


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--k", type=_field_degree, default=DEFAULTS["k"], help="work over GF(2^k) (default 2)")
    common.add_argument("--seed", type=int, default=DEFAULTS["seed"], help="seed for randomized checks")
    common.add_argument("--prec", type=int, default=DEFAULTS["prec"], help="series precision")
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="format", action="store_const", const="json", default="json")
    fmt.add_argument("--text", dest="format", action="store_const", const="text")

    p = argparse.ArgumentParser(
        prog="ellquartic",
        description="Exact checks for quartic fibrations with a moving singularity in characteristic 2.",
        epilog=LITERAL_GRAMMAR,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = p.add_subparsers(dest="command", required=True)
    kw = {"parents": [common], "epilog": LITERAL_GRAMMAR, "formatter_class": argparse.RawDescriptionHelpFormatter}

    v = sub.add_parser("verify", help="run a verification suite", **kw)
    v.add_argument("--suite", default="all", help=f"all or one of {', '.join(sorted(SUITES))}")
    v.set_defaults(func=cmd_verify)

    c = sub.add_parser("count", help="point counts of Q_(a,b,c,e) and E_(a,ce)", **kw)
    c.add_argument("params", nargs="+", help="a b c e, or one comma separated string")
    c.set_defaults(func=cmd_count)

    f = sub.add_parser("fibre", help="intersection data of fibre graphs", **kw)
    f.add_argument("path", help="JSON file; shipped data is found by its base name")
    f.add_argument("action", choices=["solve", "genus", "contract", "classify", "minimal"])
    f.add_argument("name", nargs="?", help="component to contract")
    f.add_argument("--subset", help="comma separated components for 'genus'")
    f.set_defaults(func=cmd_fibre)

    i = sub.add_parser("iso", help="decide isomorphism of two models over GF(2^k)(t)", **kw)
    i.add_argument("left", help="'a, b, c, e' as literals in t and w")
    i.add_argument("right")
    i.set_defaults(func=cmd_iso)

    d = sub.add_parser("delta", help="singular points and delta invariants of a fibre", **kw)
    d.add_argument("params", nargs="+")
    d.set_defaults(func=cmd_delta)

    s = sub.add_parser("series", help="Laurent expansions", **kw)
    s.add_argument("kind", choices=["y", "tate13", "branch"],
                   help="y: a1 a2 a3 a4 a6; tate13: a^(1/2) eta^(1/2); branch: a b c e")
    s.add_argument("values", nargs="*")
    s.set_defaults(func=cmd_series)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        report = args.func(args)
    except (UsageError, SchemaError, InconsistentDataError, ContractionError, SingularCurveError, ValueError) as exc:
        print(f"ellquartic: error: {exc}", file=sys.stderr)
        return 2
    print(report.to_json() if args.format == "json" else report.to_text())
    return report.exit_status


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
