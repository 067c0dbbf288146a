"""Command-line interface.

Subcommands: field, sg, rs, linear, eval, bound, bezout, channel, report.
Common flags (--spec, --seed, --budget, --format) are accepted after any
subcommand; EVALCODES_BUDGET sets the default enumeration budget.  The
report subcommand exits 0 only when every asserted inequality holds.
"""

from __future__ import annotations

import argparse
import json
import sys

from .channel import run_channel_experiment
from .errors import BudgetExceededError, EvalcodesError
from .evaluation_code import dual_eval_code
from .gf import field_new
from .linear import LinearCode, default_budget
from .order_bound import (
    matrix_h,
    nu,
    order_bound_d,
    order_bound_dphi,
    stabilization_index,
)
from .reed_solomon import rs_code
from .report import build_report
from .semigroup import sg_new
from .specfile import build, parse_spec_file, select_points


def _common_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--spec", help="path to a TOML code-spec file")
    p.add_argument("--seed", type=int, default=1, help="PRNG seed (default 1)")
    p.add_argument(
        "--budget",
        type=int,
        default=None,
        help="enumeration budget (default EVALCODES_BUDGET or 2^24)",
    )
    p.add_argument(
        "--format",
        choices=("text", "json-like"),
        default="text",
        help="output format",
    )


def _ints(text: str) -> list[int]:
    return [int(v) for v in text.split(",") if v.strip() != ""]


def _emit(args, text_lines: list[str], doc: dict) -> None:
    if args.format == "json-like":
        print(json.dumps(doc, indent=2))
    else:
        for line in text_lines:
            print(line)


def _need_spec(args):
    if not args.spec:
        raise EvalcodesError("this subcommand needs --spec")
    return parse_spec_file(args.spec)


def _budget(args) -> int:
    return args.budget if args.budget is not None else default_budget()


# -- subcommand handlers


def cmd_field(args) -> int:
    spec = field_new(args.p, args.r, _ints(args.modulus) if args.modulus else None)
    lines = [
        f"field: GF({spec.q}) = GF({spec.p}^{spec.r})",
        f"modulus: {spec.modulus_str()}",
        "elements (encoding: coefficients low-degree-first):",
    ]
    lines += [f"  {e.val}: {list(e.coeffs)}" for e in spec.elements()]
    doc = {
        "p": spec.p,
        "r": spec.r,
        "q": spec.q,
        "modulus": list(spec.modulus),
        "elements": [list(e.coeffs) for e in spec.elements()],
    }
    _emit(args, lines, doc)
    return 0


def cmd_sg(args) -> int:
    sg = sg_new(_ints(args.gens))
    upto = sg.conductor + 5
    lines = [
        f"semigroup: {sg!r}",
        f"elements <= {upto}: {sg.elements_upto(upto)}",
        f"gaps: {list(sg.gaps)}",
        f"conductor: {sg.conductor}",
        f"genus: {sg.genus}",
        f"symmetric: {sg.is_symmetric()}",
    ]
    doc = {
        "generators": list(sg.generators),
        "elements": sg.elements_upto(upto),
        "gaps": list(sg.gaps),
        "conductor": sg.conductor,
        "genus": sg.genus,
        "symmetric": sg.is_symmetric(),
    }
    _emit(args, lines, doc)
    return 0


def cmd_rs(args) -> int:
    spec = field_new(args.p, args.r, _ints(args.modulus) if args.modulus else None)
    rs = rs_code(spec, args.k)
    lines = [
        f"code: rs[{rs.n},{rs.k}] over {spec!r}",
        f"d_designed: {rs.d_designed}",
        "generator:",
        rs.code.generator.format_text(),
    ]
    doc = {
        "n": rs.n,
        "k": rs.k,
        "d_designed": rs.d_designed,
        "generator": rs.code.generator.data,
    }
    _emit(args, lines, doc)
    return 0


def cmd_linear(args) -> int:
    spec = _need_spec(args)
    built = build(spec)
    code = built.code
    if args.action == "dist":
        d = code.min_distance(_budget(args))
        _emit(args, [f"n: {code.n}", f"k: {code.k}", f"d: {d}"], {"n": code.n, "k": code.k, "d": d})
    elif args.action == "dual":
        dual = code.dual()
        _emit(
            args,
            [f"dual: [{dual.n},{dual.k}]", "generator:", dual.generator.format_text()],
            {"n": dual.n, "k": dual.k, "generator": dual.generator.data},
        )
    else:  # decode
        if not args.word:
            raise EvalcodesError("linear decode needs --word")
        word = tuple(_ints(args.word))
        decoded = code.decode(word, _budget(args))
        _emit(
            args,
            [f"received: {list(word)}", f"decoded: {list(decoded)}"],
            {"received": list(word), "decoded": list(decoded)},
        )
    return 0


def cmd_eval(args) -> int:
    spec = _need_spec(args)
    if args.action == "points":
        pts = select_points(spec)
        lines = [f"points ({len(pts)}):"] + [f"  {x} {y}" for x, y in pts]
        _emit(args, lines, {"points": [[x, y] for x, y in pts]})
        return 0
    built = build(spec, l_override=args.l)
    ec = built.eval_obj
    budget = _budget(args)
    try:
        d_bf = built.code.min_distance(budget)
    except BudgetExceededError:
        d_bf = None
    lines = [
        f"code: {built.label}",
        f"n: {built.n}",
        f"k_designed: {built.k_designed if built.k_designed is not None else '-'}",
        f"k_actual: {built.k_actual}",
        f"d_designed: {built.d_designed if built.d_designed is not None else '-'}",
        f"d_bruteforce: {d_bf if d_bf is not None else '- (over budget)'}",
        f"genus_bound: {ec.genus_bound}",
    ]
    doc = {
        "n": built.n,
        "k_designed": built.k_designed,
        "k_actual": built.k_actual,
        "d_designed": built.d_designed,
        "d_bruteforce": d_bf,
        "genus_bound": ec.genus_bound,
        "generator": ec.eval_matrix.data,
    }
    if args.matrices:
        lines += ["generator:", ec.eval_matrix.format_text()]
        try:
            dual = dual_eval_code(ec)
            lines += ["dual generator:", dual.generator.format_text()]
            doc["dual_generator"] = dual.generator.data
        except EvalcodesError:
            pass
    _emit(args, lines, doc)
    return 0


def cmd_bound(args) -> int:
    spec = _need_spec(args)
    built = build(spec)
    curve, pts = built.curve, built.points
    if curve is None:
        raise EvalcodesError("bound order needs an eval/bezout spec with a curve")
    budget = _budget(args)
    l = args.l
    horizon = args.horizon
    stab = stabilization_index(curve, pts)
    top = max(horizon if horizon is not None else 0, stab)
    lines = [f"nu table (l, nu, d(l), d_phi(l)) up to {top}:"]
    table = []
    for m in range(l, top + 1):
        try:
            dphi = order_bound_dphi(curve, pts, m, horizon)
        except EvalcodesError:
            dphi = None
        row = {
            "l": m,
            "nu": nu(curve, m),
            "d": order_bound_d(curve, m, horizon),
            "d_phi": dphi,
        }
        table.append(row)
        lines.append(
            f"  {m} {row['nu']} {row['d']} {row['d_phi'] if dphi is not None else '-'}"
        )
    em = matrix_h(curve, pts, l)
    dual_rows = em.null_space()
    d_dual = None
    if dual_rows.rows and curve.spec.q**dual_rows.rows <= budget:
        d_dual = LinearCode._make(dual_rows).min_distance(budget)
    lines.append(f"dim C_l: {dual_rows.rows}")
    lines.append(f"d(C_l) bruteforce: {d_dual if d_dual is not None else '-'}")
    _emit(args, lines, {"table": table, "dual_dim": dual_rows.rows, "d_dual": d_dual})
    return 0


def cmd_bezout(args) -> int:
    spec = _need_spec(args)
    built = build(spec, l_override=args.l)
    bc = built.bezout_obj
    budget = _budget(args)
    try:
        d_bf = built.code.min_distance(budget)
    except BudgetExceededError:
        d_bf = None
    lines = [
        f"code: {built.label}",
        f"n: {bc.n}",
        f"curve degree m: {bc.m}",
        f"k_designed: {bc.k_designed}",
        f"k_actual: {bc.k_actual}",
        f"designed k attained: {bc.designed_k_attained}",
        f"d_designed: {bc.d_designed}",
        f"d_bruteforce: {d_bf if d_bf is not None else '- (over budget)'}",
    ]
    doc = {
        "n": bc.n,
        "m": bc.m,
        "k_designed": bc.k_designed,
        "k_actual": bc.k_actual,
        "designed_k_attained": bc.designed_k_attained,
        "d_designed": bc.d_designed,
        "d_bruteforce": d_bf,
    }
    _emit(args, lines, doc)
    return 0


def cmd_channel(args) -> int:
    spec = _need_spec(args)
    built = build(spec, l_override=args.l)
    result = run_channel_experiment(
        built.code, args.weight, args.trials, args.seed, _budget(args)
    )
    lines = [
        f"code: {built.label}",
        f"trials: {result.trials}",
        f"error_weight: {result.error_weight}",
        f"successes: {result.successes}",
        f"success_rate: {result.success_rate:.6f}",
        f"seed: {result.seed}",
    ]
    doc = {
        "trials": result.trials,
        "error_weight": result.error_weight,
        "successes": result.successes,
        "seed": result.seed,
    }
    _emit(args, lines, doc)
    return 0


def cmd_report(args) -> int:
    spec = _need_spec(args)
    built = build(spec, l_override=args.l)
    rep = build_report(
        built,
        seed=args.seed,
        budget=_budget(args),
        trials=args.trials,
        error_weight=args.weight,
        with_bounds=not args.no_bounds,
    )
    sys.stdout.write(rep.to_json() if args.format == "json-like" else rep.render_text())
    return 0 if rep.all_ok else 1


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="evalcodes",
        description="exact-arithmetic linear, Reed-Solomon, evaluation, and Bezout codes",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("field", help="describe a finite field")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--r", type=int, default=1)
    p.add_argument("--modulus", help="comma-separated little-endian coefficients")
    _common_flags(p)
    p.set_defaults(fn=cmd_field)

    p = sub.add_parser("sg", help="numerical semigroup queries")
    sgsub = p.add_subparsers(dest="action", required=True)
    pi = sgsub.add_parser("info", help="elements, gaps, conductor, genus, symmetry")
    pi.add_argument("--gens", required=True, help="comma-separated generators")
    _common_flags(pi)
    pi.set_defaults(fn=cmd_sg)

    p = sub.add_parser("rs", help="Reed-Solomon codes")
    rssub = p.add_subparsers(dest="action", required=True)
    pb = rssub.add_parser("build", help="emit generator matrix and parameters")
    pb.add_argument("--p", type=int, required=True)
    pb.add_argument("--r", type=int, default=1)
    pb.add_argument("--modulus")
    pb.add_argument("--k", type=int, required=True)
    _common_flags(pb)
    pb.set_defaults(fn=cmd_rs)

    p = sub.add_parser("linear", help="generic linear-code operations on a spec")
    linsub = p.add_subparsers(dest="action", required=True)
    for action, extra in (("dist", None), ("dual", None), ("decode", "--word")):
        pa = linsub.add_parser(action)
        if extra:
            pa.add_argument(extra, help="comma-separated received word")
        _common_flags(pa)
        pa.set_defaults(fn=cmd_linear, action=action)

    p = sub.add_parser("eval", help="evaluation codes on plane curves")
    evsub = p.add_subparsers(dest="action", required=True)
    pb = evsub.add_parser("build", help="build E_l and report parameters")
    pb.add_argument("--l", type=int, default=None, help="override the spec's l")
    pb.add_argument("--matrices", action="store_true", help="print generator matrices")
    _common_flags(pb)
    pb.set_defaults(fn=cmd_eval, action="build")
    pp = evsub.add_parser("points", help="list rational points")
    _common_flags(pp)
    pp.set_defaults(fn=cmd_eval, action="points")

    p = sub.add_parser("bound", help="order bound on dual distances")
    bsub = p.add_subparsers(dest="action", required=True)
    po = bsub.add_parser("order")
    po.add_argument("--l", type=int, required=True)
    po.add_argument("--horizon", type=int, default=None)
    _common_flags(po)
    po.set_defaults(fn=cmd_bound)

    p = sub.add_parser("bezout", help="total-degree codes on a plane curve")
    bzsub = p.add_subparsers(dest="action", required=True)
    pb = bzsub.add_parser("build")
    pb.add_argument("--l", type=int, default=None, help="override the spec's l")
    _common_flags(pb)
    pb.set_defaults(fn=cmd_bezout)

    p = sub.add_parser("channel", help="seeded error-injection experiment")
    p.add_argument("--weight", type=int, required=True, help="exact error weight per trial")
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--l", type=int, default=None)
    _common_flags(p)
    p.set_defaults(fn=cmd_channel)

    p = sub.add_parser("report", help="full report; exit 0 iff all checks hold")
    p.add_argument("--l", type=int, default=None)
    p.add_argument("--weight", type=int, default=None)
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--no-bounds", action="store_true", help="skip the order-bound table")
    _common_flags(p)
    p.set_defaults(fn=cmd_report)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except EvalcodesError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ZeroDivisionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
