"""Experiment reports: designed vs measured parameters, order-bound
tables, channel results, and the pass/fail checks the CLI exit code is
built from.

Rendering is deterministic: fixed field order, integers or fixed-format
rationals only, and the seed printed alongside the results, so the same
spec and seed always produce byte-identical output.  The JSON form
round-trips through parse_report_json back to an equal report object.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .channel import ChannelResult, run_channel_experiment
from .errors import BudgetExceededError
from .linear import LinearCode
from .order_bound import (
    matrix_h,
    nu,
    order_bound_d,
    order_bound_dphi,
    stabilization_index,
)
from .specfile import BuiltCode


@dataclass(frozen=True)
class BoundRow:
    """One line of the order-bound table for the dual chain."""

    l: int
    nu: int
    d_order: int
    d_phi: int
    dual_dim: int
    d_dual_bruteforce: int | None


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    detail: str


@dataclass(frozen=True)
class ExperimentReport:
    label: str
    kind: str
    seed: int
    budget: int
    n: int
    k_designed: int | None
    k_actual: int
    d_designed: int | None
    d_bruteforce: int | None
    genus_bound: int | None
    bounds: tuple[BoundRow, ...] | None
    channel: tuple[ChannelResult, ...]
    checks: tuple[Check, ...]

    @property
    def all_ok(self) -> bool:
        return all(c.ok for c in self.checks)

    # -- text form

    def render_text(self) -> str:
        lines = [
            f"code: {self.label}",
            f"kind: {self.kind}",
            f"seed: {self.seed}",
            f"budget: {self.budget}",
            f"n: {self.n}",
            f"k_designed: {_opt(self.k_designed)}",
            f"k_actual: {self.k_actual}",
            f"d_designed: {_opt(self.d_designed)}",
            f"d_bruteforce: {_opt(self.d_bruteforce)}",
            f"genus_bound: {_opt(self.genus_bound)}",
        ]
        if self.bounds is not None:
            lines.append("bounds:")
            lines.append("  l nu d(l) d_phi(l) dim_dual d_dual")
            for row in self.bounds:
                lines.append(
                    f"  {row.l} {row.nu} {row.d_order} {row.d_phi}"
                    f" {row.dual_dim} {_opt(row.d_dual_bruteforce)}"
                )
        for ch in self.channel:
            lines.append("channel:")
            lines.append(f"  trials: {ch.trials}")
            lines.append(f"  error_weight: {ch.error_weight}")
            lines.append(f"  successes: {ch.successes}")
            lines.append(f"  success_rate: {ch.success_rate:.6f}")
        lines.append("checks:")
        for c in self.checks:
            lines.append(f"  {'ok  ' if c.ok else 'FAIL'} {c.name}: {c.detail}")
        lines.append(f"status: {'PASS' if self.all_ok else 'FAIL'}")
        return "\n".join(lines) + "\n"

    # -- machine form

    def to_json(self) -> str:
        doc = {
            "label": self.label,
            "kind": self.kind,
            "seed": self.seed,
            "budget": self.budget,
            "n": self.n,
            "k_designed": self.k_designed,
            "k_actual": self.k_actual,
            "d_designed": self.d_designed,
            "d_bruteforce": self.d_bruteforce,
            "genus_bound": self.genus_bound,
            "bounds": None
            if self.bounds is None
            else [
                {
                    "l": r.l,
                    "nu": r.nu,
                    "d_order": r.d_order,
                    "d_phi": r.d_phi,
                    "dual_dim": r.dual_dim,
                    "d_dual_bruteforce": r.d_dual_bruteforce,
                }
                for r in self.bounds
            ],
            "channel": [
                {
                    "trials": ch.trials,
                    "error_weight": ch.error_weight,
                    "successes": ch.successes,
                    "seed": ch.seed,
                }
                for ch in self.channel
            ],
            "checks": [{"name": c.name, "ok": c.ok, "detail": c.detail} for c in self.checks],
        }
        return json.dumps(doc, indent=2) + "\n"


def _opt(v) -> str:
    return "-" if v is None else str(v)


def parse_report_json(text: str) -> ExperimentReport:
    doc = json.loads(text)
    bounds = None
    if doc["bounds"] is not None:
        bounds = tuple(
            BoundRow(
                l=r["l"],
                nu=r["nu"],
                d_order=r["d_order"],
                d_phi=r["d_phi"],
                dual_dim=r["dual_dim"],
                d_dual_bruteforce=r["d_dual_bruteforce"],
            )
            for r in doc["bounds"]
        )
    channel = tuple(
        ChannelResult(
            trials=ch["trials"],
            error_weight=ch["error_weight"],
            successes=ch["successes"],
            seed=ch["seed"],
        )
        for ch in doc["channel"]
    )
    checks = tuple(Check(name=c["name"], ok=c["ok"], detail=c["detail"]) for c in doc["checks"])
    return ExperimentReport(
        label=doc["label"],
        kind=doc["kind"],
        seed=doc["seed"],
        budget=doc["budget"],
        n=doc["n"],
        k_designed=doc["k_designed"],
        k_actual=doc["k_actual"],
        d_designed=doc["d_designed"],
        d_bruteforce=doc["d_bruteforce"],
        genus_bound=doc["genus_bound"],
        bounds=bounds,
        channel=channel,
        checks=checks,
    )


def bound_table(built: BuiltCode, budget: int) -> tuple[BoundRow, ...]:
    """Order-bound rows for every l whose dual C_l is nonzero."""
    curve, pts = built.curve, built.points
    stab = stabilization_index(curve, pts)
    rows = []
    for l in range(1, stab):
        em = matrix_h(curve, pts, l)
        dual_rows = em.null_space()
        dual_dim = dual_rows.rows
        d_dual = None
        if dual_dim >= 1 and curve.spec.q**dual_dim <= budget:
            d_dual = LinearCode._make(dual_rows).min_distance(budget)
        rows.append(
            BoundRow(
                l=l,
                nu=nu(curve, l),
                d_order=order_bound_d(curve, l),
                d_phi=order_bound_dphi(curve, pts, l),
                dual_dim=dual_dim,
                d_dual_bruteforce=d_dual,
            )
        )
    return tuple(rows)


def build_report(
    built: BuiltCode,
    seed: int,
    budget: int,
    trials: int | None = None,
    error_weight: int | None = None,
    with_bounds: bool = True,
) -> ExperimentReport:
    """Measure a built code and assemble the full report.

    The channel experiment runs when an error weight is given or derivable
    from the brute-forced distance; checks fail only on violated bounds,
    never on quantities that stayed out of budget.
    """
    checks: list[Check] = []
    try:
        d_bf = built.code.min_distance(budget)
    except BudgetExceededError:
        d_bf = None

    if built.k_designed is not None:
        checks.append(
            Check(
                name="designed dimension attained",
                ok=built.k_actual == built.k_designed,
                detail=f"k_actual={built.k_actual}, k_designed={built.k_designed}",
            )
        )
    if d_bf is not None and built.d_designed is not None:
        checks.append(
            Check(
                name="distance meets designed bound",
                ok=d_bf >= built.d_designed,
                detail=f"d_bruteforce={d_bf} >= d_designed={built.d_designed}",
            )
        )
    genus_bound = built.genus_bound
    if d_bf is not None and genus_bound is not None:
        checks.append(
            Check(
                name="distance meets genus bound",
                ok=d_bf >= genus_bound,
                detail=f"d_bruteforce={d_bf} >= n+1-k-g={genus_bound}",
            )
        )

    bounds = None
    if with_bounds and built.kind == "eval":
        bounds = bound_table(built, budget)
        for row in bounds:
            if row.d_dual_bruteforce is not None:
                checks.append(
                    Check(
                        name=f"order bound chain at l={row.l}",
                        ok=row.d_dual_bruteforce >= row.d_phi >= row.d_order,
                        detail=(
                            f"d(C_l)={row.d_dual_bruteforce} >= d_phi={row.d_phi}"
                            f" >= d={row.d_order}"
                        ),
                    )
                )

    channel: tuple[ChannelResult, ...] = ()
    weight = error_weight
    if weight is None and d_bf is not None:
        weight = (d_bf - 1) // 2
    if weight is not None and trials:
        try:
            result = run_channel_experiment(built.code, weight, trials, seed, budget)
            channel = (result,)
            if d_bf is not None and weight <= (d_bf - 1) // 2:
                checks.append(
                    Check(
                        name="within-capacity decoding is exact",
                        ok=result.successes == result.trials,
                        detail=f"{result.successes}/{result.trials} at weight {weight}",
                    )
                )
        except BudgetExceededError:
            pass

    return ExperimentReport(
        label=built.label,
        kind=built.kind,
        seed=seed,
        budget=budget,
        n=built.n,
        k_designed=built.k_designed,
        k_actual=built.k_actual,
        d_designed=built.d_designed,
        d_bruteforce=d_bf,
        genus_bound=genus_bound,
        bounds=bounds,
        channel=channel,
        checks=tuple(checks),
    )
