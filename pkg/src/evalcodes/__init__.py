"""Exact-arithmetic code constructions over small finite fields.

Subpackages cover the full pipeline: finite fields (gf), generic linear
codes (linear), Reed-Solomon codes (reed_solomon), numerical semigroups
(semigroup), plane-curve quotient algebras with weight functions
(curve_algebra), evaluation codes and their duals (evaluation_code), the
order bound (order_bound), total-degree Bezout codes (bezout_code), and the
spec-file/CLI layer (specfile, channel, cli).
"""

from .bezout_code import bezout_code, vl_basis
from .channel import ChannelResult, run_channel_experiment
from .curve_algebra import (
    AlgebraElement,
    PlaneCurve,
    curve_family_a,
    curve_family_b,
    quotient_dimension,
)
from .evaluation_code import (
    EvalCode,
    PointSet,
    dual_eval_code,
    eval_code,
    evaluate,
    interpolation_unit,
    one_point_goppa_params,
    rational_points,
)
from .gf import FieldElement, FieldSpec, field_new
from .linear import LinearCode, Matrix, code_from_generator, hamming, weight
from .order_bound import (
    nu,
    order_bound_d,
    order_bound_dphi,
    stabilization_index,
    syndrome_matrix,
)
from .reed_solomon import RSCode, rs_code, rs_encode
from .report import ExperimentReport, build_report, parse_report_json
from .semigroup import NumericalSemigroup, frobenius_two_gen, sg_new
from .specfile import BuiltCode, CodeSpec, build, parse_spec, parse_spec_file

__all__ = [
    "AlgebraElement",
    "BuiltCode",
    "ChannelResult",
    "CodeSpec",
    "EvalCode",
    "ExperimentReport",
    "FieldElement",
    "FieldSpec",
    "LinearCode",
    "Matrix",
    "NumericalSemigroup",
    "PlaneCurve",
    "PointSet",
    "RSCode",
    "bezout_code",
    "build",
    "build_report",
    "code_from_generator",
    "curve_family_a",
    "curve_family_b",
    "dual_eval_code",
    "eval_code",
    "evaluate",
    "field_new",
    "frobenius_two_gen",
    "hamming",
    "interpolation_unit",
    "nu",
    "one_point_goppa_params",
    "order_bound_d",
    "order_bound_dphi",
    "parse_report_json",
    "parse_spec",
    "parse_spec_file",
    "quotient_dimension",
    "rational_points",
    "rs_code",
    "rs_encode",
    "run_channel_experiment",
    "sg_new",
    "stabilization_index",
    "syndrome_matrix",
    "vl_basis",
    "weight",
]
