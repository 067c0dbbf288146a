"""Declarative TOML code-spec files and the builder that realizes them.

A spec file has four sections.  [field] declares GF(p^r) with an optional
explicit modulus (little-endian coefficients, monic).  [curve] declares a
family-A or family-B plane curve over that field.  [points] selects all
rational points or a first-n prefix.  [code] picks the construction:

    [field]                 [curve]
    p = 2                   family = "A"      # or "B" with g = [c0, ...]
    r = 2                   m = 3
                            tail = [[0, 1, 1]]  # [x-exp, y-exp, coeff]
    [points]                [code]
    select = "all"          kind = "eval"     # rs | eval | bezout | raw-generator
                            l = 4             # k for rs, generator for raw

All numbers are integer element encodings, so files are bit-exact and
diffable.  Structural problems (missing keys, unknown kinds, wrong types)
raise ParseError; well-formed files whose contents violate a mathematical
contract (reducible modulus, oversized curve tail, coefficients outside
the field) raise InconsistentSpecError.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

from .bezout_code import BezoutCode, bezout_code
from .curve_algebra import PlaneCurve, curve_family_a, curve_family_b
from .errors import (
    EvalcodesError,
    InconsistentSpecError,
    ParseError,
)
from .evaluation_code import EvalCode, PointSet, eval_code, rational_points
from .gf import FieldSpec, field_new
from .linear import LinearCode, Matrix, code_from_generator
from .reed_solomon import RSCode, rs_code

KINDS = ("rs", "eval", "bezout", "raw-generator")


@dataclass(frozen=True)
class CodeSpec:
    """Validated contents of a spec file."""

    field: FieldSpec
    curve: PlaneCurve | None
    select: str
    select_n: int | None
    kind: str
    k: int | None
    l: int | None
    generator: tuple[tuple[int, ...], ...] | None


def _require(table: dict, key: str, types, where: str):
    if key not in table:
        raise ParseError(f"[{where}] is missing required key '{key}'")
    v = table[key]
    if not isinstance(v, types) or isinstance(v, bool):
        raise ParseError(f"[{where}] key '{key}' has the wrong type")
    return v


def _check_encoding(field: FieldSpec, value, where: str) -> int:
    if not isinstance(value, int) or isinstance(value, bool) or not 0 <= value < field.q:
        raise InconsistentSpecError(
            f"{where}: {value!r} is not an element encoding of {field!r} (0..{field.q - 1})"
        )
    return value


def parse_spec(text: str) -> CodeSpec:
    """Parse and validate a spec document."""
    try:
        doc = tomllib.loads(text)
    except tomllib.TOMLDecodeError as exc:
        raise ParseError(f"not valid TOML: {exc}") from exc

    if "field" not in doc:
        raise ParseError("missing [field] section")
    ftab = doc["field"]
    p = _require(ftab, "p", int, "field")
    r = ftab.get("r", 1)
    if not isinstance(r, int) or isinstance(r, bool):
        raise ParseError("[field] key 'r' has the wrong type")
    modulus = ftab.get("modulus")
    if modulus is not None and (
        not isinstance(modulus, list) or not all(isinstance(c, int) for c in modulus)
    ):
        raise ParseError("[field] key 'modulus' must be a list of integers")
    try:
        field = field_new(p, r, modulus)
    except EvalcodesError as exc:
        raise InconsistentSpecError(f"[field] invalid: {exc}") from exc

    curve = None
    if "curve" in doc:
        ctab = doc["curve"]
        family = _require(ctab, "family", str, "curve")
        try:
            if family == "A":
                m = _require(ctab, "m", int, "curve")
                tail_list = ctab.get("tail", [])
                if not isinstance(tail_list, list):
                    raise ParseError("[curve] key 'tail' must be a list of [a, b, coeff]")
                tail = {}
                for item in tail_list:
                    if not (isinstance(item, list) and len(item) == 3):
                        raise ParseError("[curve] tail entries must be [a, b, coeff] triples")
                    a, b, c = item
                    tail[(a, b)] = _check_encoding(field, c, "curve tail coefficient")
                curve = curve_family_a(field, m, tail)
            elif family == "B":
                g = _require(ctab, "g", list, "curve")
                for c in g:
                    _check_encoding(field, c, "curve g coefficient")
                curve = curve_family_b(field, g)
            else:
                raise ParseError(f"[curve] unknown family {family!r} (expected 'A' or 'B')")
        except (ParseError, InconsistentSpecError):
            raise
        except EvalcodesError as exc:
            raise InconsistentSpecError(f"[curve] invalid: {exc}") from exc
        except ValueError as exc:
            raise InconsistentSpecError(f"[curve] invalid: {exc}") from exc

    select, select_n = "all", None
    if "points" in doc:
        ptab = doc["points"]
        select = ptab.get("select", "all")
        if select not in ("all", "first-n"):
            raise ParseError(f"[points] unknown selector {select!r}")
        if select == "first-n":
            select_n = _require(ptab, "n", int, "points")
            if select_n < 1:
                raise InconsistentSpecError("[points] n must be >= 1")

    if "code" not in doc:
        raise ParseError("missing [code] section")
    ktab = doc["code"]
    kind = _require(ktab, "kind", str, "code")
    if kind not in KINDS:
        raise ParseError(f"[code] unknown kind {kind!r} (expected one of {KINDS})")

    k = l = None
    generator = None
    if kind == "rs":
        k = _require(ktab, "k", int, "code")
    elif kind in ("eval", "bezout"):
        l = _require(ktab, "l", int, "code")
        if curve is None:
            raise InconsistentSpecError(f"[code] kind {kind!r} needs a [curve] section")
    else:  # raw-generator
        rows = _require(ktab, "generator", list, "code")
        if not rows or not all(isinstance(row, list) for row in rows):
            raise ParseError("[code] 'generator' must be a nonempty list of rows")
        generator = tuple(
            tuple(_check_encoding(field, v, "generator entry") for v in row) for row in rows
        )
        if len({len(row) for row in generator}) != 1:
            raise InconsistentSpecError("[code] generator rows have unequal lengths")

    return CodeSpec(
        field=field,
        curve=curve,
        select=select,
        select_n=select_n,
        kind=kind,
        k=k,
        l=l,
        generator=generator,
    )


def parse_spec_file(path: str) -> CodeSpec:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_spec(fh.read())


@dataclass(frozen=True)
class BuiltCode:
    """A spec realized as a concrete code, with designed parameters."""

    label: str
    kind: str
    spec: CodeSpec
    code: LinearCode
    n: int
    k_actual: int
    k_designed: int | None
    d_designed: int | None
    curve: PlaneCurve | None = None
    points: PointSet | None = None
    eval_obj: EvalCode | None = None
    rs_obj: RSCode | None = None
    bezout_obj: BezoutCode | None = None

    @property
    def genus_bound(self) -> int | None:
        if self.eval_obj is not None:
            return self.eval_obj.genus_bound
        return None


def select_points(spec: CodeSpec) -> PointSet:
    pts = rational_points(spec.curve)
    if spec.select == "first-n":
        return pts.prefix(spec.select_n)
    return pts


def build(spec: CodeSpec, l_override: int | None = None) -> BuiltCode:
    """Realize the spec; l_override replaces the spec's l for eval/bezout."""
    if spec.kind == "rs":
        rs = rs_code(spec.field, spec.k)
        return BuiltCode(
            label=f"rs[{rs.n},{rs.k}] over {spec.field!r}",
            kind="rs",
            spec=spec,
            code=rs.code,
            n=rs.n,
            k_actual=rs.k,
            k_designed=rs.k,
            d_designed=rs.d_designed,
            rs_obj=rs,
        )
    if spec.kind == "eval":
        l = l_override if l_override is not None else spec.l
        pts = select_points(spec)
        ec = eval_code(spec.curve, pts, l)
        return BuiltCode(
            label=f"eval l={l} [{ec.n},{ec.rank}] on {spec.curve!r}",
            kind="eval",
            spec=spec,
            code=ec.code,
            n=ec.n,
            k_actual=ec.rank,
            k_designed=ec.k_designed,
            d_designed=ec.d_designed,
            curve=spec.curve,
            points=pts,
            eval_obj=ec,
        )
    if spec.kind == "bezout":
        l = l_override if l_override is not None else spec.l
        pts = select_points(spec)
        bc = bezout_code(spec.field, spec.curve.defining_terms(), pts.points, l)
        return BuiltCode(
            label=f"bezout l={l} [{bc.n},{bc.k_actual}] on {spec.curve!r}",
            kind="bezout",
            spec=spec,
            code=bc.code,
            n=bc.n,
            k_actual=bc.k_actual,
            k_designed=bc.k_designed,
            d_designed=bc.d_designed,
            curve=spec.curve,
            points=pts,
            bezout_obj=bc,
        )
    # raw-generator
    g = Matrix(spec.field, [list(r) for r in spec.generator])
    code = code_from_generator(g)
    return BuiltCode(
        label=f"raw [{code.n},{code.k}] over {spec.field!r}",
        kind="raw-generator",
        spec=spec,
        code=code,
        n=code.n,
        k_actual=code.k,
        k_designed=code.k,
        d_designed=None,
    )
