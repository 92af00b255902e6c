"""Built-in smooth Fano symmetric varieties of Picard number one, and case files.

Each record carries the data needed to rebuild the anticanonical moment
polytope: the images of the colors and of the G-stable divisor in the
realized coweight plane, the coefficients of the colors in the
anticanonical divisor, and the realized weight ``2 rho_theta``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, replace
from fractions import Fraction
from pathlib import Path
from typing import Optional

from .errors import ParseError, ValidationError
from .qfield import QuadNum, quad_from_json, quad_to_json, rat_from_str, rat_to_str
from .rootdata import Vec2, coroot, pairing, realize, solve2

__all__ = [
    "CaseRecord",
    "Expected",
    "builtin_cases",
    "get_case",
    "load_case",
    "case_to_json",
    "case_from_json",
    "dump_case",
]


@dataclass(frozen=True)
class Expected:
    polytope_vertices: tuple[Vec2, ...] = ()
    volume: Optional[QuadNum] = None
    barycenter: Optional[Vec2] = None
    proportionality: Optional[Fraction] = None


@dataclass(frozen=True)
class CaseRecord:
    id: int
    name: str
    restricted_type: str
    multiplicity: int
    color_normals: tuple[Vec2, ...]
    color_coefficients: tuple[int, ...]
    gstable_normals: tuple[Vec2, ...]
    two_rho_theta: Vec2
    dimension: Optional[int] = None
    fano_index: Optional[int] = None
    weight_lattice_scale: int = 1
    description: str = ""
    expected: Optional[Expected] = None

    @property
    def root_system(self):
        return realize(self.restricted_type)

    def validate(self) -> CaseRecord:
        """Check the record invariants; raise ValidationError naming the broken one."""
        if self.restricted_type not in ("A2", "G2"):
            raise ValidationError("restricted_type must be 'A2' or 'G2'")
        if not isinstance(self.multiplicity, int) or self.multiplicity < 1:
            raise ValidationError("multiplicity must be ≥ 1")
        if len(self.color_normals) != len(self.color_coefficients):
            raise ValidationError("color_normals and color_coefficients differ in length")
        if any(m < 1 for m in self.color_coefficients):
            raise ValidationError("color_coefficients must be ≥ 1")
        if any(v.is_zero() for v in self.color_normals + self.gstable_normals):
            raise ValidationError("divisor images must be nonzero")
        if self.weight_lattice_scale not in (1, 2):
            raise ValidationError("weight_lattice_scale must be 1 or 2")
        for alpha in self.root_system.simple_roots:
            if pairing(coroot(alpha), self.two_rho_theta).sign() <= 0:
                raise ValidationError("two_rho_theta not strictly dominant")
        return self


def _realized(label: str):
    R = realize(label)
    return R, R.simple_coroots, R.fundamental_coweights, R.fundamental_weights


def _build() -> tuple[CaseRecord, ...]:
    h = Fraction(1, 2)
    cases = []

    A2, (a1v, a2v), _, (w1, w2) = _realized("A2")
    G2, (b1v, b2v), (_, g2cw), (u1, u2) = _realized("G2")

    # type AI / AII / EIV: N is spanned by half coroots, M by doubled weights
    for cid, name, dim, index, mult, desc, vert_scale, bary, prop in (
        (1, "SL(3,C)/SO(3,C)", 5, 3, 1, "hyperplane section of LGr(3,6)", 6,
         (Fraction(5, 4), Fraction(5, 4)), Fraction(5, 4)),
        (3, "SL(6,C)/Sp(6,C)", 14, 9, 4, "hyperplane section of S_6", 18,
         (Fraction(21, 5), Fraction(21, 5)), Fraction(21, 20)),
        (4, "E6/F4", 26, 17, 8, "hyperplane section of E_7/P_7", 34,
         (Fraction(221, 27), Fraction(221, 27)), Fraction(221, 216)),
    ):
        volume = QuadNum(0, Fraction(27, 5)) if cid == 1 else None
        cases.append(CaseRecord(
            id=cid, name=name, dimension=dim, fano_index=index,
            restricted_type="A2", multiplicity=mult, description=desc,
            color_normals=(a1v * h, a2v * h),
            color_coefficients=(mult, mult),
            gstable_normals=((a1v + a2v) * -h,),
            two_rho_theta=(A2.simple_roots[0] + A2.simple_roots[1]) * (2 * mult),
            weight_lattice_scale=2,
            expected=Expected(
                polytope_vertices=(Vec2.of(0, 0), w1 * vert_scale, w2 * vert_scale),
                volume=volume,
                barycenter=Vec2(QuadNum(bary[0]), QuadNum(0, bary[1])),
                proportionality=prop,
            ),
        ))

    cases.append(CaseRecord(
        id=2, name="(SL(3,C) x SL(3,C))/SL(3,C)", dimension=8, fano_index=5,
        restricted_type="A2", multiplicity=2, description="hyperplane section of Gr(3,6)",
        color_normals=(a1v, a2v),
        color_coefficients=(2, 2),
        gstable_normals=(-(a1v + a2v),),
        two_rho_theta=(A2.simple_roots[0] + A2.simple_roots[1]) * 2,
        weight_lattice_scale=1,
        expected=Expected(
            polytope_vertices=(Vec2.of(0, 0), w1 * 5, w2 * 5),
            volume=QuadNum(0, Fraction(78125, 18432)),
            barycenter=Vec2(QuadNum(Fraction(10, 9)), QuadNum(0, Fraction(10, 9))),
            proportionality=Fraction(10, 9),
        ),
    ))

    g2_two_rho = G2.simple_roots[0] * 10 + G2.simple_roots[1] * 6
    cases.append(CaseRecord(
        id=5, name="G2/(SL(2,C) x SL(2,C))", dimension=8, fano_index=4,
        restricted_type="G2", multiplicity=1, description="Cayley Grassmannian",
        color_normals=(b1v * h, b2v * h),
        color_coefficients=(1, 1),
        gstable_normals=(g2cw * -h,),
        two_rho_theta=g2_two_rho,
        weight_lattice_scale=2,
        expected=Expected(
            polytope_vertices=(Vec2.of(0, 0), u1 * 8, u2 * 4),
            volume=QuadNum(0, 29952),
            barycenter=Vec2(QuadNum(Fraction(512, 273)), QuadNum(0, Fraction(32, 9))),
        ),
    ))
    cases.append(CaseRecord(
        id=6, name="(G2 x G2)/G2", dimension=14, fano_index=7,
        restricted_type="G2", multiplicity=2, description="double Cayley Grassmannian",
        color_normals=(b1v, b2v),
        color_coefficients=(2, 2),
        gstable_normals=(-g2cw,),
        two_rho_theta=g2_two_rho,
        weight_lattice_scale=1,
        expected=Expected(
            polytope_vertices=(Vec2.of(0, 0), u1 * 7, u2 * Fraction(7, 2)),
            barycenter=Vec2(QuadNum(Fraction(139601, 79360)), QuadNum(0, Fraction(49, 15))),
        ),
    ))
    cases.sort(key=lambda c: c.id)
    return tuple(c.validate() for c in cases)


_BUILTIN = _build()


def builtin_cases() -> list[CaseRecord]:
    return list(_BUILTIN)


def get_case(case_id: int) -> CaseRecord:
    for case in _BUILTIN:
        if case.id == case_id:
            return case
    raise KeyError(f"no built-in case {case_id}; expected 1..{len(_BUILTIN)}")


# -- case files ------------------------------------------------------------

def _rational_pair(obj, what: str) -> tuple[Fraction, Fraction]:
    if not isinstance(obj, (list, tuple)) or len(obj) != 2:
        raise ParseError(f"{what}: expected two exact rationals, got {obj!r}")
    return rat_from_str(str(obj[0])), rat_from_str(str(obj[1]))


def _rational_coords(solve, v: Vec2) -> Optional[list[str]]:
    a, b = solve(v)
    if a.is_rational() and b.is_rational():
        return [rat_to_str(a.r), rat_to_str(b.r)]
    return None


def case_to_json(case: CaseRecord) -> dict:
    R = case.root_system
    c1, c2 = R.simple_coroots
    cw1, cw2 = R.fundamental_coweights

    colors = []
    for v, m in zip(case.color_normals, case.color_coefficients):
        coords = _rational_coords(lambda u: solve2(c1, c2, u), v)
        if coords is None:
            raise ValidationError("color normal is not a rational combination of simple coroots")
        colors.append({"normal_coroot_basis": coords, "anticanonical_coefficient": m})
    gstable = []
    for v in case.gstable_normals:
        coords = _rational_coords(lambda u: solve2(cw1, cw2, u), v)
        if coords is None:
            gstable.append({"normal": v.to_json()})
        else:
            gstable.append({"normal_coweight_combination": coords})

    obj = {
        "id": case.id,
        "name": case.name,
        "description": case.description,
        "dimension": case.dimension,
        "fano_index": case.fano_index,
        "restricted_type": case.restricted_type,
        "multiplicity": case.multiplicity,
        "weight_lattice_scale": case.weight_lattice_scale,
        "colors": colors,
        "gstable": gstable,
        "two_rho_theta": case.two_rho_theta.to_json(),
    }
    exp = case.expected
    if exp is not None:
        block: dict = {}
        if exp.polytope_vertices:
            block["polytope_vertices"] = [v.to_json() for v in exp.polytope_vertices]
        if exp.volume is not None:
            block["volume"] = quad_to_json(exp.volume)
        if exp.barycenter is not None:
            block["barycenter"] = exp.barycenter.to_json()
        if exp.proportionality is not None:
            block["proportionality"] = rat_to_str(exp.proportionality)
        obj["expected"] = block
    return obj


def _require(obj: dict, key: str):
    if key not in obj:
        raise ParseError(f"missing field {key!r}")
    return obj[key]


def _int_field(obj: dict, key: str, default=None):
    value = obj.get(key, default)
    if value is None:
        return None
    if isinstance(value, bool) or not isinstance(value, int):
        raise ParseError(f"{key} must be an integer, got {value!r}")
    return value


def case_from_json(obj) -> CaseRecord:
    """Build and validate a CaseRecord from its JSON object form."""
    if not isinstance(obj, dict):
        raise ParseError("case file must hold a JSON object")
    rtype = _require(obj, "restricted_type")
    if rtype not in ("A2", "G2"):
        raise ValidationError("restricted_type must be 'A2' or 'G2'")
    R = realize(rtype)

    colors = _require(obj, "colors")
    if not isinstance(colors, list):
        raise ParseError("colors must be a list")
    normals, coeffs = [], []
    for entry in colors:
        if not isinstance(entry, dict):
            raise ParseError(f"color entry must be an object, got {entry!r}")
        a, b = _rational_pair(_require(entry, "normal_coroot_basis"), "normal_coroot_basis")
        normals.append(R.from_coroot_coords(a, b))
        coeffs.append(_int_field(entry, "anticanonical_coefficient"))
        if coeffs[-1] is None:
            raise ParseError("missing field 'anticanonical_coefficient'")

    gstable = _require(obj, "gstable")
    if not isinstance(gstable, list):
        raise ParseError("gstable must be a list")
    g_normals = []
    for entry in gstable:
        if not isinstance(entry, dict):
            raise ParseError(f"gstable entry must be an object, got {entry!r}")
        if "normal_coweight_combination" in entry:
            a, b = _rational_pair(entry["normal_coweight_combination"], "normal_coweight_combination")
            g_normals.append(R.from_coweight_coords(a, b))
        elif "normal" in entry:
            g_normals.append(Vec2.from_json(entry["normal"]))
        else:
            raise ParseError("gstable entry needs 'normal_coweight_combination' or 'normal'")

    expected = None
    if obj.get("expected") is not None:
        block = obj["expected"]
        if not isinstance(block, dict):
            raise ParseError("expected must be an object")
        expected = Expected(
            polytope_vertices=tuple(Vec2.from_json(v) for v in block.get("polytope_vertices", ())),
            volume=quad_from_json(block["volume"]) if "volume" in block else None,
            barycenter=Vec2.from_json(block["barycenter"]) if "barycenter" in block else None,
            proportionality=(rat_from_str(block["proportionality"])
                             if "proportionality" in block else None),
        )

    name = obj.get("name", "")
    if not isinstance(name, str):
        raise ParseError("name must be a string")
    case = CaseRecord(
        id=_int_field(obj, "id", 0),
        name=name,
        description=str(obj.get("description", "")),
        dimension=_int_field(obj, "dimension"),
        fano_index=_int_field(obj, "fano_index"),
        restricted_type=rtype,
        multiplicity=_int_field(obj, "multiplicity", _require(obj, "multiplicity")),
        weight_lattice_scale=_int_field(obj, "weight_lattice_scale", 1),
        color_normals=tuple(normals),
        color_coefficients=tuple(coeffs),
        gstable_normals=tuple(g_normals),
        two_rho_theta=Vec2.from_json(_require(obj, "two_rho_theta")),
        expected=expected,
    )
    return case.validate()


def load_case(path) -> CaseRecord:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read case file {path}: {exc}") from exc
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON ({exc})") from exc
    return case_from_json(obj)


def dump_case(case: CaseRecord, path) -> None:
    Path(path).write_text(json.dumps(case_to_json(case), indent=2, sort_keys=True) + "\n",
                          encoding="utf-8")


def with_two_rho(case: CaseRecord, two_rho: Vec2) -> CaseRecord:
    """Copy of ``case`` with a different apex and no expected block (not validated)."""
    return replace(case, two_rho_theta=two_rho, expected=None)
