"""Exact moment polytopes, Duistermaat-Heckman barycenters and the
Kahler-Einstein criterion for the smooth Fano symmetric varieties of
Picard number one."""

__version__ = "0.1.0"

from .casedb import CaseRecord, builtin_cases, get_case, load_case
from .criterion import Verdict, cone_generators, in_relative_interior, verdict
from .dhmeasure import Poly2, barycenter, density, integrate_triangle, volume
from .polytope import HalfPlane, Polygon, contains, halfplanes_from_case, intersect, triangulate
from .qfield import SQRT3, QuadNum
from .rootdata import Vec2, coroot, pairing, realize, solve_fundamental

__all__ = [
    "CaseRecord", "HalfPlane", "Poly2", "Polygon", "QuadNum", "SQRT3", "Vec2", "Verdict",
    "barycenter", "builtin_cases", "cone_generators", "contains", "coroot", "density",
    "get_case", "halfplanes_from_case", "in_relative_interior", "integrate_triangle",
    "intersect", "load_case", "pairing", "realize", "solve_fundamental", "triangulate",
    "verdict", "volume",
]
