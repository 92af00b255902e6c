"""Kahler-Einstein test: is the DH barycenter inside the cone 2rho + C+ ?"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .dhmeasure import barycenter, moment_polygon, volume
from .qfield import QuadNum
from .rootdata import Vec2, pairing, solve2


@dataclass(frozen=True)
class Verdict:
    case_id: int
    polytope_vertices: tuple[Vec2, ...]
    volume: QuadNum
    barycenter: Vec2
    two_rho_theta: Vec2
    cone_generators: tuple[Vec2, Vec2]
    cone_coefficients: tuple[QuadNum, QuadNum]
    ke_exists: bool
    proportionality: Optional[QuadNum] = None


def cone_generators(case) -> tuple[Vec2, Vec2]:
    """Simple restricted roots ``alpha_i - theta(alpha_i)`` in the realization.

    When M is the doubled weight lattice the restricted roots are the doubled
    realization roots; for the group cases they are the realization roots.
    """
    a1, a2 = case.root_system.simple_roots
    k = case.weight_lattice_scale
    return a1 * k, a2 * k


def in_relative_interior(point: Vec2, apex: Vec2, gens: Sequence[Vec2]):
    """Coordinates of ``point - apex`` in the generator basis, and whether both are > 0."""
    g1, g2 = gens
    s, t = solve2(g1, g2, point - apex)
    return s.sign() > 0 and t.sign() > 0, s, t


def proportionality(point: Vec2, direction: Vec2) -> Optional[QuadNum]:
    """``c`` with ``point == c * direction`` if one exists."""
    c = pairing(point, direction) / pairing(direction, direction)
    return c if direction * c == point else None


def verdict(case, generators: Optional[Sequence[Vec2]] = None) -> Verdict:
    gens = tuple(generators) if generators is not None else cone_generators(case)
    poly = moment_polygon(case)
    bar = barycenter(case)
    ok, s, t = in_relative_interior(bar, case.two_rho_theta, gens)
    return Verdict(
        case_id=case.id,
        polytope_vertices=poly.vertices,
        volume=volume(case),
        barycenter=bar,
        two_rho_theta=case.two_rho_theta,
        cone_generators=gens,
        cone_coefficients=(s, t),
        ke_exists=ok,
        proportionality=proportionality(bar, case.two_rho_theta),
    )
