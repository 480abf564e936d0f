"""Charging of tetrahedra to faces.

Each nondegenerate tetrahedron is assigned to a maximum-area face among the
faces adjacent to a diameter (a longest edge), with deterministic lexicographic
tie-breaking.  Over the minimum-volume witnesses of any point set, no triangle
can absorb more than four charges, and no (triangle, side) pair more than two;
verify_charging measures the observed maxima.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .bruteforce import min_volume_simplices
from .exact import (
    DegenerateInput,
    IndexSimplex,
    PointSet,
    as_simplex,
    plane_key,
    squared_distance_point_plane,
    squared_volume,
)

__all__ = ["ChargeRecord", "ChargingCheck", "charge_tetrahedron", "verify_charging"]


@dataclass(frozen=True)
class ChargeRecord:
    tetra: IndexSimplex
    face: tuple[int, int, int]
    side: str  # side of the charged face's plane holding the fourth vertex
    diameter: tuple[int, int]
    x0_sq: Fraction  # squared diameter length
    y0_sq: Fraction  # squared height of the face over the diameter
    z0_sq: Fraction  # squared distance from the fourth vertex to the face plane


@dataclass(frozen=True)
class ChargingCheck:
    max_per_face: int
    max_per_face_side: int
    n_witnesses: int


def _sq_dist(p, q) -> Fraction:
    return sum((a - b) ** 2 for a, b in zip(p, q))


def _sq_dist_point_line(ps: PointSet, p: int, a: int, b: int) -> Fraction:
    # 4 * area^2 / base^2
    area_sq = squared_volume(ps, (p, a, b))
    return 4 * area_sq / _sq_dist(ps.points[a], ps.points[b])


def charge_tetrahedron(ps: PointSet, tetra: Iterable[int]) -> ChargeRecord:
    """Assign a tetrahedron to the maximum-area face adjacent to a diameter.

    Ties (equal longest edges, equal face areas) are broken toward the
    lexicographically smallest index tuple, so the assignment is
    deterministic.
    """
    tet = as_simplex(tetra, len(ps))
    if len(tet) != 4 or ps.dim != 3:
        raise DegenerateInput("charging needs a tetrahedron in a 3D point set")
    if squared_volume(ps, tet) == 0:
        raise DegenerateInput(f"tetrahedron {tet} is degenerate")

    edges = sorted(combinations(tet, 2))
    max_len = max(_sq_dist(ps.points[a], ps.points[b]) for a, b in edges)
    diameters = [e for e in edges if _sq_dist(ps.points[e[0]], ps.points[e[1]]) == max_len]

    faces = [f for f in combinations(tet, 3)
             if any(set(e) <= set(f) for e in diameters)]
    best_face = None
    best_area = None
    for f in sorted(faces):
        area = squared_volume(ps, f)
        if best_area is None or area > best_area:
            best_face, best_area = f, area
    face = best_face
    diameter = min(e for e in diameters if set(e) <= set(face))
    apex = next(i for i in tet if i not in face)
    third = next(i for i in face if i not in diameter)

    key = plane_key(ps, face)
    side = "above" if key.side_of(ps.points[apex]) > 0 else "below"
    return ChargeRecord(
        tetra=tet,
        face=face,
        side=side,
        diameter=diameter,
        x0_sq=max_len,
        y0_sq=_sq_dist_point_line(ps, third, diameter[0], diameter[1]),
        z0_sq=squared_distance_point_plane(ps.points[apex], key),
    )


def verify_charging(ps: PointSet,
                    witnesses: Sequence[IndexSimplex] | None = None) -> ChargingCheck:
    """Charge every minimum-volume tetrahedron and report the maximum number
    of charges per face and per (face, side).

    When witnesses is None the minimum-volume set is computed by the
    brute-force oracle.  Raises if the four-per-face / two-per-side bounds
    are exceeded.
    """
    if witnesses is None:
        witnesses = min_volume_simplices(ps, 3).witnesses
    per_face: dict[tuple[int, int, int], int] = {}
    per_side: dict[tuple[tuple[int, int, int], str], int] = {}
    for tet in witnesses:
        record = charge_tetrahedron(ps, tet)
        per_face[record.face] = per_face.get(record.face, 0) + 1
        key = (record.face, record.side)
        per_side[key] = per_side.get(key, 0) + 1
    check = ChargingCheck(
        max_per_face=max(per_face.values(), default=0),
        max_per_face_side=max(per_side.values(), default=0),
        n_witnesses=len(witnesses),
    )
    if check.max_per_face > 4 or check.max_per_face_side > 2:
        raise AssertionError(
            f"charging bound exceeded: {check.max_per_face} per face, "
            f"{check.max_per_face_side} per side")
    return check
