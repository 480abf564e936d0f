"""Brute-force reference implementations for every extremal quantity.

These oracles scan all C(n, k+1) vertex subsets with no pruning whatsoever, so
they are independent of the fast reporting paths they validate.  Zero-volume
simplices are silently skipped everywhere (the "minimum nonzero" convention).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .exact import (
    AllDegenerate,
    DegenerateInput,
    HyperplaneKey,
    IndexSimplex,
    LineKey,
    PointSet,
    integer_coordinates,
    line_key,
    plane_key,
)

__all__ = [
    "MinSimplexResult",
    "CountReport",
    "DistinctVolumeReport",
    "RichLineReport",
    "min_volume_simplices",
    "count_simplices_with_volume",
    "distinct_volumes",
    "rich_lines",
    "spanned_planes",
]


@dataclass(frozen=True)
class MinSimplexResult:
    min_squared_volume: Fraction
    witnesses: tuple[IndexSimplex, ...]
    count: int


@dataclass(frozen=True)
class CountReport:
    target: Fraction
    k: int
    count: int
    witnesses: tuple[IndexSimplex, ...] | None


@dataclass(frozen=True)
class DistinctVolumeReport:
    distinct_values: tuple[Fraction, ...]
    count: int


@dataclass(frozen=True)
class RichLineReport:
    threshold: int
    lines: tuple[tuple[LineKey, tuple[int, ...]], ...]


def _int_squared_volume_numerator(coords, idx, k, d):
    """Gram-determinant numerator for the squared k-volume of scaled integer
    points; shared denominator is (k! * scale**k)**2.  For k = d the plain
    edge determinant is squared instead (cheaper, same value)."""
    base = coords[idx[0]]
    edges = [tuple(c - b for c, b in zip(coords[i], base)) for i in idx[1:]]
    if k == d:
        det = _idet(edges)
        return det * det
    gram = [[sum(a * b for a, b in zip(u, v)) for v in edges] for u in edges]
    return _idet(gram)


def _idet(rows) -> int:
    n = len(rows)
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    if n == 3:
        (a, b, c), (d, e, f), (g, h, i) = rows
        return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)
    # Bareiss, exact integer division
    m = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for r in range(k + 1, n):
            for c in range(k + 1, n):
                m[r][c] = (m[r][c] * m[k][k] - m[r][k] * m[k][c]) // prev
            m[r][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def min_volume_simplices(ps: PointSet, k: int,
                         max_witnesses: int | None = None) -> MinSimplexResult:
    """Exhaustively find the minimum positive squared k-volume and all
    simplices attaining it.

    The witness list can be capped with max_witnesses (memory guard); the
    count is exact regardless.  Raises AllDegenerate when no (k+1)-subset has
    positive volume.
    """
    d = ps.dim
    if not 1 <= k <= d:
        raise ValueError(f"k must be in 1..{d}, got {k}")
    n = len(ps)
    if n < k + 1:
        raise AllDegenerate(f"need at least {k + 1} points for a {k}-simplex")
    coords, scale = integer_coordinates(ps)
    best = None
    witnesses: list[IndexSimplex] = []
    count = 0
    for idx in combinations(range(n), k + 1):
        num = _int_squared_volume_numerator(coords, idx, k, d)
        if num == 0:
            continue
        if best is None or num < best:
            best = num
            count = 1
            witnesses = [idx]
        elif num == best:
            count += 1
            if max_witnesses is None or len(witnesses) < max_witnesses:
                witnesses.append(idx)
    if best is None:
        raise AllDegenerate(f"every {k + 1}-subset of the input is degenerate")
    if max_witnesses is not None:
        witnesses = witnesses[:max_witnesses]
    denom = (math.factorial(k) * scale ** k) ** 2
    return MinSimplexResult(
        min_squared_volume=Fraction(best, denom),
        witnesses=tuple(witnesses),
        count=count,
    )


def count_simplices_with_volume(ps: PointSet, target: Fraction, k: int,
                                keep_witnesses: bool = False,
                                max_witnesses: int | None = None) -> CountReport:
    """Count k-simplices attaining a target measure exactly.

    For k = d the target is the exact (unsigned) volume; for k < d it is the
    squared volume, which is the rational-valued comparable quantity.
    """
    d = ps.dim
    if not 1 <= k <= d:
        raise ValueError(f"k must be in 1..{d}, got {k}")
    target = Fraction(target)
    if target <= 0:
        raise ValueError(f"target must be positive, got {target}")
    coords, scale = integer_coordinates(ps)
    if k == d:
        # |det| / (d! * scale**d) == target, compared as integers
        want_num = target.numerator * math.factorial(d) * scale ** d
        want_den = target.denominator
    else:
        want_num = target.numerator * (math.factorial(k) * scale ** k) ** 2
        want_den = target.denominator
    count = 0
    witnesses: list[IndexSimplex] = []
    for idx in combinations(range(len(ps)), k + 1):
        if k == d:
            base = coords[idx[0]]
            edges = [tuple(c - b for c, b in zip(coords[i], base)) for i in idx[1:]]
            val = abs(_idet(edges))
        else:
            val = _int_squared_volume_numerator(coords, idx, k, d)
        if val * want_den == want_num:
            count += 1
            if keep_witnesses and (max_witnesses is None or len(witnesses) < max_witnesses):
                witnesses.append(idx)
    return CountReport(target=target, k=k, count=count,
                       witnesses=tuple(witnesses) if keep_witnesses else None)


def distinct_volumes(ps: PointSet) -> DistinctVolumeReport:
    """Exact set of distinct positive volumes of full-dimensional simplices."""
    d = ps.dim
    n = len(ps)
    coords, scale = integer_coordinates(ps)
    seen: set[int] = set()
    for idx in combinations(range(n), d + 1):
        base = coords[idx[0]]
        edges = [tuple(c - b for c, b in zip(coords[i], base)) for i in idx[1:]]
        det = abs(_idet(edges))
        if det:
            seen.add(det)
    if not seen:
        raise AllDegenerate("the point set lies in a hyperplane")
    denom = math.factorial(d) * scale ** d
    values = tuple(Fraction(v, denom) for v in sorted(seen))
    return DistinctVolumeReport(distinct_values=values, count=len(values))


def rich_lines(ps: PointSet, k: int) -> RichLineReport:
    """All lines incident to at least k points, complete and deduplicated."""
    if k < 2:
        raise ValueError(f"richness threshold must be >= 2, got {k}")
    n = len(ps)
    if n < 2:
        raise ValueError("need at least two points to span a line")
    groups: dict[LineKey, set[int]] = {}
    for i, j in combinations(range(n), 2):
        if ps.points[i] == ps.points[j]:
            continue
        key = line_key(ps, i, j)
        groups.setdefault(key, set()).update((i, j))
    lines = [(key, tuple(sorted(members)))
             for key, members in groups.items() if len(members) >= k]
    lines.sort(key=lambda item: (item[0].direction, item[0].anchor))
    return RichLineReport(threshold=k, lines=tuple(lines))


def spanned_planes(ps: PointSet) -> list[tuple[HyperplaneKey, tuple[int, ...]]]:
    """Every plane spanned by a 3D point set with its full incident subset,
    deduplicated by canonical key and sorted by key."""
    if ps.dim != 3:
        raise ValueError(f"spanned_planes needs a 3D point set, got dim {ps.dim}")
    groups: dict[HyperplaneKey, set[int]] = {}
    n = len(ps)
    for i, j, k in combinations(range(n), 3):
        try:
            key = plane_key(ps, (i, j, k))
        except DegenerateInput:
            continue
        groups.setdefault(key, set()).update((i, j, k))
    planes = [(key, tuple(sorted(members))) for key, members in groups.items()]
    planes.sort(key=lambda item: (item[0].normal, item[0].offset))
    return planes
