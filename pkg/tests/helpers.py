"""Shared helpers for the test suite."""

from fractions import Fraction

from simplexvol import PointSet, gen_random_rational


def rank(ps: PointSet) -> int:
    """Affine rank of the set (dimension of the spanned flat), exact."""
    if len(ps) < 2:
        return 0
    base = ps.points[0]
    rows = [[c - b for c, b in zip(p, base)] for p in ps.points[1:]]
    r = 0
    for col in range(ps.dim):
        pivot = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = rows[r][col]
        rows[r] = [v / inv for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        r += 1
        if r == len(rows):
            break
    return r


def random_spanning(n: int, d: int, seed: int, bound: int = 8) -> PointSet:
    """Seeded random integer point set guaranteed to span R^d (deterministic
    redraws on degenerate draws)."""
    for attempt in range(100):
        ps = gen_random_rational(n, d, seed=seed * 1000003 + attempt, bound=bound)
        if rank(ps) == d:
            return ps
    raise RuntimeError(f"could not draw a spanning set (n={n}, d={d}, seed={seed})")


def scale_points(ps: PointSet, factor: Fraction) -> PointSet:
    return PointSet([[c * factor for c in p] for p in ps.points], dim=ps.dim,
                    allow_duplicates=True)
