"""Independent brute-force oracles and random generators for the test suite.

Nothing here shares code with the package's volume or poset machinery: the
volume oracle triangulates by direct facet enumeration and coordinate
projection, computes determinants by Laplace expansion, and measures the
lattice index by its own row reduction.  Agreement with the package is then
a genuine cross-check.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations

from toricmather import (
    EulerSpec,
    PointConfiguration,
    ValidatedConfiguration,
    build_face_poset,
    euler_from_input,
    validate,
)
from toricmather.errors import DegenerateDimensionError


def laplace_det(matrix) -> int:
    """Determinant by cofactor expansion along the first row."""
    size = len(matrix)
    if size == 0:
        return 1
    if size == 1:
        return matrix[0][0]
    total = 0
    for j, x in enumerate(matrix[0]):
        if x == 0:
            continue
        minor = [
            [row[k] for k in range(size) if k != j] for row in matrix[1:]
        ]
        total += (-1) ** j * x * laplace_det(minor)
    return total


def rational_affine_rank(points) -> int:
    """Affine rank via Gaussian elimination over the rationals."""
    if not points:
        return -1
    rows = [
        [Fraction(a - b) for a, b in zip(p, points[0])] for p in points[1:]
    ]
    rank = 0
    cols = len(points[0])
    for col in range(cols):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        for i in range(rank + 1, len(rows)):
            if rows[i][col]:
                factor = rows[i][col] / rows[rank][col]
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def brute_facets(points: list[tuple[int, ...]]) -> list[frozenset]:
    """Facet point sets of Conv(points), full-dimensional in its coordinates."""
    d = len(points[0])
    facets = set()
    for subset in combinations(points, d):
        diffs = [
            [a - b for a, b in zip(p, subset[0])] for p in subset[1:]
        ]
        normal = [
            (-1) ** j
            * laplace_det([[row[k] for k in range(d) if k != j] for row in diffs])
            for j in range(d)
        ]
        if not any(normal):
            continue
        offset = sum(a * b for a, b in zip(normal, subset[0]))
        values = [sum(a * b for a, b in zip(normal, p)) - offset for p in points]
        if all(v <= 0 for v in values) or all(v >= 0 for v in values):
            members = frozenset(p for p, v in zip(points, values) if v == 0)
            if len(members) < len(points):
                facets.add(members)
    return sorted(facets, key=sorted)


def brute_triangulation(points: list[tuple[int, ...]]) -> list[tuple]:
    """Simplices (as point tuples) triangulating Conv(points).

    The points must be full-dimensional in their own coordinates.  Facets are
    recursed on after projecting away a coordinate that keeps them
    full-dimensional; the projection is affine and injective on the facet, so
    the combinatorics carry back.
    """
    d = len(points[0])
    if d == 0:
        return [tuple(points[:1])]
    if d == 1:
        lo = min(points)
        hi = max(points)
        return [(lo, hi)]
    apex = min(points)
    simplices = []
    for facet in brute_facets(points):
        if apex in facet:
            continue
        facet_points = sorted(facet)
        for keep in combinations(range(d), d - 1):
            projected = [tuple(p[k] for k in keep) for p in facet_points]
            if rational_affine_rank(projected) == d - 1:
                back = dict(zip(projected, facet_points))
                # rank-preserving projections are injective on the facet
                assert len(back) == len(facet_points)
                for s in brute_triangulation(projected):
                    simplices.append(tuple(back[q] for q in s) + (apex,))
                break
    return simplices


def lattice_index(points) -> int:
    """Index of the difference lattice in Z^n, by integer row reduction."""
    rows = [
        [a - b for a, b in zip(p, points[0])] for p in points[1:]
    ]
    n = len(points[0])
    rank = 0
    for col in range(n):
        while True:
            nonzero = [i for i in range(rank, len(rows)) if rows[i][col]]
            if not nonzero:
                break
            best = min(nonzero, key=lambda i: abs(rows[i][col]))
            rows[rank], rows[best] = rows[best], rows[rank]
            reduced = True
            for i in range(rank + 1, len(rows)):
                if rows[i][col]:
                    q = rows[i][col] // rows[rank][col]
                    rows[i] = [a - q * b for a, b in zip(rows[i], rows[rank])]
                    if rows[i][col]:
                        reduced = False
            if reduced:
                break
        if rows and rank < len(rows) and rows[rank][col]:
            rank += 1
    assert rank == n, "lattice_index requires a full-rank difference lattice"
    index = 1
    for i in range(n):
        index *= abs(next(x for x in rows[i] if x))
    return index


def oracle_normalized_volume(points) -> int:
    """Normalized volume in the generated lattice, from scratch.

    Sums |det| over an independently built triangulation (this is n! times
    the Euclidean volume) and divides by the index of the difference lattice,
    which converts ambient-lattice volume to generated-lattice volume.
    """
    points = [tuple(p) for p in points]
    total = 0
    for simplex in brute_triangulation(points):
        rows = [
            [a - b for a, b in zip(p, simplex[0])] for p in simplex[1:]
        ]
        total += abs(laplace_det(rows))
    index = lattice_index(points)
    assert total % index == 0, (total, index)
    return total // index


def random_configuration(
    rng: random.Random,
    max_dim: int = 3,
    max_points: int = 8,
    coord_range: int = 4,
) -> ValidatedConfiguration:
    """A random validated full-dimensional configuration."""
    while True:
        n = rng.randint(1, max_dim)
        count = rng.randint(n + 1, max_points)
        pts = set()
        attempts = 0
        while len(pts) < count and attempts < 200:
            pts.add(tuple(rng.randint(0, coord_range) for _ in range(n)))
            attempts += 1
        try:
            return validate(PointConfiguration(tuple(sorted(pts))))
        except DegenerateDimensionError:
            continue


def random_euler_data(rng: random.Random, poset, low: int = -3, high: int = 3):
    """A random complete unitriangular Euler table over the poset."""
    tables: dict[str, dict[str, int]] = {}
    for closure in poset.faces:
        row: dict[str, int] = {}
        for face in poset.subfaces(closure):
            row[face.id] = 1 if face.id == closure.id else rng.randint(low, high)
        tables[closure.id] = row
    return euler_from_input(poset, EulerSpec("table", tables))


def random_case(rng: random.Random, max_dim: int = 3, max_points: int = 8):
    """(configuration, poset, euler data) triple for property tests."""
    config = random_configuration(rng, max_dim=max_dim, max_points=max_points)
    poset = build_face_poset(config)
    data = random_euler_data(rng, poset)
    return config, poset, data
