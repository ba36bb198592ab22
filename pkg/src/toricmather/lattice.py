"""Exact integer lattice algebra: normal forms, determinants, coordinates.

Everything here works on plain Python integers (arbitrary precision), so there
is no overflow to guard against.  Matrices are lists/tuples of equal-length
integer rows; the rows of a matrix are read as generators of a sublattice of
Z^n throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

Vector = tuple[int, ...]


def gcdex(a: int, b: int) -> tuple[int, int, int]:
    """Extended gcd: returns (g, x, y) with x*a + y*b = g and g = gcd(a,b) >= 0.

    When a divides b the answer is (|a|, sign(a), 0): the elimination loops in
    the normal forms rely on the first generator being left untouched once it
    divides everything, otherwise they can cycle.
    """
    if a != 0 and b % a == 0:
        return (abs(a), 1 if a > 0 else -1, 0)
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    if old_r < 0:
        old_r, old_x, old_y = -old_r, -old_x, -old_y
    return old_r, old_x, old_y


def hermite_normal_form(rows: Iterable[Sequence[int]]) -> list[Vector]:
    """Canonical row Hermite normal form; returns the nonzero rows only.

    The result is an echelon basis of the lattice generated by the input rows:
    positive pivots, zeros below each pivot, and entries above a pivot reduced
    into [0, pivot).  A generating set of Z^d comes back as the identity, which
    makes downstream normalization idempotent.
    """
    M = [list(r) for r in rows]
    if not M:
        return []
    m, n = len(M), len(M[0])
    row = 0
    for col in range(n):
        if row == m:
            break
        # Euclidean elimination in this column, rows `row`..m-1.
        while True:
            nonzero = [i for i in range(row, m) if M[i][col] != 0]
            if not nonzero:
                break
            pivot = min(nonzero, key=lambda i: abs(M[i][col]))
            M[row], M[pivot] = M[pivot], M[row]
            if M[row][col] < 0:
                M[row] = [-x for x in M[row]]
            done = True
            for i in range(row + 1, m):
                if M[i][col] != 0:
                    q = M[i][col] // M[row][col]
                    M[i] = [a - q * b for a, b in zip(M[i], M[row])]
                    if M[i][col] != 0:
                        done = False
            if done:
                break
        if M[row][col] != 0:
            # Reduce the entries above the new pivot into [0, pivot).
            for i in range(row):
                q = M[i][col] // M[row][col]
                if q:
                    M[i] = [a - q * b for a, b in zip(M[i], M[row])]
            row += 1
    return [tuple(r) for r in M[:row]]


def _identity(k: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(k)] for i in range(k)]


def smith_normal_form(
    rows: Iterable[Sequence[int]], *, width: int | None = None
) -> tuple[tuple[int, ...], list[list[int]], list[list[int]]]:
    """Smith normal form with transforms: returns (divisors, U, V).

    U (m x m) and V (n x n) are unimodular and U @ M @ V is diagonal with the
    nonzero entries ``divisors`` in its leading positions; the divisors are
    positive and each divides the next.  ``width`` must be given when ``rows``
    is empty (the ambient dimension cannot be inferred from nothing).
    """
    M = [list(r) for r in rows]
    m = len(M)
    n = len(M[0]) if M else width
    if n is None:
        raise ValueError("width is required for an empty generator list")
    U = _identity(m)
    V = _identity(n)

    def combine_rows(i: int, j: int, a: int, b: int, c: int, d: int) -> None:
        # (row_i, row_j) <- (a*row_i + b*row_j, c*row_i + d*row_j), ad - bc = +-1
        for X in (M, U):
            ri, rj = X[i], X[j]
            X[i] = [a * p + b * q for p, q in zip(ri, rj)]
            X[j] = [c * p + d * q for p, q in zip(ri, rj)]

    def combine_cols(i: int, j: int, a: int, b: int, c: int, d: int) -> None:
        for X in (M, V):
            for row_ in X:
                p, q = row_[i], row_[j]
                row_[i] = a * p + b * q
                row_[j] = c * p + d * q

    t = 0
    while t < m and t < n:
        # Move some nonzero entry of the trailing submatrix to position (t, t).
        pivot = next(
            ((i, j) for i in range(t, m) for j in range(t, n) if M[i][j] != 0),
            None,
        )
        if pivot is None:
            break
        i0, j0 = pivot
        if i0 != t:
            M[i0], M[t] = M[t], M[i0]
            U[i0], U[t] = U[t], U[i0]
        if j0 != t:
            for X in (M, V):
                for row_ in X:
                    row_[j0], row_[t] = row_[t], row_[j0]

        while True:
            for i in range(t + 1, m):
                if M[i][t] != 0:
                    g, x, y = gcdex(M[t][t], M[i][t])
                    combine_rows(t, i, x, y, -(M[i][t] // g), M[t][t] // g)
            for j in range(t + 1, n):
                if M[t][j] != 0:
                    g, x, y = gcdex(M[t][t], M[t][j])
                    combine_cols(t, j, x, y, -(M[t][j] // g), M[t][t] // g)
            if any(M[i][t] != 0 for i in range(t + 1, m)):
                continue  # column ops disturbed the cleared column
            # Pivot must divide the whole trailing submatrix for the chain.
            offender = next(
                (
                    i
                    for i in range(t + 1, m)
                    for j in range(t + 1, n)
                    if M[i][j] % M[t][t] != 0
                ),
                None,
            )
            if offender is None:
                break
            combine_rows(t, offender, 1, 1, 0, 1)
        if M[t][t] < 0:
            M[t] = [-x for x in M[t]]
            U[t] = [-x for x in U[t]]
        t += 1

    divisors = tuple(M[i][i] for i in range(min(m, n)) if M[i][i] != 0)
    return divisors, U, V


def matmul(A: Sequence[Sequence[int]], B: Sequence[Sequence[int]]) -> list[list[int]]:
    cols = list(zip(*B)) if B else []
    return [[sum(a * b for a, b in zip(row, col)) for col in cols] for row in A]


def apply_column_transform(vector: Sequence[int], V: Sequence[Sequence[int]]) -> Vector:
    """Row vector times matrix: the coordinate change x -> x @ V."""
    return tuple(sum(x * V[i][j] for i, x in enumerate(vector)) for j in range(len(V)))


def determinant(matrix: Sequence[Sequence[int]]) -> int:
    """Exact determinant of a square integer matrix (fraction-free Bareiss)."""
    a = [list(r) for r in matrix]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def coordinates_in_basis(basis: Sequence[Vector], vector: Sequence[int]) -> Vector:
    """Coordinates of ``vector`` in an echelon (HNF) lattice basis.

    Requires the vector to lie in the lattice spanned by the basis rows; raises
    ValueError otherwise.  Back substitution down the echelon pivots keeps the
    arithmetic integral throughout.
    """
    residue = list(vector)
    coords = []
    for row in basis:
        pivot_col = next((j for j, x in enumerate(row) if x != 0), None)
        if pivot_col is None:
            raise ValueError("basis contains a zero row")
        q, r = divmod(residue[pivot_col], row[pivot_col])
        if r != 0:
            raise ValueError("vector is not in the lattice spanned by the basis")
        coords.append(q)
        residue = [a - q * b for a, b in zip(residue, row)]
    if any(residue):
        raise ValueError("vector is not in the lattice spanned by the basis")
    return tuple(coords)


@dataclass(frozen=True)
class AffineLatticeBasis:
    """The lattice generated by pairwise differences of a point set.

    ``basis`` is a canonical (HNF) basis of that lattice, ``rank`` its length,
    and ``elementary_divisors`` the invariant factors of the difference matrix,
    i.e. the elementary divisors of the lattice relative to its saturation in
    the ambient Z^n (all 1 exactly when the lattice is saturated).
    """

    rank: int
    basis: tuple[Vector, ...]
    elementary_divisors: tuple[int, ...]


def affine_lattice_basis(points: Sequence[Vector]) -> AffineLatticeBasis:
    """Basis and invariant factors of the difference lattice of ``points``."""
    if not points:
        raise ValueError("need at least one point")
    base = points[0]
    diffs = [tuple(a - b for a, b in zip(p, base)) for p in points[1:]]
    basis = hermite_normal_form(diffs)
    divisors, _, _ = smith_normal_form(diffs, width=len(base))
    return AffineLatticeBasis(
        rank=len(basis), basis=tuple(basis), elementary_divisors=divisors
    )


def affine_rank(points: Sequence[Vector]) -> int:
    """Dimension of the affine hull of the points."""
    if not points:
        return -1
    base = points[0]
    diffs = [tuple(a - b for a, b in zip(p, base)) for p in points[1:]]
    return len(hermite_normal_form(diffs))
