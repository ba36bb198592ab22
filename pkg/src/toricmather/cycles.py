"""Constructible-function calculus on the orbit poset; CSM and Mather cycles.

Cycles are formal integer combinations of orbit closures, stored as one
coefficient per face; constructible functions store one value per orbit.
The transform between them is the unitriangular matrix of local Euler
obstructions: a cycle sum(c_F [closure_F]) maps to the function whose value
on an orbit O is sum(c_F * Eu_{closure_F}(O)).

Two independent routes compute the Chern-Mather cycle: directly, as the
obstruction-weighted sum of orbit closures, and recursively, by solving for
the cycle whose transform is the constant function 1 and expanding each
proper closure's Mather cycle from its standalone sub-configuration.  The
test suite asserts the two agree coefficient-by-coefficient.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import ConsistencyError
from .euler import EulerData, restrict_to_closure
from .polytope import FacePoset


@dataclass(frozen=True)
class ConstructibleFunction:
    """Integer value per orbit, keyed by face id."""

    values: dict[str, int]

    def __getitem__(self, fid: str) -> int:
        return self.values[fid]

    def is_constant_one(self) -> bool:
        return all(v == 1 for v in self.values.values())


@dataclass(frozen=True)
class CycleVector:
    """Integer coefficient per orbit closure, keyed by face id."""

    coefficients: dict[str, int]

    def __getitem__(self, fid: str) -> int:
        return self.coefficients[fid]

    def as_dict(self) -> dict[str, int]:
        return dict(self.coefficients)


def canonical_face_order(poset: FacePoset) -> tuple[str, ...]:
    """Linear extension of the poset with larger faces first."""
    return tuple(
        f.id for f in sorted(poset.faces, key=lambda f: (-f.dim, f.indices))
    )


def _check_order(poset: FacePoset, order: Iterable[str]) -> tuple[str, ...]:
    order = tuple(order)
    ids = {f.id for f in poset.faces}
    if set(order) != ids or len(order) != len(ids):
        raise ValueError("order must list every face id exactly once")
    seen: set[str] = set()
    for fid in order:
        face = poset.face(fid)
        for sup in poset.superfaces(face):
            if sup.id != fid and sup.id not in seen:
                raise ValueError("order is not a linear extension (larger first)")
        seen.add(fid)
    return order


@dataclass(frozen=True)
class ObstructionMatrix:
    """The cycle-to-function transform in a fixed face order.

    ``rows[i][j]`` is the obstruction of closure ``order[i]`` along orbit
    ``order[j]`` when the latter is contained in the former, else 0; any
    linear extension with larger faces first makes this unitriangular.
    """

    order: tuple[str, ...]
    rows: tuple[tuple[int, ...], ...]

    def entry(self, closure_id: str, face_id: str) -> int:
        i = self.order.index(closure_id)
        j = self.order.index(face_id)
        return self.rows[i][j]

    def is_unitriangular(self) -> bool:
        for i in range(len(self.order)):
            if self.rows[i][i] != 1:
                return False
            for j in range(i):
                if self.rows[i][j] != 0:
                    return False
        return True

    def apply(self, cycle: CycleVector) -> ConstructibleFunction:
        """Transform a cycle into the constructible function it represents."""
        values = {}
        for j, fid in enumerate(self.order):
            values[fid] = sum(
                cycle.coefficients[cid] * self.rows[i][j]
                for i, cid in enumerate(self.order)
            )
        return ConstructibleFunction(values)


def obstruction_matrix(
    data: EulerData, poset: FacePoset, order: Iterable[str] | None = None
) -> ObstructionMatrix:
    """Matrix of pairwise Euler obstructions over a linear extension."""
    order = _check_order(poset, order) if order else canonical_face_order(poset)
    rows = []
    for cid in order:
        closure = poset.face(cid)
        row = []
        for fid in order:
            face = poset.face(fid)
            row.append(data.value(closure, face) if poset.leq(face, closure) else 0)
        rows.append(tuple(row))
    return ObstructionMatrix(order=order, rows=tuple(rows))


def indicator_coefficients(
    data: EulerData, poset: FacePoset, order: Iterable[str] | None = None
) -> dict[str, int]:
    """Coefficients making the transform of the full cycle the constant 1.

    Solves, by forward substitution down the unitriangular system, for the
    unique integers c_F on proper faces with

        transform([X] + sum(c_F [closure_F])) = 1  on every orbit.

    The top face's coefficient is fixed at 1 and reported as 0 here (it is
    not an unknown).  Any linear extension with larger faces first gives the
    same solution; the order parameter exists so tests can assert that.
    """
    order = _check_order(poset, order) if order else canonical_face_order(poset)
    top_id = poset.top.id
    coeffs: dict[str, int] = {top_id: 0}
    for fid in order:
        if fid == top_id:
            continue
        face = poset.face(fid)
        acc = data.value(top_id, fid)
        for sup in poset.superfaces(face):
            if sup.id in (fid, top_id):
                continue
            acc += coeffs[sup.id] * data.value(sup, face)
        coeffs[fid] = 1 - acc
    return coeffs


def csm_cycle(poset: FacePoset) -> CycleVector:
    """The CSM cycle of a toric variety: every orbit closure once."""
    return CycleVector({f.id: 1 for f in poset.faces})


def mather_cycle(data: EulerData, poset: FacePoset) -> CycleVector:
    """Chern-Mather cycle: each orbit closure weighted by the obstruction of
    the whole variety along that orbit."""
    top = poset.top
    return CycleVector({f.id: data.value(top, f) for f in poset.faces})


def mather_cycle_recursive(data: EulerData, poset: FacePoset) -> CycleVector:
    """Chern-Mather cycle by structural recursion over sub-configurations.

    Mirrors the inductive computation: solve for the indicator coefficients,
    then subtract each proper closure's own Mather cycle (computed afresh
    from its standalone configuration and restricted table) with that
    coefficient from the sum of all closures.  For a 1-dimensional variety
    this reduces to the two-endpoint base case; a point is its own cycle.
    """
    coeffs = {f.id: 1 for f in poset.faces}
    if len(poset.faces) == 1:
        return CycleVector(coeffs)
    solved = indicator_coefficients(data, poset)
    for alpha in poset.faces:
        if alpha.is_top or solved[alpha.id] == 0:
            continue
        _, sub_poset, index_map = poset.sub_problem(alpha)
        sub_data = restrict_to_closure(data, poset, alpha, index_map)
        sub_cm = mather_cycle_recursive(sub_data, sub_poset)
        for beta in poset.subfaces(alpha):
            mapped = poset.map_face_id(beta, index_map)
            if mapped not in sub_cm.coefficients:
                raise ConsistencyError(
                    f"face {beta.id!r} has no image {mapped!r} in the "
                    f"sub-configuration of {alpha.id!r}"
                )
            coeffs[beta.id] -= solved[alpha.id] * sub_cm[mapped]
    return CycleVector(coeffs)


def degree_sequence(cycle: CycleVector, poset: FacePoset) -> tuple[int, ...]:
    """Degrees of a cycle by codimension: the codimension-i entry sums
    coefficient times normalized volume over all codimension-i faces."""
    n = poset.ambient_dim
    return tuple(
        sum(cycle[f.id] * poset.volume(f) for f in poset.faces_of_codim(i))
        for i in range(n + 1)
    )


def euler_characteristic(poset: FacePoset) -> int:
    """Topological Euler characteristic of the toric variety: the number of
    torus-fixed points, i.e. of vertices of the polytope."""
    return len(poset.vertices)
