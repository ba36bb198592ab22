"""Exact face lattice, lattice volumes, quotients, and geometric predicates.

The face poset of P = Conv(A) is built entirely in integer arithmetic: facet
hyperplanes are enumerated over point subsets, every proper face is obtained
as an intersection of facets, and each face records *all* configuration
points lying on it (not only vertices).  Faces are identified by the
dash-joined sorted list of those point indices, e.g. ``"0-3"``.

Volumes follow the generated-lattice convention: the normalized volume of a
face is measured in the affine lattice generated by the face's own points,
which is the convention that assigns volume 1 to the segment from (0,0) to
(2,0) when no intermediate point is present.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import gcd

from .configuration import (
    PointConfiguration,
    ValidatedConfiguration,
    normalize_dimension,
    validate,
)
from .errors import ConsistencyError, UnknownFaceIdError, WrongDimensionError
from .lattice import (
    Vector,
    affine_rank,
    coordinates_in_basis,
    determinant,
    apply_column_transform,
    hermite_normal_form,
    smith_normal_form,
)


@dataclass(frozen=True)
class Face:
    """A nonempty face of P, identified by the configuration points on it."""

    indices: tuple[int, ...]
    dim: int
    is_top: bool = False

    @property
    def id(self) -> str:
        return "-".join(str(i) for i in self.indices)


def face_id(indices) -> str:
    return "-".join(str(i) for i in sorted(indices))


def _sub(p: Vector, q: Vector) -> Vector:
    return tuple(a - b for a, b in zip(p, q))


def _dot(p: Vector, q: Vector) -> int:
    return sum(a * b for a, b in zip(p, q))


def _cofactor_normal(diffs: list[Vector], n: int) -> Vector | None:
    """Integer normal to the hyperplane spanned by n-1 difference vectors.

    Component j is (-1)^j times the minor obtained by deleting column j; the
    zero vector signals that the differences do not span a hyperplane.
    """
    normal = []
    for j in range(n):
        minor = [[row[k] for k in range(n) if k != j] for row in diffs]
        normal.append((-1) ** j * determinant(minor))
    if all(x == 0 for x in normal):
        return None
    return tuple(normal)


class FacePoset:
    """All nonempty faces of Conv(A) with containment order and volumes.

    Faces are stored sorted by (dim, indices), which is the deterministic
    order used in all output.  The poset is immutable after construction;
    the only internal mutation is a memo of sub-configuration posets.
    """

    def __init__(self, config: ValidatedConfiguration, faces: list[Face],
                 volumes: dict[str, int]):
        self.config = config
        self.faces = tuple(sorted(faces, key=lambda f: (f.dim, f.indices)))
        self.volumes = volumes
        self._by_id = {f.id: f for f in self.faces}
        self._members = {f.id: frozenset(f.indices) for f in self.faces}
        self._sub_problems: dict[str, tuple[ValidatedConfiguration, "FacePoset", dict[int, int]]] = {}

    @property
    def ambient_dim(self) -> int:
        return self.config.ambient_dim

    @property
    def top(self) -> Face:
        return self.faces[-1]

    @property
    def vertices(self) -> list[Face]:
        return [f for f in self.faces if f.dim == 0]

    def face(self, fid: str) -> Face:
        try:
            return self._by_id[fid]
        except KeyError:
            raise UnknownFaceIdError(fid) from None

    def has_face(self, fid: str) -> bool:
        return fid in self._by_id

    def leq(self, sub: Face, sup: Face) -> bool:
        return self._members[sub.id] <= self._members[sup.id]

    def subfaces(self, face: Face) -> list[Face]:
        """All faces contained in ``face``, including itself."""
        return [g for g in self.faces if self.leq(g, face)]

    def superfaces(self, face: Face) -> list[Face]:
        return [g for g in self.faces if self.leq(face, g)]

    def facets_of(self, face: Face) -> list[Face]:
        return [g for g in self.faces if g.dim == face.dim - 1 and self.leq(g, face)]

    def codim(self, face: Face) -> int:
        return self.ambient_dim - face.dim

    def faces_of_codim(self, i: int) -> list[Face]:
        return [f for f in self.faces if self.codim(f) == i]

    def points_of(self, face: Face) -> tuple[Vector, ...]:
        pts = self.config.points
        return tuple(pts[i] for i in face.indices)

    def volume(self, face: Face) -> int:
        return self.volumes[face.id]

    def sub_problem(self, face: Face):
        """Standalone validated configuration, poset, and index map for a face.

        The sub-configuration consists of the face's points re-indexed by
        position (original order kept) and dimension-normalized; the map sends
        original point indices to sub-configuration indices.  The sub-poset is
        the face poset of that standalone configuration, which coincides with
        the interval below ``face`` under the index map.
        """
        if face.id not in self._sub_problems:
            sub_points = self.points_of(face)
            index_map = {orig: pos for pos, orig in enumerate(face.indices)}
            raw = PointConfiguration(points=sub_points, name=None)
            sub_config = validate(normalize_dimension(raw))
            sub_poset = build_face_poset(sub_config)
            self._check_interval_isomorphism(face, sub_poset, index_map)
            self._sub_problems[face.id] = (sub_config, sub_poset, index_map)
        return self._sub_problems[face.id]

    def map_face_id(self, face: Face, index_map: dict[int, int]) -> str:
        return face_id(index_map[i] for i in face.indices)

    def _check_interval_isomorphism(self, face: Face, sub_poset: "FacePoset",
                                    index_map: dict[int, int]) -> None:
        interval_ids = {self.map_face_id(g, index_map) for g in self.subfaces(face)}
        sub_ids = set(sub_poset._by_id)
        if interval_ids != sub_ids:
            raise ConsistencyError(
                f"face poset of the sub-configuration of {face.id!r} does not "
                f"match the interval below it: {sorted(interval_ids)} vs "
                f"{sorted(sub_ids)}"
            )


def _facet_point_sets(points: tuple[Vector, ...], n: int) -> set[frozenset[int]]:
    """Member-index sets of all facets of Conv(points), by exhaustive search.

    Every facet hyperplane is spanned by some n affinely independent points of
    the configuration, so it suffices to test the hyperplane through each
    n-subset for being supporting.
    """
    facets: set[frozenset[int]] = set()
    indices = range(len(points))
    for subset in combinations(indices, n):
        base = points[subset[0]]
        diffs = [_sub(points[i], base) for i in subset[1:]]
        normal = _cofactor_normal(diffs, n)
        if normal is None:
            continue
        offset = _dot(normal, base)
        values = [_dot(normal, p) - offset for p in points]
        if all(v <= 0 for v in values) or all(v >= 0 for v in values):
            members = frozenset(i for i, v in enumerate(values) if v == 0)
            facets.add(members)
    return facets


@lru_cache(maxsize=None)
def build_face_poset(config: ValidatedConfiguration) -> FacePoset:
    """Enumerate every nonempty face of Conv(A) with exact membership.

    Proper faces are exactly the nonempty intersections of facets; the top
    face carries all indices.  Dimensions come from the rank of each face's
    difference lattice, volumes from a pulling triangulation in the face's
    generated-lattice coordinates.  Results are memoized per configuration;
    posets are immutable so sharing is safe.
    """
    points = config.points
    n = config.ambient_dim
    all_indices = frozenset(range(len(points)))

    if n == 0:
        top = Face(indices=tuple(sorted(all_indices)), dim=0, is_top=True)
        return FacePoset(config, [top], {top.id: 1})

    facet_sets = _facet_point_sets(points, n)
    face_sets: set[frozenset[int]] = set(facet_sets)
    frontier = set(facet_sets)
    while frontier:
        new: set[frozenset[int]] = set()
        for f in frontier:
            for g in facet_sets:
                h = f & g
                if h and h not in face_sets:
                    new.add(h)
        face_sets |= new
        frontier = new
    face_sets.discard(all_indices)

    faces = [
        Face(
            indices=tuple(sorted(members)),
            dim=affine_rank([points[i] for i in sorted(members)]),
        )
        for members in face_sets
    ]
    faces.append(Face(indices=tuple(sorted(all_indices)), dim=n, is_top=True))

    poset = FacePoset(config, faces, volumes={})
    poset.volumes.update(
        {face.id: _normalized_volume(poset, face) for face in poset.faces}
    )
    return poset


def _pulling_triangulation(poset: FacePoset, face: Face) -> list[tuple[int, ...]]:
    """Triangulate a face by coning its lowest-index member over the facets
    not containing it; recursion over the poset interval below the face."""
    if face.dim == 0:
        return [face.indices]
    apex = face.indices[0]
    simplices = []
    for facet in poset.facets_of(face):
        if apex in facet.indices:
            continue
        for s in _pulling_triangulation(poset, facet):
            simplices.append(s + (apex,))
    return simplices


def _normalized_volume(poset: FacePoset, face: Face) -> int:
    pts = poset.config.points
    d = face.dim
    if d == 0:
        return 1
    base = pts[face.indices[0]]
    basis = hermite_normal_form([_sub(pts[i], base) for i in face.indices[1:]])
    coords = {
        i: coordinates_in_basis(basis, _sub(pts[i], base)) for i in face.indices
    }
    total = 0
    for simplex in _pulling_triangulation(poset, face):
        origin = coords[simplex[0]]
        rows = [_sub(coords[i], origin) for i in simplex[1:]]
        total += abs(determinant(rows))
    return total


def normalized_volume(face: Face, poset: FacePoset) -> int:
    """Normalized lattice volume of a face, in its generated affine lattice.

    This is d! times the Euclidean d-volume after the lattice-isomorphic
    change of coordinates onto the lattice generated by the face's points;
    vertices have volume 1.
    """
    if face.id not in poset.volumes:
        raise UnknownFaceIdError(face.id, "face does not belong to this poset")
    return poset.volumes[face.id]


@dataclass(frozen=True)
class QuotientConfiguration:
    """Z^n modulo the difference lattice of a face's points.

    ``torsion`` lists the invariant factors > 1 (each divides the next);
    ``images`` gives, for every configuration point, its class in the
    quotient as (torsion coordinates..., free coordinates...).
    """

    free_rank: int
    torsion: tuple[int, ...]
    images: tuple[tuple[int, ...], ...]


def quotient_configuration(face: Face, poset: FacePoset) -> QuotientConfiguration:
    """Quotient of the ambient lattice by a face's difference lattice."""
    pts = poset.config.points
    n = poset.ambient_dim
    base = pts[face.indices[0]]
    diffs = [_sub(pts[i], base) for i in face.indices[1:]]
    divisors, _, V = smith_normal_form(diffs, width=n)
    rank = len(divisors)
    torsion = tuple(d for d in divisors if d > 1)
    images = []
    for p in pts:
        y = apply_column_transform(_sub(p, base), V)
        torsion_part = tuple(
            y[i] % divisors[i] for i in range(rank) if divisors[i] > 1
        )
        free_part = tuple(y[i] for i in range(rank, n))
        images.append(torsion_part + free_part)
    return QuotientConfiguration(
        free_rank=n - rank, torsion=torsion, images=tuple(images)
    )


def is_smooth_along(face: Face, poset: FacePoset) -> bool:
    """Whether the affine chart of X_A along the face's orbit is smooth.

    The chart at the face is smooth iff the quotient of Z^n by the face's
    difference lattice is torsion-free and the images of all points a - v
    (v a member of the face) generate the quotient as a semigroup on a
    lattice basis: some codim-many images form a basis with every other
    image a nonnegative integer combination of them.

    The quotient is taken of the ambient Z^n, so a configuration whose own
    difference lattice is a proper sublattice reports not-smooth even along
    the open orbit.  That direction is the safe one (it only ever blocks
    obstruction defaulting, never fabricates a 1); normalizing the
    configuration onto its generated lattice gives the intrinsic answer.
    """
    pts = poset.config.points
    n = poset.ambient_dim
    base = pts[face.indices[0]]
    diffs = [_sub(pts[i], base) for i in face.indices[1:]]
    divisors, _, V = smith_normal_form(diffs, width=n)
    if any(d > 1 for d in divisors):
        return False
    rank = len(divisors)
    m = n - rank
    if m == 0:
        return True
    image_set = set()
    for p in pts:
        y = apply_column_transform(_sub(p, base), V)[rank:]
        if any(y):
            image_set.add(y)
    images = sorted(image_set)
    if len(images) < m:
        return False
    for candidate in combinations(images, m):
        det = determinant(candidate)
        if abs(det) != 1:
            continue
        if all(_nonneg_in_basis(w, candidate, det) for w in images):
            return True
    return False


def _nonneg_in_basis(w: tuple[int, ...], basis, det: int) -> bool:
    # Cramer coordinates; integrality is automatic since |det| = 1.
    m = len(basis)
    for j in range(m):
        replaced = [w if k == j else basis[k] for k in range(m)]
        if determinant(replaced) * det < 0:
            return False
    return True


def is_pyramid(config: ValidatedConfiguration) -> bool:
    """Whether some point sits strictly off the hyperplane of all the others.

    For a full-dimensional configuration this is equivalent to: removing the
    point drops the affine hull dimension to n-1 (the remaining points then
    span a single hyperplane avoiding the removed apex).
    """
    n = config.ambient_dim
    if config.count < 2:
        return False
    for k in range(len(config.points)):
        rest = [p for i, p in enumerate(config.points) if i != k]
        if affine_rank(rest) == n - 1:
            return True
    return False


def curve_multiplicity(config: ValidatedConfiguration, vertex: Face) -> int:
    """Multiplicity of the monomial curve of a 1-dimensional configuration at
    an endpoint: the smallest nonzero coordinate once the generated lattice is
    rescaled to Z and the endpoint moved to 0."""
    if config.ambient_dim != 1:
        raise WrongDimensionError(1, config.ambient_dim, "curve multiplicity")
    coords = [p[0] for p in config.points]
    v = coords[vertex.indices[0]]
    offsets = [abs(x - v) for x in coords if x != v]
    g = 0
    for x in coords:
        g = gcd(g, abs(x - coords[0]))
    return min(offsets) // g


def sub_configuration(
    poset: FacePoset, face: Face
) -> tuple[ValidatedConfiguration, dict[int, int]]:
    """Standalone configuration of a face's points plus the index map."""
    sub_config, _, index_map = poset.sub_problem(face)
    return sub_config, index_map
