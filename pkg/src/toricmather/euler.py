"""Local Euler obstruction data over the face poset.

The table holds one integer Eu_{closure}(orbit) for every comparable pair of
faces.  Values are *data*, not something this package derives from first
principles: they come from the user's tables, from the smoothness default
(smooth chart => obstruction 1; the converse is false, so only missing
entries on provably smooth pairs are ever filled in), or from the curve
strategy (for 1-dimensional configurations the obstruction at an endpoint is
the curve multiplicity there).
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from typing import Any, Mapping

from .errors import (
    ConsistencyError,
    InputError,
    MissingEulerEntryError,
    NonUnitDiagonalError,
    UnknownFaceIdError,
    WrongDimensionError,
)
from .polytope import Face, FacePoset, curve_multiplicity, is_smooth_along

STRATEGIES = ("table", "smooth", "curve")

PROVENANCE_INPUT = "input"
PROVENANCE_DIAGONAL = "diagonal"
PROVENANCE_SMOOTH = "smooth-default"
PROVENANCE_ASSUMED = "assumed"
PROVENANCE_CURVE = "curve-multiplicity"
PROVENANCE_RESTRICTED = "restricted"


class SmoothnessAssumptionWarning(UserWarning):
    """Raised when Eu = 1 is assumed on faces the smoothness test rejects."""


@dataclass(frozen=True)
class EulerSpec:
    """Parsed ``euler`` input block: a strategy plus per-closure tables."""

    strategy: str = "table"
    tables: Mapping[str, Mapping[str, int]] = field(default_factory=dict)


def parse_euler_block(block: Mapping[str, Any] | None) -> EulerSpec:
    if block is None:
        return EulerSpec()
    strategy = block.get("strategy", "table")
    if strategy not in STRATEGIES:
        raise InputError(
            f"unknown euler strategy {strategy!r}; expected one of {STRATEGIES}"
        )
    raw_tables = block.get("tables", {})
    if not isinstance(raw_tables, Mapping):
        raise InputError('"tables" must be an object keyed by closure face id')
    if raw_tables and strategy != "table":
        raise InputError(f'euler tables are only used with strategy "table", got {strategy!r}')
    tables: dict[str, dict[str, int]] = {}
    for closure_id, row in raw_tables.items():
        if not isinstance(row, Mapping):
            raise InputError(f"euler table for closure {closure_id!r} must be an object")
        entries = {}
        for fid, value in row.items():
            if isinstance(value, bool) or not isinstance(value, int):
                raise InputError(
                    f"euler value for ({closure_id!r}, {fid!r}) must be an integer"
                )
            entries[str(fid)] = value
        tables[str(closure_id)] = entries
    return EulerSpec(strategy=strategy, tables=tables)


@dataclass
class EulerData:
    """Complete table of Eu_{closure}(orbit) over comparable face pairs.

    ``provenance`` records, per pair, whether the value was given explicitly
    or produced by a defaulting rule; ``spec`` keeps the original input so
    coherence checking can re-derive sub-configuration tables the same way.
    """

    entries: dict[tuple[str, str], int]
    provenance: dict[tuple[str, str], str]
    strategy: str
    spec: EulerSpec | None = None

    def value(self, closure: Face | str, face: Face | str) -> int:
        cid = closure if isinstance(closure, str) else closure.id
        fid = face if isinstance(face, str) else face.id
        return self.entries[(cid, fid)]

    def closure_row(self, closure: Face | str) -> dict[str, int]:
        cid = closure if isinstance(closure, str) else closure.id
        return {f: v for (c, f), v in self.entries.items() if c == cid}

    def as_tables(self) -> dict[str, dict[str, int]]:
        tables: dict[str, dict[str, int]] = {}
        for (cid, fid), v in sorted(self.entries.items()):
            tables.setdefault(cid, {})[fid] = v
        return tables


def _smooth_within_closure(poset: FacePoset, closure: Face, face: Face) -> bool:
    """Smoothness of the closure's own toric variety along the given orbit."""
    if closure.is_top:
        return is_smooth_along(face, poset)
    _, sub_poset, index_map = poset.sub_problem(closure)
    sub_face = sub_poset.face(poset.map_face_id(face, index_map))
    return is_smooth_along(sub_face, sub_poset)


def euler_from_input(poset: FacePoset, spec: EulerSpec) -> EulerData:
    """Build a complete Euler table from user tables plus smooth defaulting.

    Every comparable pair must end up with a value: explicit table entries
    win, diagonal entries are forced to 1 (an explicit non-1 diagonal is an
    error), and missing off-diagonal entries default to 1 only when the
    closure's chart is provably smooth along the orbit; otherwise the missing
    pair is reported as a hard error.
    """
    for closure_id, row in spec.tables.items():
        if not poset.has_face(closure_id):
            raise UnknownFaceIdError(closure_id, "closure key in euler tables")
        closure = poset.face(closure_id)
        for fid in row:
            if not poset.has_face(fid):
                raise UnknownFaceIdError(fid, f"entry under closure {closure_id!r}")
            if not poset.leq(poset.face(fid), closure):
                raise UnknownFaceIdError(
                    fid, f"face is not contained in closure {closure_id!r}"
                )

    entries: dict[tuple[str, str], int] = {}
    provenance: dict[tuple[str, str], str] = {}
    for closure in poset.faces:
        row = spec.tables.get(closure.id, {})
        for face in poset.subfaces(closure):
            key = (closure.id, face.id)
            if face.id == closure.id:
                if face.id in row and row[face.id] != 1:
                    raise NonUnitDiagonalError(closure.id, row[face.id])
                entries[key] = 1
                provenance[key] = (
                    PROVENANCE_INPUT if face.id in row else PROVENANCE_DIAGONAL
                )
            elif face.id in row:
                entries[key] = row[face.id]
                provenance[key] = PROVENANCE_INPUT
            elif _smooth_within_closure(poset, closure, face):
                entries[key] = 1
                provenance[key] = PROVENANCE_SMOOTH
            else:
                raise MissingEulerEntryError(closure.id, face.id)
    return EulerData(entries, provenance, strategy="table", spec=spec)


def euler_assume_smooth(poset: FacePoset) -> EulerData:
    """All-ones table; warns about faces the smoothness test rejects.

    Smoothness implies obstruction 1 but not conversely, so a warning-free
    run still certifies nothing beyond the user's own assumption.
    """
    suspicious = [
        f.id for f in poset.faces if not is_smooth_along(f, poset)
    ]
    if suspicious:
        warnings.warn(
            "assuming Euler obstruction 1 on faces that are not smooth charts: "
            + ", ".join(suspicious),
            SmoothnessAssumptionWarning,
            stacklevel=2,
        )
    entries = {}
    provenance = {}
    for closure in poset.faces:
        for face in poset.subfaces(closure):
            key = (closure.id, face.id)
            entries[key] = 1
            provenance[key] = (
                PROVENANCE_DIAGONAL if face.id == closure.id else PROVENANCE_ASSUMED
            )
    return EulerData(entries, provenance, strategy="smooth", spec=EulerSpec("smooth"))


def euler_curve_strategy(poset: FacePoset) -> EulerData:
    """Obstruction table of a monomial curve: endpoint multiplicities."""
    if poset.ambient_dim != 1:
        raise WrongDimensionError(1, poset.ambient_dim, "curve euler strategy")
    top = poset.top
    entries = {}
    provenance = {}
    for face in poset.faces:
        entries[(face.id, face.id)] = 1
        provenance[(face.id, face.id)] = PROVENANCE_DIAGONAL
    for vertex in poset.vertices:
        key = (top.id, vertex.id)
        entries[key] = curve_multiplicity(poset.config, vertex)
        provenance[key] = PROVENANCE_CURVE
    return EulerData(entries, provenance, strategy="curve", spec=EulerSpec("curve"))


def resolve_euler(
    poset: FacePoset, spec: EulerSpec, strategy_override: str | None = None
) -> EulerData:
    """Dispatch on the requested strategy."""
    strategy = strategy_override or spec.strategy
    if strategy == "table":
        return euler_from_input(poset, spec if spec.strategy == "table" else EulerSpec())
    if strategy == "smooth":
        return euler_assume_smooth(poset)
    if strategy == "curve":
        return euler_curve_strategy(poset)
    raise InputError(f"unknown euler strategy {strategy!r}")


def restrict_to_closure(
    data: EulerData, poset: FacePoset, closure: Face, index_map: dict[int, int]
) -> EulerData:
    """Euler data of a closure's standalone configuration, copied from the
    ambient table: entry (F, G) for G <= F <= closure, with ids re-indexed."""
    entries = {}
    provenance = {}
    tables: dict[str, dict[str, int]] = {}
    for sup in poset.subfaces(closure):
        sup_id = poset.map_face_id(sup, index_map)
        for sub in poset.subfaces(sup):
            sub_id = poset.map_face_id(sub, index_map)
            value = data.value(sup, sub)
            entries[(sup_id, sub_id)] = value
            provenance[(sup_id, sub_id)] = PROVENANCE_RESTRICTED
            tables.setdefault(sup_id, {})[sub_id] = value
    return EulerData(
        entries, provenance, strategy="table", spec=EulerSpec("table", tables)
    )


@dataclass(frozen=True)
class CoherenceViolation:
    kind: str
    closure_id: str
    face_id: str
    detail: str

    def __str__(self) -> str:
        return f"{self.kind} at ({self.closure_id!r}, {self.face_id!r}): {self.detail}"


def check_coherence(data: EulerData, poset: FacePoset) -> list[CoherenceViolation]:
    """Validate a complete table against the poset structure.

    Checks (a) every diagonal entry is 1, and (b) for each proper closure F,
    the row of F agrees with the top row that the same strategy and input
    produce for the standalone configuration of F's points.  Returns the list
    of violations (empty means coherent).
    """
    violations: list[CoherenceViolation] = []
    for face in poset.faces:
        value = data.entries.get((face.id, face.id))
        if value != 1:
            violations.append(
                CoherenceViolation(
                    "non-unit-diagonal", face.id, face.id, f"value {value}"
                )
            )
    for closure in poset.faces:
        if closure.is_top:
            continue
        try:
            sub_data, _, index_map = _standalone_data(data, poset, closure)
        except (InputError, ConsistencyError) as exc:
            violations.append(
                CoherenceViolation(
                    "restriction-underivable", closure.id, closure.id, str(exc)
                )
            )
            continue
        sub_top_id = poset.map_face_id(closure, index_map)
        for face in poset.subfaces(closure):
            ours = data.entries.get((closure.id, face.id))
            theirs = sub_data.entries.get(
                (sub_top_id, poset.map_face_id(face, index_map))
            )
            if ours != theirs:
                violations.append(
                    CoherenceViolation(
                        "restriction-mismatch",
                        closure.id,
                        face.id,
                        f"table has {ours}, standalone derivation gives {theirs}",
                    )
                )
    return violations


def _standalone_data(data: EulerData, poset: FacePoset, closure: Face):
    """Re-derive the closure's Euler data from the original spec, standalone."""
    _, sub_poset, index_map = poset.sub_problem(closure)
    if data.strategy in ("smooth", "curve"):
        # Proper closures of a curve are points, so the smooth table is the
        # correct standalone derivation for both strategies.  Suppress the
        # assumption warning: this is a re-derivation, not a new assumption.
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", SmoothnessAssumptionWarning)
            return euler_assume_smooth(sub_poset), sub_poset, index_map
    spec = data.spec if data.spec is not None else EulerSpec("table", data.as_tables())
    tables: dict[str, dict[str, int]] = {}
    members = set(closure.indices)
    for closure_id, row in spec.tables.items():
        if not poset.has_face(closure_id):
            continue
        sup = poset.face(closure_id)
        if not set(sup.indices) <= members:
            continue
        mapped_row = {}
        for fid, value in row.items():
            if poset.has_face(fid) and set(poset.face(fid).indices) <= members:
                mapped_row[poset.map_face_id(poset.face(fid), index_map)] = value
        tables[poset.map_face_id(sup, index_map)] = mapped_row
    sub_data = euler_from_input(sub_poset, EulerSpec("table", tables))
    return sub_data, sub_poset, index_map
