"""Ingestion, validation, and normalization of lattice point configurations.

A configuration is an ordered list of N+1 distinct points of Z^n whose convex
hull is required to be n-dimensional.  The input order of the points is the
canonical index order 0..N used in every face identifier downstream, so
nothing here ever reorders points.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Mapping

from .errors import (
    DegenerateDimensionError,
    DuplicatePointError,
    EmptyInputError,
    InputError,
)
from .lattice import Vector, coordinates_in_basis, hermite_normal_form


@dataclass(frozen=True)
class PointConfiguration:
    """Raw input: an ordered tuple of integer points, optionally named."""

    points: tuple[Vector, ...]
    name: str | None = None

    @property
    def ambient_dim(self) -> int:
        if not self.points:
            raise EmptyInputError()
        return len(self.points[0])


@dataclass(frozen=True)
class ValidatedConfiguration:
    """A configuration whose invariants have been checked.

    ``ambient_dim`` is the verified dimension n of both the ambient lattice and
    the convex hull of the points; ``count`` is N+1.
    """

    points: tuple[Vector, ...]
    ambient_dim: int
    name: str | None = None

    @property
    def count(self) -> int:
        return len(self.points)


def _structural_check(config: PointConfiguration) -> None:
    if not config.points:
        raise EmptyInputError()
    n = len(config.points[0])
    for p in config.points:
        if len(p) != n:
            raise InputError("points must all have the same number of coordinates")
    seen: dict[Vector, int] = {}
    for i, p in enumerate(config.points):
        if p in seen:
            raise DuplicatePointError(seen[p], i)
        seen[p] = i


def validate(config: PointConfiguration) -> ValidatedConfiguration:
    """Check the configuration invariants and tag it with its dimensions.

    Rejects empty input, duplicate points, and configurations whose affine
    hull is smaller than the ambient dimension (the measured dimension is
    reported in the error).
    """
    _structural_check(config)
    n = config.ambient_dim
    base = config.points[0]
    diffs = [tuple(a - b for a, b in zip(p, base)) for p in config.points[1:]]
    measured = len(hermite_normal_form(diffs))
    if measured != n:
        raise DegenerateDimensionError(expected=n, measured=measured)
    return ValidatedConfiguration(
        points=config.points, ambient_dim=n, name=config.name
    )


def normalize_dimension(config: PointConfiguration) -> PointConfiguration:
    """Re-express the points in coordinates of their own affine lattice.

    The affine lattice is the first point plus the subgroup of Z^n generated
    by all pairwise differences.  The returned configuration lives in Z^d,
    d = rank of that subgroup, with the first point at the origin; the change
    of coordinates is a lattice isomorphism onto the generated lattice, so
    face structure and generated-lattice volumes are unchanged.  Idempotent:
    the canonical Hermite basis of Z^d is the identity.
    """
    _structural_check(config)
    base = config.points[0]
    diffs = [tuple(a - b for a, b in zip(p, base)) for p in config.points[1:]]
    basis = hermite_normal_form(diffs)
    new_points = tuple(
        coordinates_in_basis(basis, tuple(a - b for a, b in zip(p, base)))
        for p in config.points
    )
    return PointConfiguration(points=new_points, name=config.name)


def _as_int(value: Any, where: str) -> int:
    # bool is an int subclass; reject it along with floats and strings.
    if isinstance(value, bool) or not isinstance(value, int):
        raise InputError(f"{where}: coordinates must be integers, got {value!r}")
    return value


def parse_points(data: Any) -> tuple[Vector, ...]:
    if not isinstance(data, list):
        raise InputError('"points" must be an array of integer rows')
    points = []
    for i, row in enumerate(data):
        if not isinstance(row, list):
            raise InputError(f"point {i} must be an array of integers")
        points.append(tuple(_as_int(x, f"point {i}") for x in row))
    return tuple(points)


@dataclass(frozen=True)
class InputDocument:
    """Parsed contents of an input file: the configuration plus the raw
    euler block (interpreted by the euler module), if present."""

    configuration: PointConfiguration
    euler_block: Mapping[str, Any] | None = None


def parse_input(data: Any) -> InputDocument:
    """Parse a decoded JSON document into a configuration and euler block."""
    if not isinstance(data, dict):
        raise InputError("input document must be a JSON object")
    if "points" not in data:
        raise InputError('input document is missing the "points" array')
    name = data.get("name")
    if name is not None and not isinstance(name, str):
        raise InputError('"name" must be a string')
    euler_block = data.get("euler")
    if euler_block is not None and not isinstance(euler_block, dict):
        raise InputError('"euler" must be an object')
    config = PointConfiguration(points=parse_points(data["points"]), name=name)
    return InputDocument(configuration=config, euler_block=euler_block)


def read_input_file(path: str | Path) -> InputDocument:
    """Load and parse an input JSON file."""
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from exc
    return parse_input(data)
