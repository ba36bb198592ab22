"""Exception types shared across the package.

Problems with user-supplied data (point files, Euler tables) derive from
``InputError``; disagreements between two computations that must agree derive
from ``ConsistencyError``.  The command line maps the former to exit code 2
and the latter to exit code 3.
"""


class ToricMatherError(Exception):
    """Base class for all errors raised by this package."""


class InputError(ToricMatherError):
    """Invalid user input: files, point configurations, or Euler tables."""


class EmptyInputError(InputError):
    def __init__(self) -> None:
        super().__init__("configuration contains no points")


class DuplicatePointError(InputError):
    def __init__(self, first: int, second: int) -> None:
        super().__init__(f"points {first} and {second} are identical")
        self.indices = (first, second)


class DegenerateDimensionError(InputError):
    """Affine hull of the points is smaller than the ambient dimension."""

    def __init__(self, expected: int, measured: int) -> None:
        super().__init__(
            f"affine hull has dimension {measured}, expected {expected}"
            " (use dimension normalization for lower-dimensional input)"
        )
        self.expected = expected
        self.measured = measured


class UnknownFaceIdError(InputError):
    def __init__(self, face_id: str, detail: str = "") -> None:
        message = f"unknown face id {face_id!r}"
        if detail:
            message += f": {detail}"
        super().__init__(message)
        self.face_id = face_id


class NonUnitDiagonalError(InputError):
    def __init__(self, face_id: str, value: int) -> None:
        super().__init__(
            f"diagonal Euler obstruction of closure {face_id!r} must be 1, got {value}"
        )
        self.face_id = face_id
        self.value = value


class MissingEulerEntryError(InputError):
    """A non-smooth pair has no Euler obstruction value and cannot be defaulted."""

    def __init__(self, closure_id: str, face_id: str) -> None:
        super().__init__(
            f"no Euler obstruction given for orbit {face_id!r} inside closure"
            f" {closure_id!r}, and the closure is not smooth along it;"
            " supply the value explicitly"
        )
        self.closure_id = closure_id
        self.face_id = face_id


class WrongDimensionError(InputError):
    def __init__(self, expected: int, measured: int, context: str) -> None:
        super().__init__(f"{context} requires dimension {expected}, got {measured}")
        self.expected = expected
        self.measured = measured


class ConsistencyError(ToricMatherError):
    """Two computations that are mathematically forced to agree did not."""
