from __future__ import annotations

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from .complexes import ValidationReport


class ADCError(Exception):

    """Base class for every domain error raised by the adc package."""


class DegreeMismatchError(ADCError, ValueError):

    """Raised when two chain vectors of different degrees are combined."""

    def __init__(self, left: int, right: int, operation: str = "combine"):
        self.left = left
        self.right = right
        super().__init__(f"Cannot {operation} vectors of degree {left} and {right}.")


class UnknownBasisElementError(ADCError, KeyError):

    """Raised when a basis id is not part of the complex."""

    def __init__(self, basis_id: str):
        self.basis_id = basis_id
        super().__init__(f"Unknown basis element '{basis_id}'.")

    def __str__(self) -> str:
        return self.args[0]


class ComplexValidationError(ADCError):

    """Raised when an operation needs a valid complex and gets an invalid one."""

    def __init__(self, report: ValidationReport):
        self.report = report
        super().__init__(report.summary())


class CellValidationError(ADCError):

    """Raised when a double sequence is not a cell of the requested kind."""

    def __init__(self, report: ValidationReport):
        self.report = report
        super().__init__(report.summary())


class CompositionError(ADCError):

    """Raised when d+_n x differs from d-_n y."""

    def __init__(self, level: int, degree: int):
        self.level = level
        self.degree = degree
        super().__init__(f"Cells are not #{level}-composable: boundaries first differ in degree {degree}.")


class DecompositionError(ADCError):
    pass


class NotLoopFreeError(DecompositionError):

    """Raised when decomposition needs a loop-free basis and the relation has a cycle."""

    def __init__(self, level: int, cycle: list[str]):
        self.level = level
        self.cycle = cycle
        super().__init__(f"Basis is not loop-free at level {level}: {' -> '.join(cycle)}.")


class InvalidDimensionSequenceError(ADCError, ValueError):
    pass


class UnsupportedComplexError(ADCError):

    """Raised when an operation needs the basis cone and gets a predicate submonoid."""


class DocumentParseError(ADCError):

    """Raised for malformed complex, cell or word documents."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None, path: str | None = None):
        self.line = line
        self.column = column
        self.path = path
        location = ""
        if line is not None:
            location = f" (line {line}, column {column})"
        elif path:
            location = f" (at {path})"
        super().__init__(f"{message}{location}")


class DimensionError(ADCError, ValueError):

    """Raised when a cell is asked for a class in a degree below its dimension."""
