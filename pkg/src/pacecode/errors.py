"""Exception types shared across the package."""

from __future__ import annotations


class DimensionError(ValueError):
    """Operands have incompatible shapes."""


class PreconditionError(ValueError):
    """An argument violates the documented precondition of an operation."""


class StructuralError(RuntimeError):
    """A computed object fails a structural invariant it must satisfy.

    These indicate corrupted constants or a broken derivation, never bad
    user input.
    """


class EnumerationTooLarge(ValueError):
    """Exhaustive enumeration was requested beyond the dimension guard."""
