"""Two constructions of the ternary [66,10,36] Pace code and exhaustive checks of its properties."""

from pacecode.errors import DimensionError, EnumerationTooLarge, PreconditionError, StructuralError

__version__ = "0.1.0"

__all__ = [
    "DimensionError",
    "EnumerationTooLarge",
    "PreconditionError",
    "StructuralError",
    "__version__",
]
