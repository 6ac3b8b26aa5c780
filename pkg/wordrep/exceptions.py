"""
exceptions.py

Error types raised by the counting engine. Each one maps onto a CLI exit status
in `wordrep.pipeline.count_pipeline`.
"""


class WordRepError(Exception):
    """Base class for every domain error of the package."""


class SquareShapeError(WordRepError, ValueError):
    """W and C are only defined for m != n (square shapes carry D4 symmetry)."""


class OracleLimitError(WordRepError, RuntimeError):
    """Brute-force enumeration refused because the grid exceeds the cell limit."""


class InconsistencyError(WordRepError, ArithmeticError):
    """A formula produced a value that cannot be right (non-integral, not divisible...)."""


class MethodUnavailableError(WordRepError, ValueError):
    """The requested computation path has no formula for this quantity and shape."""
