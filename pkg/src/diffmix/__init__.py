"""Difference polynomials in one indeterminate and mixed-ideal certificates."""

__version__ = "0.1.0"

from .poly import DiffPoly, IndexOverflowError, ParseError, Term, degree, eord, format_poly, parse, shift
from .witness import ScanReport, make_A, make_u

__all__ = [
    "DiffPoly", "IndexOverflowError", "ParseError", "ScanReport", "Term",
    "degree", "eord", "format_poly", "make_A", "make_u", "parse", "shift",
]
