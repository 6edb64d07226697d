"""Exact-arithmetic q-series toolkit for the j-function / smallest-parts circle
of identities, with a verification CLI."""

from .errors import QsptError
from .hecke import HeckeContext
from .partitions import StatTables
from .report import VerificationReport
from .series import LaurentSeries

__version__ = "0.1.0"

__all__ = [
    "HeckeContext",
    "LaurentSeries",
    "QsptError",
    "StatTables",
    "VerificationReport",
    "__version__",
]
