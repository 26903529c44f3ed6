"""Report and matrix file writers for eigenid."""

from .json_reporter import JSONReporter
from .matrix_io import load_matrix, save_matrix

__all__ = [
    "JSONReporter",
    "load_matrix",
    "save_matrix",
]
