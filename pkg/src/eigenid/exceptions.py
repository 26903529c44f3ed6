"""Exception hierarchy for eigenid.

Every error carries an ``exit_code`` that the CLI maps onto process exit
status: 0 pass, 1 numeric mismatch, 2 degenerate input, 3 infeasible
targets, 4 I/O or parse error.
"""

from typing import TYPE_CHECKING, Optional, Sequence

import numpy as np

if TYPE_CHECKING:
    from .core import SquaredMagnitudes


class EigenIdError(Exception):
    """Base class for all eigenid errors."""

    exit_code = 1


class DimensionError(EigenIdError, ValueError):
    """Matrix is not square, or too small for the requested operation."""


class ShapeError(EigenIdError, ValueError):
    """Operands have mismatched shapes."""


class MinorIndexError(EigenIdError, IndexError):
    """Row/column index outside the matrix."""


class NotHermitianError(EigenIdError, ValueError):
    """Matrix differs from its conjugate transpose beyond tolerance."""

    def __init__(self, deviation: float, tol: float):
        super().__init__(
            f"matrix is not Hermitian: max|A - A*| = {deviation:.3e} exceeds {tol:.3e}"
        )
        self.deviation = deviation
        self.tol = tol


class NonFiniteError(EigenIdError, ValueError):
    """Matrix holds NaN or infinite entries."""


class NormalizationError(EigenIdError, ValueError):
    """Vector or basis is not normalized within tolerance."""


class ConvergenceError(EigenIdError, np.linalg.LinAlgError):
    """Eigensolver failed to converge.

    ``info`` is the LAPACK count of off-diagonal elements of the tridiagonal
    form that did not converge; ``index`` names the minor or basis column
    being solved, when there is one.
    """

    def __init__(self, message: str, info: int = 0, index: Optional[int] = None):
        if index is not None:
            message = f"{message} (index {index})"
        super().__init__(message)
        self.info = info
        self.index = index

    def at_index(self, index: int) -> "ConvergenceError":
        """Copy of this error tagged with the offending minor/basis index."""
        return ConvergenceError(str(self), info=self.info, index=index)


class DegenerateSpectrumError(EigenIdError):
    """Eigenvalue gaps too small for the identity's denominators."""

    exit_code = 2

    def __init__(
        self,
        message: str,
        rows: Sequence[int] = (),
        partial: Optional["SquaredMagnitudes"] = None,
    ):
        super().__init__(message)
        self.rows = list(rows)
        self.partial = partial


class InfeasibleTargetsError(EigenIdError, ValueError):
    """Target stationary values do not interlace the eigenvalues."""

    exit_code = 3

    def __init__(self, message: str, index: int):
        super().__init__(message)
        self.index = index


class DataFileError(EigenIdError):
    """Matrix, target, or report file could not be read, parsed, or written."""

    exit_code = 4

    def __init__(self, message: str, path: Optional[str] = None):
        if path is not None:
            message = f"{path}: {message}"
        super().__init__(message)
        self.path = path


class AmbiguousDeflationWarning(UserWarning):
    """The two smallest-magnitude eigenvalues of PAP are indistinguishable."""
