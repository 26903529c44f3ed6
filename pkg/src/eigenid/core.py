"""Domain types, Hermitian validation and the dense eigensolver contract."""

import logging
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, List, Optional, Sequence, TypeVar, Union

import numpy as np
from scipy.linalg import get_lapack_funcs

from .config import settings
from .exceptions import (
    ConvergenceError,
    DimensionError,
    NonFiniteError,
    NotHermitianError,
    ShapeError,
)
from .models import Provenance

logger = logging.getLogger(__name__)

T = TypeVar("T")
ArrayLike = Union[np.ndarray, Sequence]


def _frozen(array: np.ndarray, dtype=None) -> np.ndarray:
    array = np.array(array, dtype=dtype, copy=True)
    array.setflags(write=False)
    return array


@dataclass(frozen=True)
class HermitianMatrix:
    """Dense n x n Hermitian matrix (real symmetric as a special case).

    Construction only checks squareness; use :meth:`from_array` or
    :func:`validate_hermitian` for the Hermitian check itself.
    """

    entries: np.ndarray

    def __post_init__(self) -> None:
        array = np.asarray(self.entries)
        if array.ndim != 2 or array.shape[0] != array.shape[1]:
            raise DimensionError(f"expected a square matrix, got shape {array.shape}")
        if array.shape[0] == 0:
            raise DimensionError("matrix must have at least one row")
        dtype = np.complex128 if np.iscomplexobj(array) else np.float64
        object.__setattr__(self, "entries", _frozen(array, dtype))

    @classmethod
    def from_array(
        cls, value: ArrayLike, tol: Optional[float] = None, symmetrize: bool = False
    ) -> "HermitianMatrix":
        """Build and validate; ``symmetrize`` replaces A with (A + A*)/2 first."""
        matrix = cls(np.asarray(value))
        require_finite(matrix)
        if symmetrize:
            deviation = hermitian_deviation(matrix)
            if deviation > 0:
                logger.warning("symmetrizing input (max|A - A*| = %.3e)", deviation)
            a = matrix.entries
            matrix = cls((a + a.conj().T) / 2)
        require_hermitian(matrix, tol)
        return matrix

    @property
    def n(self) -> int:
        return self.entries.shape[0]

    @property
    def is_complex(self) -> bool:
        return np.iscomplexobj(self.entries)

    @property
    def max_norm(self) -> float:
        return float(np.abs(self.entries).max())


@dataclass(frozen=True)
class SpectralDecomposition:
    """A = Q diag(w) Q*, eigenvalues ascending, eigenvectors as columns of Q."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    def __post_init__(self) -> None:
        w = _frozen(self.eigenvalues, np.float64)
        q = _frozen(self.eigenvectors)
        if w.ndim != 1 or q.shape != (w.shape[0], w.shape[0]):
            raise ShapeError(f"eigenvalues {w.shape} do not match eigenvectors {q.shape}")
        if np.any(np.diff(w) < 0):
            raise ValueError("eigenvalues must be ascending")
        object.__setattr__(self, "eigenvalues", w)
        object.__setattr__(self, "eigenvectors", q)

    @property
    def n(self) -> int:
        return self.eigenvalues.shape[0]

    def orthonormality_error(self) -> float:
        q = self.eigenvectors
        return float(np.abs(q.conj().T @ q - np.eye(self.n)).max())

    def residual(self, matrix: HermitianMatrix) -> float:
        q = self.eigenvectors
        return float(np.abs(matrix.entries @ q - q * self.eigenvalues).max())

    def squared_magnitudes(self) -> np.ndarray:
        """|Q|^2 elementwise, transposed: row i belongs to eigenvalue i."""
        return (np.abs(self.eigenvectors) ** 2).T


@dataclass(frozen=True)
class MinorSpectra:
    """n x (n-1) table: row j holds the ascending spectrum of the j-th deflated matrix."""

    values: np.ndarray
    provenance: Provenance

    def __post_init__(self) -> None:
        array = _frozen(self.values, np.float64)
        if array.ndim != 2 or array.shape[1] != array.shape[0] - 1:
            raise ShapeError(f"expected an n x (n-1) table, got shape {array.shape}")
        if np.any(np.diff(array, axis=1) < 0):
            raise ValueError("each row must be sorted ascending")
        object.__setattr__(self, "values", array)

    @property
    def rows(self) -> int:
        return self.values.shape[0]

    @property
    def cols(self) -> int:
        return self.values.shape[1]

    def interlacing_violations(self, w: np.ndarray, tol: Optional[float] = None) -> List[int]:
        """Rows that fail w_k - tol <= x_jk <= w_{k+1} + tol."""
        tol = interlacing_tolerance(w) if tol is None else tol
        return [
            j for j, row in enumerate(self.values)
            if interlacing_violation(w, row, tol) is not None
        ]


@dataclass(frozen=True)
class SquaredMagnitudes:
    """n x n table R of squared magnitudes, with a validity mask.

    Row i belongs to eigenvalue w_i, column j to basis vector j. Entries whose
    row denominator fell below the gap tolerance are marked invalid and hold 0.
    """

    values: np.ndarray
    valid: np.ndarray

    def __post_init__(self) -> None:
        values = _frozen(self.values, np.float64)
        valid = _frozen(self.valid, bool)
        if values.ndim != 2 or values.shape[0] != values.shape[1] or valid.shape != values.shape:
            raise ShapeError(f"values {values.shape} and mask {valid.shape} must be n x n")
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "valid", valid)

    @classmethod
    def fully_valid(cls, values: np.ndarray) -> "SquaredMagnitudes":
        return cls(values=values, valid=np.ones(np.shape(values), dtype=bool))

    @property
    def n(self) -> int:
        return self.values.shape[0]

    @property
    def all_valid(self) -> bool:
        return bool(self.valid.all())

    @property
    def invalid_rows(self) -> List[int]:
        return [int(i) for i in np.flatnonzero(~self.valid.all(axis=1))]

    def stochasticity_error(self) -> float:
        """Largest deviation of a row or column sum from 1."""
        rows = np.abs(self.values.sum(axis=1) - 1).max()
        cols = np.abs(self.values.sum(axis=0) - 1).max()
        return float(max(rows, cols))

    def is_doubly_stochastic(self, tol: Optional[float] = None) -> bool:
        tol = settings.stochastic_tol if tol is None else tol
        return (
            self.all_valid
            and bool((self.values >= 0).all())
            and self.stochasticity_error() <= tol
        )


def as_matrix(value: Union[HermitianMatrix, ArrayLike]) -> HermitianMatrix:
    """Wrap an array as a HermitianMatrix (squareness checked, nothing else)."""
    return value if isinstance(value, HermitianMatrix) else HermitianMatrix(np.asarray(value))


def hermitian_deviation(matrix: Union[HermitianMatrix, ArrayLike]) -> float:
    """max|A_ij - conj(A_ji)| (NaN if A holds NaN)."""
    a = as_matrix(matrix).entries
    return float(np.abs(a - a.conj().T).max())


def hermitian_tolerance(matrix: HermitianMatrix) -> float:
    """Default tolerance, relative to max|A_ij|."""
    scale = matrix.max_norm
    return settings.hermitian_tol * (scale if scale > 0 else 1.0)


def validate_hermitian(matrix: Union[HermitianMatrix, ArrayLike], tol: float) -> bool:
    """True iff max|A_ij - conj(A_ji)| <= tol. Non-square input raises DimensionError."""
    return hermitian_deviation(matrix) <= tol


def require_finite(matrix: HermitianMatrix) -> None:
    """Raise NonFiniteError if any entry is NaN or infinite."""
    if not np.isfinite(matrix.entries).all():
        raise NonFiniteError("matrix has NaN or infinite entries")


def require_hermitian(matrix: HermitianMatrix, tol: Optional[float] = None) -> None:
    """Raise NonFiniteError or NotHermitianError unless A is a usable Hermitian matrix.

    ``tol`` defaults to :func:`hermitian_tolerance`.
    """
    require_finite(matrix)
    tol = hermitian_tolerance(matrix) if tol is None else tol
    if not validate_hermitian(matrix, tol):
        raise NotHermitianError(hermitian_deviation(matrix), tol)


def _lapack_eigh(entries: np.ndarray, compute_vectors: bool):
    """Divide-and-conquer eigensolver (heevd or syevd) on the upper triangle."""
    driver = "heevd" if np.iscomplexobj(entries) else "syevd"
    (solver,) = get_lapack_funcs((driver,), (entries,))
    w, v, info = solver(entries, compute_v=int(compute_vectors), lower=0)
    if info < 0:
        raise ConvergenceError(f"{driver}: illegal value in argument {-info}", info=info)
    if info > 0:
        logger.error("%s failed to converge (info=%d, n=%d)", driver, info, entries.shape[0])
        raise ConvergenceError(f"{driver} failed to converge", info=info)
    return w, v


def fix_phases(vectors: np.ndarray) -> np.ndarray:
    """Scale each column so its largest-magnitude element is real positive.

    Ties go to the lowest index (argmax returns the first maximum).
    """
    pivots = np.argmax(np.abs(vectors), axis=0)
    pivot_values = vectors[pivots, np.arange(vectors.shape[1])]
    phases = pivot_values / np.abs(pivot_values)
    fixed = vectors * phases.conj()
    if not np.iscomplexobj(vectors):
        fixed = fixed.real
    return fixed


def eigendecompose(matrix: HermitianMatrix) -> SpectralDecomposition:
    """Ascending eigenvalues and phase-normalized unit eigenvectors of A."""
    require_hermitian(matrix)

    w, v = _lapack_eigh(matrix.entries, compute_vectors=True)
    decomposition = SpectralDecomposition(eigenvalues=w, eigenvectors=fix_phases(v))

    ortho = decomposition.orthonormality_error()
    residual = decomposition.residual(matrix)
    scale = matrix.max_norm if matrix.max_norm > 0 else 1.0
    if not (ortho < settings.orthonormality_tol and residual < settings.residual_tol * scale):
        raise ConvergenceError(
            f"eigendecomposition rejected: orthonormality {ortho:.3e}, residual {residual:.3e}"
        )
    return decomposition


def eigenvalues(matrix: HermitianMatrix) -> np.ndarray:
    """Ascending eigenvalues only."""
    w, _ = _lapack_eigh(matrix.entries, compute_vectors=False)
    return w


def gap_tolerance(w: np.ndarray) -> float:
    """Eigenvalue gap below which identity denominators count as degenerate."""
    w = np.asarray(w)
    return settings.gap_tol_scale * (float(w.max() - w.min()) + 1.0)


def interlacing_tolerance(w: np.ndarray) -> float:
    """Slack allowed when checking that a spectrum interlaces w."""
    w = np.asarray(w)
    return settings.interlacing_tol_scale * float(w.max() - w.min())


def interlacing_violation(w: np.ndarray, x: np.ndarray, tol: float) -> Optional[int]:
    """First k with x_k outside [w_k - tol, w_{k+1} + tol], or None."""
    w = np.asarray(w, dtype=np.float64)
    x = np.asarray(x, dtype=np.float64)
    if x.shape != (w.shape[0] - 1,):
        raise ShapeError(f"expected {w.shape[0] - 1} values to interlace {w.shape[0]}, got {x.shape}")
    bad = (x < w[:-1] - tol) | (x > w[1:] + tol)
    return int(np.argmax(bad)) if bad.any() else None


def worker_count() -> int:
    """EIGENID_THREADS, or the CPU count when it is 0."""
    if settings.threads > 0:
        return settings.threads
    return os.cpu_count() or 1


def parallel_map(func: Callable[[int], T], count: int) -> List[T]:
    """Evaluate func(0..count-1) on a thread pool; results in index order."""
    workers = min(worker_count(), count)
    if workers <= 1:
        return [func(j) for j in range(count)]
    with ThreadPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(func, range(count)))
