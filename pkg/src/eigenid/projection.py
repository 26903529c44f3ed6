"""Rank-one projector algebra and spectra of projected matrices.

A unit vector c defines P = I - cc*. The eigenvalues of PAP are those of A
compressed to the complement of c plus one artificial zero. Restriction
computes the compression directly as B*AB on an orthonormal basis B of the
complement; drop-smallest removes the smallest-magnitude eigenvalue of PAP,
which is wrong whenever A itself has an eigenvalue nearer zero than the
roundoff of the artificial one.
"""

import logging
import warnings
from dataclasses import dataclass

import numpy as np

from .config import settings
from .core import (
    HermitianMatrix,
    MinorSpectra,
    SquaredMagnitudes,
    eigendecompose,
    eigenvalues,
    parallel_map,
)
from .exceptions import (
    AmbiguousDeflationWarning,
    ConvergenceError,
    DimensionError,
    NormalizationError,
    ShapeError,
)
from .identity import require_valid, squared_magnitudes_from_spectra
from .models import DeflationMode

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class UnitVector:
    """Complex (or real) n-vector c with c*c = 1."""

    entries: np.ndarray

    def __post_init__(self) -> None:
        array = np.array(self.entries, copy=True)
        if array.ndim != 1 or array.shape[0] == 0:
            raise ShapeError(f"expected a non-empty vector, got shape {array.shape}")
        dtype = np.complex128 if np.iscomplexobj(array) else np.float64
        array = array.astype(dtype)
        norm_error = abs(float(np.vdot(array, array).real) - 1.0)
        if norm_error > settings.unit_tol:
            raise NormalizationError(f"vector norm deviates from 1 by {norm_error:.3e}")
        array.setflags(write=False)
        object.__setattr__(self, "entries", array)

    @classmethod
    def normalized(cls, value: np.ndarray) -> "UnitVector":
        array = np.asarray(value)
        norm = np.linalg.norm(array)
        if norm == 0:
            raise NormalizationError("cannot normalize the zero vector")
        return cls(array / norm)

    @classmethod
    def standard(cls, n: int, j: int) -> "UnitVector":
        """The standard basis vector e_j."""
        e = np.zeros(n)
        e[j] = 1.0
        return cls(e)

    @property
    def n(self) -> int:
        return self.entries.shape[0]


@dataclass(frozen=True)
class OrthonormalBasis:
    """n x n matrix C whose columns c_j are orthonormal (C*C = I)."""

    columns: np.ndarray

    def __post_init__(self) -> None:
        array = np.array(self.columns, copy=True)
        if array.ndim != 2 or array.shape[0] != array.shape[1]:
            raise DimensionError(f"expected a square basis matrix, got shape {array.shape}")
        dtype = np.complex128 if np.iscomplexobj(array) else np.float64
        array = array.astype(dtype)
        error = float(np.abs(array.conj().T @ array - np.eye(array.shape[0])).max())
        if error > settings.orthonormality_tol:
            raise NormalizationError(f"basis is not orthonormal: max|C*C - I| = {error:.3e}")
        array.setflags(write=False)
        object.__setattr__(self, "columns", array)

    @classmethod
    def identity(cls, n: int) -> "OrthonormalBasis":
        return cls(np.eye(n))

    @property
    def n(self) -> int:
        return self.columns.shape[0]

    def column(self, j: int) -> UnitVector:
        return UnitVector.normalized(self.columns[:, j])


def projector(c: UnitVector) -> HermitianMatrix:
    """P = I - cc*."""
    return HermitianMatrix(np.eye(c.n) - np.outer(c.entries, c.entries.conj()))


def complement_basis(c: UnitVector) -> np.ndarray:
    """Orthonormal basis B (n x (n-1)) of the complement of c.

    Columns 2..n of the Householder reflector H = I - 2vv*/(v*v) with
    v = c + phase(c_1) e_1, which maps c to -phase(c_1) e_1.
    """
    entries = c.entries
    lead = entries[0]
    phase = lead / abs(lead) if lead != 0 else 1.0
    v = entries.astype(np.result_type(entries, phase), copy=True)
    v[0] += phase
    scale = 2.0 / float(np.vdot(v, v).real)
    return np.eye(c.n, dtype=v.dtype)[:, 1:] - scale * np.outer(v, v[1:].conj())


def _check_pair(matrix: HermitianMatrix, c: UnitVector) -> None:
    if matrix.n < 2:
        raise DimensionError("projected spectra need n >= 2")
    if c.n != matrix.n:
        raise ShapeError(f"constraint of length {c.n} for a {matrix.n}x{matrix.n} matrix")


def projected_spectrum(
    matrix: HermitianMatrix, c: UnitVector, mode: DeflationMode = DeflationMode.RESTRICTION
) -> np.ndarray:
    """Ascending n-1 stationary values of x*Ax on the unit sphere with c*x = 0."""
    _check_pair(matrix, c)

    if mode is DeflationMode.RESTRICTION:
        basis = complement_basis(c)
        restricted = basis.conj().T @ matrix.entries @ basis
        return eigenvalues(HermitianMatrix((restricted + restricted.conj().T) / 2))

    p = projector(c).entries
    spectrum = eigenvalues(HermitianMatrix(p @ matrix.entries @ p))
    order = np.argsort(np.abs(spectrum), kind="stable")
    smallest = np.abs(spectrum[order[:2]])
    if smallest[1] - smallest[0] <= settings.ambiguous_drop_tol:
        logger.warning(
            "ambiguous deflation: |%.3e| and |%.3e| both candidates for the projector zero",
            spectrum[order[0]], spectrum[order[1]],
        )
        warnings.warn(
            "two smallest-magnitude eigenvalues of PAP are indistinguishable",
            AmbiguousDeflationWarning,
            stacklevel=2,
        )
    return np.sort(spectrum[order[1:]])


def projected_spectra(
    matrix: HermitianMatrix,
    basis: OrthonormalBasis,
    mode: DeflationMode = DeflationMode.RESTRICTION,
) -> MinorSpectra:
    """Row j: projected_spectrum(A, c_j, mode) for each basis column c_j."""
    if basis.n != matrix.n:
        raise ShapeError(f"basis of size {basis.n} for a {matrix.n}x{matrix.n} matrix")

    def solve(j: int) -> np.ndarray:
        try:
            return projected_spectrum(matrix, basis.column(j), mode)
        except ConvergenceError as exc:
            raise exc.at_index(j) from exc

    return MinorSpectra(
        values=np.vstack(parallel_map(solve, matrix.n)),
        provenance=mode.provenance,
    )


def basis_overlap_magnitudes(
    matrix: HermitianMatrix,
    basis: OrthonormalBasis,
    mode: DeflationMode = DeflationMode.RESTRICTION,
    allow_partial: bool = False,
) -> SquaredMagnitudes:
    """R[i][j] estimates |c_j* q_i|^2, i.e. |S|^2 transposed for S = C*Q."""
    w = eigendecompose(matrix).eigenvalues
    magnitudes = squared_magnitudes_from_spectra(w, projected_spectra(matrix, basis, mode))
    return magnitudes if allow_partial else require_valid(magnitudes)
