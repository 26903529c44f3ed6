"""Eigenvector element magnitudes from eigenvalues of principal minors.

For a Hermitian A with ascending eigenvalues w and eigenvectors q_i, and
x_jk the eigenvalues of the minor M_j (row and column j deleted),

    |q_ij|^2 = prod_k (w_i - x_jk) / prod_{k != i} (w_i - w_k)

The numerator runs over the minor's eigenvalues.
"""

import logging
from typing import Tuple

import numpy as np

from .config import settings
from .core import (
    HermitianMatrix,
    MinorSpectra,
    SquaredMagnitudes,
    eigendecompose,
    eigenvalues,
    gap_tolerance,
    parallel_map,
)
from .exceptions import (
    ConvergenceError,
    DegenerateSpectrumError,
    DimensionError,
    MinorIndexError,
    ShapeError,
)
from .models import Provenance

logger = logging.getLogger(__name__)


def minor(matrix: HermitianMatrix, j: int) -> HermitianMatrix:
    """The (n-1) x (n-1) principal minor with row and column j removed."""
    n = matrix.n
    if n < 2:
        raise DimensionError("a 1x1 matrix has an empty minor")
    if not 0 <= j < n:
        raise MinorIndexError(f"minor index {j} out of range for n={n}")
    keep = np.arange(n) != j
    return HermitianMatrix(matrix.entries[np.ix_(keep, keep)])


def minor_spectra(matrix: HermitianMatrix) -> MinorSpectra:
    """Row j: ascending eigenvalues of minor(A, j). Minors are solved in parallel."""
    if matrix.n < 2:
        raise DimensionError("minor spectra need n >= 2")

    def solve(j: int) -> np.ndarray:
        try:
            return eigenvalues(minor(matrix, j))
        except ConvergenceError as exc:
            raise exc.at_index(j) from exc

    return MinorSpectra(
        values=np.vstack(parallel_map(solve, matrix.n)),
        provenance=Provenance.MINOR_DELETION,
    )


def _ordered_product(factors: np.ndarray) -> np.ndarray:
    """Product over the last axis, multiplying smallest magnitudes first."""
    order = np.argsort(np.abs(factors), axis=-1)
    return np.prod(np.take_along_axis(factors, order, axis=-1), axis=-1)


def _signed_log_product(factors: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """(sign, log|product|) over the last axis."""
    with np.errstate(divide="ignore"):
        log_magnitude = np.log(np.abs(factors)).sum(axis=-1)
    return np.prod(np.sign(factors), axis=-1), log_magnitude


def gap_ratios(w: np.ndarray, spectra: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """Raw identity ratios for every (eigenvalue i, spectrum row j).

    Returns ``(ratios, poisoned)`` where ratios has shape (n, rows) and
    ``poisoned[i]`` is True when some gap |w_i - w_k| fell below the gap
    tolerance; poisoned rows hold 0.
    """
    w = np.asarray(w, dtype=np.float64)
    spectra = np.asarray(spectra, dtype=np.float64)
    n = w.shape[0]
    if w.ndim != 1 or spectra.ndim != 2 or spectra.shape[1] != n - 1:
        raise ShapeError(
            f"spectra of shape {spectra.shape} do not match {n} eigenvalues"
        )

    numerators = w[:, None, None] - spectra[None, :, :]
    gaps = (w[:, None] - w[None, :])[~np.eye(n, dtype=bool)].reshape(n, n - 1)

    small = np.abs(gaps) < gap_tolerance(w)
    poisoned = small.any(axis=1)
    gaps = np.where(small, 1.0, gaps)

    if n - 1 > settings.log_product_threshold:
        num_sign, num_log = _signed_log_product(numerators)
        den_sign, den_log = _signed_log_product(gaps)
        ratios = (num_sign * den_sign[:, None]) * np.exp(num_log - den_log[:, None])
    else:
        ratios = _ordered_product(numerators) / _ordered_product(gaps)[:, None]

    ratios[poisoned] = 0.0
    return ratios, poisoned


def squared_magnitudes_from_spectra(w: np.ndarray, spectra: MinorSpectra) -> SquaredMagnitudes:
    """R[i][j] = prod_k (w_i - x_jk) / prod_{k != i} (w_i - w_k).

    Values within the stochasticity tolerance outside [0, 1] are clamped;
    rows with a gap below the gap tolerance are flagged invalid. Values
    further out (spectra that do not interlace w) stay valid and are logged,
    so a comparison against a reference still reports them.
    """
    w = np.asarray(w, dtype=np.float64)
    if spectra.rows != w.shape[0]:
        raise ShapeError(f"{spectra.rows} spectrum rows for {w.shape[0]} eigenvalues")

    ratios, poisoned = gap_ratios(w, spectra.values)

    allowance = settings.stochastic_tol
    ratios = np.where((ratios < 0) & (ratios >= -allowance), 0.0, ratios)
    ratios = np.where((ratios > 1) & (ratios <= 1 + allowance), 1.0, ratios)
    out_of_range = (ratios < 0) | (ratios > 1)
    if out_of_range.any():
        logger.warning(
            "%d magnitudes outside [0, 1]; spectra may not interlace (%s)",
            int(out_of_range.sum()), spectra.provenance.value,
        )
    if poisoned.any():
        logger.warning(
            "eigenvalue gaps below %.3e poison rows %s",
            gap_tolerance(w), np.flatnonzero(poisoned).tolist(),
        )

    valid = np.repeat(~poisoned[:, None], w.shape[0], axis=1)
    return SquaredMagnitudes(values=ratios, valid=valid)


def require_valid(magnitudes: SquaredMagnitudes) -> SquaredMagnitudes:
    """Raise DegenerateSpectrumError if any entry is flagged."""
    if not magnitudes.all_valid:
        rows = magnitudes.invalid_rows
        raise DegenerateSpectrumError(
            f"degenerate spectrum: eigenvalues {rows} are within the gap tolerance "
            "of a neighbour",
            rows=rows,
            partial=magnitudes,
        )
    return magnitudes


def eigenvector_magnitudes(
    matrix: HermitianMatrix, allow_partial: bool = False
) -> SquaredMagnitudes:
    """R[i][j] estimates |q_ij|^2 from eigenvalues alone.

    With ``allow_partial`` a degenerate spectrum yields flagged rows instead
    of DegenerateSpectrumError.
    """
    w = eigendecompose(matrix).eigenvalues
    magnitudes = squared_magnitudes_from_spectra(w, minor_spectra(matrix))
    return magnitudes if allow_partial else require_valid(magnitudes)
