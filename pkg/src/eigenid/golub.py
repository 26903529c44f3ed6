"""Constraint vectors that produce prescribed stationary values.

The stationary values of x*Ax subject to x*x = 1 and c*x = 0 are the n-1
eigenvalues of A compressed to the complement of c. Conversely, writing
c = Qd in the eigenbasis of A, any targets x interlacing the eigenvalues w
fix the weights

    d_j^2 = prod_k (w_j - x_k) / prod_{k != j} (w_j - w_k)

and leave one unit phase per coefficient free (a sign in the real case).
"""

import itertools
import logging
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence, Tuple

import numpy as np

from .config import settings
from .core import (
    HermitianMatrix,
    SpectralDecomposition,
    gap_tolerance,
    interlacing_tolerance,
    interlacing_violation,
)
from .exceptions import DegenerateSpectrumError, InfeasibleTargetsError, ShapeError
from .identity import gap_ratios
from .models import DeflationMode
from .projection import UnitVector, projected_spectrum

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ConstraintRecovery:
    """Targets, eigenbasis weights, chosen phases and the resulting constraint."""

    targets: np.ndarray
    weights: np.ndarray
    signs: np.ndarray
    constraint: UnitVector

    @property
    def coefficients(self) -> np.ndarray:
        """d = signs * sqrt(weights), the constraint in eigenvector coordinates."""
        return self.signs * np.sqrt(self.weights)


def check_interlacing(w: Sequence[float], x: Sequence[float], tol: float) -> bool:
    """True iff w_k - tol <= x_k <= w_{k+1} + tol for every k."""
    return interlacing_violation(np.asarray(w), np.asarray(x), tol) is None


def constraint_weights(w: Sequence[float], x: Sequence[float]) -> np.ndarray:
    """Squared eigenbasis coefficients d_j^2 of the constraint achieving targets x."""
    w = np.asarray(w, dtype=np.float64)
    x = np.sort(np.asarray(x, dtype=np.float64))
    if w.ndim != 1 or x.shape != (w.shape[0] - 1,):
        raise ShapeError(f"expected {w.shape[0] - 1} targets for {w.shape[0]} eigenvalues")

    gaps = np.diff(w)
    if gaps.size and gaps.min() < gap_tolerance(w):
        rows = np.flatnonzero(gaps < gap_tolerance(w)).tolist()
        raise DegenerateSpectrumError(
            f"eigenvalues {rows} are within {gap_tolerance(w):.3e} of their successor",
            rows=rows,
        )

    tol = interlacing_tolerance(w)
    violation = interlacing_violation(w, x, tol)
    if violation is not None:
        raise InfeasibleTargetsError(
            f"target x[{violation}] = {x[violation]:.17g} lies outside "
            f"[{w[violation]:.17g}, {w[violation + 1]:.17g}]",
            index=violation,
        )

    ratios, _ = gap_ratios(w, x[None, :])
    weights = ratios[:, 0]

    # Factor signs are exact, so d_j^2 < 0 only when some target sits on the
    # wrong side of w_j, which the interlacing check confines to within tol.
    pinned = (np.abs(w[:, None] - x[None, :]) <= tol).any(axis=1)
    if pinned.any():
        logger.debug(
            "zeroing weights %s (targets pinned to eigenvalues)",
            np.flatnonzero(pinned).tolist(),
        )
        weights = np.where(pinned, 0.0, weights)
        weights = weights / weights.sum()
    return weights


def _phases(signs: Optional[Sequence[complex]], n: int) -> np.ndarray:
    """Validated unit phases, all +1 by default."""
    if signs is None:
        return np.ones(n)
    phases = np.asarray(signs)
    if phases.shape != (n,):
        raise ShapeError(f"expected {n} signs, got shape {phases.shape}")
    if np.abs(np.abs(phases) - 1).max() > settings.unit_tol:
        raise ValueError("signs must be unit-magnitude (+1, -1 or complex phases)")
    return phases if np.iscomplexobj(phases) else phases.astype(np.float64)


def recover(
    decomposition: SpectralDecomposition,
    targets: Sequence[float],
    signs: Optional[Sequence[complex]] = None,
) -> ConstraintRecovery:
    """Full recovery record for the constraint c = Q (signs * sqrt(d^2))."""
    x = np.sort(np.asarray(targets, dtype=np.float64))
    weights = constraint_weights(decomposition.eigenvalues, x)
    phases = _phases(signs, decomposition.n)
    c = decomposition.eigenvectors @ (phases * np.sqrt(weights))
    return ConstraintRecovery(
        targets=x,
        weights=weights,
        signs=phases,
        constraint=UnitVector.normalized(c),
    )


def recover_constraint(
    decomposition: SpectralDecomposition,
    targets: Sequence[float],
    signs: Optional[Sequence[complex]] = None,
) -> UnitVector:
    """Unit constraint vector whose stationary values are ``targets``."""
    return recover(decomposition, targets, signs).constraint


def stationary_values(matrix: HermitianMatrix, c: UnitVector) -> np.ndarray:
    """Stationary values of x*Ax on the unit sphere intersected with c*x = 0."""
    return projected_spectrum(matrix, c, DeflationMode.RESTRICTION)


def sign_patterns(n: int) -> Iterator[Tuple[float, ...]]:
    """All 2^n assignments of +1/-1."""
    return itertools.product((1.0, -1.0), repeat=n)
