"""Seeded instance generators and direct (eigenvector-based) references.

All randomness comes from numpy's PCG64 bit generator seeded explicitly;
uniform draws use ``Generator.random`` (53-bit mantissa in [0, 1)), normal
draws ``Generator.standard_normal``. Identical (n, seed) reproduce identical
bytes on any platform numpy supports.
"""

from typing import Sequence

import numpy as np

from .core import HermitianMatrix, SquaredMagnitudes, eigendecompose
from .exceptions import ShapeError
from .projection import OrthonormalBasis, UnitVector


def generator(seed: int) -> np.random.Generator:
    """PCG64-backed generator for one seed."""
    return np.random.Generator(np.random.PCG64(seed))


def random_hermitian(n: int, seed: int, complex_flag: bool = True) -> HermitianMatrix:
    """A + A* for A with entries uniform in [0, 1) (real and imaginary parts)."""
    rng = generator(seed)
    a = rng.random((n, n))
    if complex_flag:
        a = a + rng.random((n, n)) * 1j
    return HermitianMatrix(a + a.conj().T)


def _orthonormalize(gaussian: np.ndarray) -> np.ndarray:
    """Q factor of a QR decomposition, with diag(R) made real positive."""
    q, r = np.linalg.qr(gaussian)
    diagonal = np.diag(r)
    phases = np.where(diagonal == 0, 1.0, diagonal / np.abs(diagonal))
    return q * phases


def random_orthonormal(n: int, seed: int) -> OrthonormalBasis:
    """Real orthogonal basis from a seeded Gaussian matrix."""
    return OrthonormalBasis(_orthonormalize(generator(seed).standard_normal((n, n))))


def random_unitary(n: int, seed: int) -> OrthonormalBasis:
    """Complex unitary basis from a seeded complex Gaussian matrix."""
    rng = generator(seed)
    gaussian = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    return OrthonormalBasis(_orthonormalize(gaussian))


def random_unit_vector(n: int, seed: int, complex_flag: bool = False) -> UnitVector:
    """Direction drawn uniformly on the (real or complex) unit sphere."""
    rng = generator(seed)
    v = rng.standard_normal(n)
    if complex_flag:
        v = v + 1j * rng.standard_normal(n)
    return UnitVector.normalized(v)


def planted_spectrum(eigenvalues: Sequence[float], seed: int) -> HermitianMatrix:
    """Real symmetric V diag(eigenvalues) V^T for a random orthogonal V."""
    values = np.asarray(eigenvalues, dtype=np.float64)
    v = random_orthonormal(values.shape[0], seed).columns
    a = (v * values) @ v.T
    return HermitianMatrix((a + a.T) / 2)


def reference_magnitudes(matrix: HermitianMatrix) -> SquaredMagnitudes:
    """R[i][j] = |Q[j][i]|^2 straight from the eigendecomposition."""
    return SquaredMagnitudes.fully_valid(eigendecompose(matrix).squared_magnitudes())


def reference_overlap_magnitudes(
    matrix: HermitianMatrix, basis: OrthonormalBasis
) -> SquaredMagnitudes:
    """R[i][j] = |c_j* q_i|^2, i.e. |S|^2 transposed for S = C*Q."""
    if basis.n != matrix.n:
        raise ShapeError(f"basis of size {basis.n} for a {matrix.n}x{matrix.n} matrix")
    s = basis.columns.conj().T @ eigendecompose(matrix).eigenvectors
    return SquaredMagnitudes.fully_valid((np.abs(s) ** 2).T)


def max_abs_diff(result: SquaredMagnitudes, reference: SquaredMagnitudes) -> float:
    """Largest |R - ref| over entries valid in R (0.0 if none are)."""
    if result.values.shape != reference.values.shape:
        raise ShapeError(
            f"cannot compare {result.values.shape} with {reference.values.shape}"
        )
    diff = np.abs(result.values - reference.values)[result.valid]
    return float(diff.max()) if diff.size else 0.0
