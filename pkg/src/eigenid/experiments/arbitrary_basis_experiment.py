"""Magnitudes of eigenvector overlaps with a random orthonormal basis."""

from typing import Optional, Tuple

from ..core import HermitianMatrix, SquaredMagnitudes
from ..models import DeflationMode, ExperimentName
from ..oracle import random_orthonormal, reference_overlap_magnitudes
from ..projection import basis_overlap_magnitudes
from .base_experiment import BaseExperiment


class ArbitraryBasisExperiment(BaseExperiment):
    """basis_overlap_magnitudes(A, C) against |C*Q|^2 transposed."""

    name = ExperimentName.ARBITRARY_BASIS

    def __init__(
        self,
        eps: float,
        mode: DeflationMode = DeflationMode.RESTRICTION,
        seed: Optional[int] = None,
        basis_seed: int = 0,
    ):
        super().__init__(eps, mode, seed)
        self.basis_seed = basis_seed

    def compute(self, matrix: HermitianMatrix) -> Tuple[SquaredMagnitudes, SquaredMagnitudes]:
        basis = random_orthonormal(matrix.n, self.basis_seed)
        result = basis_overlap_magnitudes(matrix, basis, self.mode)
        return result, reference_overlap_magnitudes(matrix, basis)
