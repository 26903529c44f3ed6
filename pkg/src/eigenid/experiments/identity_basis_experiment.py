"""Magnitudes from projections onto the complements of e_1..e_n."""

from typing import Tuple

from ..core import HermitianMatrix, SquaredMagnitudes
from ..models import ExperimentName
from ..oracle import reference_magnitudes
from ..projection import OrthonormalBasis, basis_overlap_magnitudes
from .base_experiment import BaseExperiment


class IdentityBasisExperiment(BaseExperiment):
    """Projecting out e_j reproduces the minor-deletion result."""

    name = ExperimentName.IDENTITY_BASIS

    def compute(self, matrix: HermitianMatrix) -> Tuple[SquaredMagnitudes, SquaredMagnitudes]:
        basis = OrthonormalBasis.identity(matrix.n)
        result = basis_overlap_magnitudes(matrix, basis, self.mode)
        return result, reference_magnitudes(matrix)
