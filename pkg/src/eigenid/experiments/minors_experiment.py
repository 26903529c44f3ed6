"""Magnitudes from principal-minor eigenvalues."""

from typing import Tuple

from ..core import HermitianMatrix, SquaredMagnitudes
from ..identity import eigenvector_magnitudes
from ..models import ExperimentName
from ..oracle import reference_magnitudes
from .base_experiment import BaseExperiment


class MinorsExperiment(BaseExperiment):
    """eigenvector_magnitudes(A) against |Q|^2 transposed."""

    name = ExperimentName.MINORS

    def compute(self, matrix: HermitianMatrix) -> Tuple[SquaredMagnitudes, SquaredMagnitudes]:
        return eigenvector_magnitudes(matrix), reference_magnitudes(matrix)
