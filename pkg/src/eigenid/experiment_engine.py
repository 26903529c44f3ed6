"""Experiment engine that coordinates all verification experiments."""

import logging
from typing import Dict, Iterable, List, Optional, Type

from .config import settings
from .core import HermitianMatrix
from .experiments import (
    ArbitraryBasisExperiment,
    BaseExperiment,
    IdentityBasisExperiment,
    MinorsExperiment,
)
from .models import DeflationMode, ExperimentName, ExperimentReport, ReportFile
from .oracle import random_hermitian

logger = logging.getLogger(__name__)


class ExperimentEngine:
    """Runs any subset of experiments over one or many matrices."""

    def __init__(self) -> None:
        self.experiments: Dict[ExperimentName, Type[BaseExperiment]] = {
            ExperimentName.MINORS: MinorsExperiment,
            ExperimentName.IDENTITY_BASIS: IdentityBasisExperiment,
            ExperimentName.ARBITRARY_BASIS: ArbitraryBasisExperiment,
        }

    def run(
        self,
        matrix: HermitianMatrix,
        experiments: Iterable[ExperimentName] = (ExperimentName.ALL,),
        eps: Optional[float] = None,
        mode: DeflationMode = DeflationMode.RESTRICTION,
        seed: Optional[int] = None,
        basis_seed: Optional[int] = None,
    ) -> ReportFile:
        """Run the selected experiments on one matrix.

        ``seed`` is recorded in the reports; the arbitrary basis is drawn from
        ``basis_seed`` (default: seed + 1, or 0 when there is no seed).
        """
        eps = settings.default_eps if eps is None else eps
        if basis_seed is None:
            basis_seed = 0 if seed is None else seed + 1

        reports: List[ExperimentReport] = []
        for name in ExperimentName.expand(list(experiments)):
            experiment = self._build(name, eps, mode, seed, basis_seed)
            reports.append(experiment.run(matrix))
        return ReportFile(reports=reports)

    def run_random(
        self,
        n: int,
        seeds: Iterable[int],
        experiments: Iterable[ExperimentName] = (ExperimentName.ALL,),
        eps: Optional[float] = None,
        mode: DeflationMode = DeflationMode.RESTRICTION,
        complex_flag: bool = True,
    ) -> ReportFile:
        """Run the selected experiments on one generated matrix per seed."""
        names = list(experiments)
        reports: List[ExperimentReport] = []
        for seed in seeds:
            matrix = random_hermitian(n, seed, complex_flag)
            reports.extend(self.run(matrix, names, eps, mode, seed).reports)
        return ReportFile(reports=reports)

    def get_supported_experiments(self) -> List[ExperimentName]:
        """Get list of supported experiments."""
        return list(self.experiments.keys())

    def _build(
        self,
        name: ExperimentName,
        eps: float,
        mode: DeflationMode,
        seed: Optional[int],
        basis_seed: int,
    ) -> BaseExperiment:
        experiment_class = self.experiments[name]
        if experiment_class is ArbitraryBasisExperiment:
            return ArbitraryBasisExperiment(eps, mode, seed, basis_seed=basis_seed)
        return experiment_class(eps, mode, seed)


# Global experiment engine instance
experiment_engine = ExperimentEngine()
