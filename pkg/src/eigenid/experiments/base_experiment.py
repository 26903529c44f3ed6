"""Base class for all verification experiments."""

import logging
import time
from abc import ABC, abstractmethod
from typing import Optional, Tuple

from ..core import HermitianMatrix, SquaredMagnitudes
from ..exceptions import DegenerateSpectrumError
from ..models import DeflationMode, ExperimentName, ExperimentReport, FailureReason
from ..oracle import max_abs_diff

logger = logging.getLogger(__name__)


class BaseExperiment(ABC):
    """Compares an eigenvalue-only magnitude table against a direct reference."""

    name: ExperimentName

    def __init__(
        self,
        eps: float,
        mode: DeflationMode = DeflationMode.RESTRICTION,
        seed: Optional[int] = None,
    ):
        self.eps = eps
        self.mode = mode
        self.seed = seed

    @abstractmethod
    def compute(self, matrix: HermitianMatrix) -> Tuple[SquaredMagnitudes, SquaredMagnitudes]:
        """Return (identity result, direct reference)."""

    def run(self, matrix: HermitianMatrix) -> ExperimentReport:
        """Run the experiment; a degenerate spectrum yields a failed report."""
        logger.info("running %s (n=%d, seed=%s)", self.name.value, matrix.n, self.seed)
        start = time.perf_counter()
        try:
            result, reference = self.compute(matrix)
        except DegenerateSpectrumError as exc:
            return self.create_report(
                matrix, None, time.perf_counter() - start,
                reason=FailureReason.DEGENERATE, detail=str(exc),
            )

        error = max_abs_diff(result, reference)
        elapsed = time.perf_counter() - start
        logger.info("%s: max error %.3e in %.2fs", self.name.value, error, elapsed)
        if error < self.eps:
            return self.create_report(matrix, error, elapsed)
        return self.create_report(
            matrix, error, elapsed,
            reason=FailureReason.MISMATCH,
            detail=f"max error {error:.3e} is not below {self.eps:.3e}",
        )

    def create_report(
        self,
        matrix: HermitianMatrix,
        error: Optional[float],
        elapsed: float,
        reason: Optional[FailureReason] = None,
        detail: Optional[str] = None,
    ) -> ExperimentReport:
        """Create a report with the common fields filled in."""
        return ExperimentReport(
            experiment=self.name,
            n=matrix.n,
            seed=self.seed,
            mode=self.mode,
            max_abs_error=error,
            tolerance=self.eps,
            passed=error is not None and error < self.eps,
            reason=reason,
            detail=detail,
            wall_time=elapsed,
        )
