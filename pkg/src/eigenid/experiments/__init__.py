"""Verification experiments comparing identity results with direct references."""

from .base_experiment import BaseExperiment
from .minors_experiment import MinorsExperiment
from .identity_basis_experiment import IdentityBasisExperiment
from .arbitrary_basis_experiment import ArbitraryBasisExperiment

__all__ = [
    "BaseExperiment",
    "MinorsExperiment",
    "IdentityBasisExperiment",
    "ArbitraryBasisExperiment",
]
