"""Shared fixtures for the eigenid test suite."""

import numpy as np
import pytest
from hypothesis import settings as hypothesis_settings

from eigenid.core import HermitianMatrix

hypothesis_settings.register_profile("eigenid", deadline=None, max_examples=30)
hypothesis_settings.load_profile("eigenid")


def min_gap(w: np.ndarray) -> float:
    return float(np.diff(np.sort(w)).min())


@pytest.fixture
def swap_matrix() -> HermitianMatrix:
    """[[0, 1], [1, 0]]: eigenvalues -1, 1 and all squared magnitudes 1/2."""
    return HermitianMatrix(np.array([[0.0, 1.0], [1.0, 0.0]]))


@pytest.fixture
def diagonal_matrix() -> HermitianMatrix:
    return HermitianMatrix(np.diag([1.0, 2.0, 3.0]))


@pytest.fixture
def identity_2x2() -> HermitianMatrix:
    return HermitianMatrix(np.eye(2))
