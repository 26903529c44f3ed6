import numpy as np
import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from eigenid.config import settings
from eigenid.core import HermitianMatrix, MinorSpectra, eigendecompose, validate_hermitian
from eigenid.exceptions import DegenerateSpectrumError, DimensionError, MinorIndexError, ShapeError
from eigenid.identity import (
    eigenvector_magnitudes,
    minor,
    minor_spectra,
    squared_magnitudes_from_spectra,
)
from eigenid.models import Provenance
from eigenid.oracle import max_abs_diff, planted_spectrum, random_hermitian, reference_magnitudes

from .conftest import min_gap


def _spectra(values):
    return MinorSpectra(values=values, provenance=Provenance.MINOR_DELETION)


@pytest.mark.parametrize("j, expected", [(0, [[4.0]]), (1, [[1.0]])])
def test_minor_2x2(j, expected):
    matrix = HermitianMatrix(np.array([[1.0, 2.0], [2.0, 4.0]]))
    np.testing.assert_array_equal(minor(matrix, j).entries, expected)


def test_minor_removes_middle_row_and_column():
    matrix = random_hermitian(5, seed=11)
    result = minor(matrix, 2)
    expected = np.delete(np.delete(matrix.entries, 2, axis=0), 2, axis=1)
    np.testing.assert_array_equal(result.entries, expected)
    assert validate_hermitian(result, 1e-12)


def test_minor_errors():
    matrix = HermitianMatrix(np.eye(3))
    with pytest.raises(MinorIndexError):
        minor(matrix, 3)
    with pytest.raises(IndexError):
        minor(matrix, -1)
    with pytest.raises(DimensionError):
        minor(HermitianMatrix(np.array([[1.0]])), 0)


def test_minor_spectra_diagonal():
    spectra = minor_spectra(HermitianMatrix(np.diag([2.0, 5.0])))
    np.testing.assert_allclose(spectra.values, [[5.0], [2.0]])
    assert spectra.provenance is Provenance.MINOR_DELETION


def test_minor_spectra_swap(swap_matrix):
    np.testing.assert_allclose(minor_spectra(swap_matrix).values, [[0.0], [0.0]])


def test_minor_spectra_interlace():
    matrix = random_hermitian(8, seed=5)
    spectra = minor_spectra(matrix)
    assert spectra.values.shape == (8, 7)
    assert spectra.interlacing_violations(eigendecompose(matrix).eigenvalues) == []


def test_minor_spectra_parallel_matches_sequential(monkeypatch):
    matrix = random_hermitian(16, seed=2)
    monkeypatch.setattr(settings, "threads", 1)
    sequential = minor_spectra(matrix).values
    monkeypatch.setattr(settings, "threads", 4)
    np.testing.assert_array_equal(minor_spectra(matrix).values, sequential)


def test_squared_magnitudes_diagonal_golden():
    result = squared_magnitudes_from_spectra(np.array([2.0, 5.0]), _spectra([[5.0], [2.0]]))
    np.testing.assert_allclose(result.values, np.eye(2), atol=1e-14)
    assert result.all_valid


def test_squared_magnitudes_swap_golden():
    result = squared_magnitudes_from_spectra(np.array([-1.0, 1.0]), _spectra([[0.0], [0.0]]))
    np.testing.assert_allclose(result.values, np.full((2, 2), 0.5), atol=1e-14)


def test_squared_magnitudes_shape_mismatch():
    with pytest.raises(ShapeError):
        squared_magnitudes_from_spectra(np.array([1.0, 2.0, 3.0]), _spectra([[5.0], [2.0]]))


def test_squared_magnitudes_at_n_100():
    matrix = random_hermitian(100, seed=1)
    w = eigendecompose(matrix).eigenvalues
    result = squared_magnitudes_from_spectra(w, minor_spectra(matrix))
    assert max_abs_diff(result, reference_magnitudes(matrix)) < 1e-10


def test_log_product_matches_ordered_product(monkeypatch):
    matrix = random_hermitian(12, seed=8)
    w = eigendecompose(matrix).eigenvalues
    spectra = minor_spectra(matrix)
    direct = squared_magnitudes_from_spectra(w, spectra).values
    monkeypatch.setattr(settings, "log_product_threshold", 0)
    logged = squared_magnitudes_from_spectra(w, spectra).values
    np.testing.assert_allclose(logged, direct, atol=1e-12)


def test_eigenvector_magnitudes_swap(swap_matrix):
    result = eigenvector_magnitudes(swap_matrix)
    np.testing.assert_allclose(result.values, np.full((2, 2), 0.5), atol=1e-14)


def test_eigenvector_magnitudes_real_symmetric():
    matrix = random_hermitian(10, seed=7, complex_flag=False)
    result = eigenvector_magnitudes(matrix)
    assert max_abs_diff(result, reference_magnitudes(matrix)) < 1e-10


def test_identity_matrix_is_degenerate(identity_2x2):
    with pytest.raises(DegenerateSpectrumError) as info:
        eigenvector_magnitudes(identity_2x2)
    assert info.value.rows == [0, 1]
    assert not info.value.partial.valid.any()


def test_allow_partial_flags_planted_double_eigenvalue():
    matrix = planted_spectrum([1.0, 2.0, 2.0, 3.0], seed=4)
    result = eigenvector_magnitudes(matrix, allow_partial=True)
    assert result.invalid_rows == [1, 2]
    assert np.all(result.values[1:3] == 0.0)
    assert not np.isnan(result.values).any()
    reference = reference_magnitudes(matrix).values
    np.testing.assert_allclose(result.values[[0, 3]], reference[[0, 3]], atol=1e-8)


def test_double_stochasticity():
    result = eigenvector_magnitudes(random_hermitian(20, seed=13))
    assert result.is_doubly_stochastic(1e-8)


def test_permutation_equivariance():
    matrix = random_hermitian(9, seed=21)
    perm = np.random.default_rng(0).permutation(9)
    permuted = HermitianMatrix(matrix.entries[np.ix_(perm, perm)])
    original = eigenvector_magnitudes(matrix).values
    np.testing.assert_allclose(eigenvector_magnitudes(permuted).values, original[:, perm], atol=1e-9)


@given(n=st.integers(2, 12), seed=st.integers(0, 2**32 - 1), complex_flag=st.booleans())
def test_oracle_equivalence_property(n, seed, complex_flag):
    matrix = random_hermitian(n, seed, complex_flag)
    assume(min_gap(eigendecompose(matrix).eigenvalues) > 1e-3)
    result = eigenvector_magnitudes(matrix)
    assert max_abs_diff(result, reference_magnitudes(matrix)) < 1e-10


def test_non_interlacing_spectra_stay_visible(caplog):
    w = np.array([0.0, 2.0])
    result = squared_magnitudes_from_spectra(w, _spectra([[3.0], [1.0]]))
    np.testing.assert_allclose(result.values, [[1.5, 0.5], [-0.5, 0.5]], atol=1e-15)
    assert result.all_valid
    assert "outside [0, 1]" in caplog.text
    reference = reference_magnitudes(HermitianMatrix(np.diag([0.0, 2.0])))
    assert max_abs_diff(result, reference) == pytest.approx(0.5)
