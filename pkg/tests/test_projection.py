import logging

import numpy as np
import pytest

from eigenid.core import HermitianMatrix
from eigenid.exceptions import (
    AmbiguousDeflationWarning,
    DimensionError,
    NormalizationError,
    ShapeError,
)
from eigenid.identity import eigenvector_magnitudes, minor_spectra
from eigenid.models import DeflationMode, Provenance
from eigenid.oracle import (
    max_abs_diff,
    random_hermitian,
    random_orthonormal,
    random_unit_vector,
    random_unitary,
    reference_overlap_magnitudes,
)
from eigenid.projection import (
    OrthonormalBasis,
    UnitVector,
    basis_overlap_magnitudes,
    complement_basis,
    projected_spectra,
    projected_spectrum,
    projector,
)

BOTH_MODES = [DeflationMode.RESTRICTION, DeflationMode.DROP_SMALLEST]


def test_projector_of_first_axis():
    np.testing.assert_array_equal(projector(UnitVector.standard(2, 0)).entries, np.diag([0.0, 1.0]))


@pytest.mark.parametrize("complex_flag", [False, True])
def test_projector_is_idempotent_and_annihilates_c(complex_flag):
    c = random_unit_vector(6, seed=3, complex_flag=complex_flag)
    p = projector(c).entries
    np.testing.assert_allclose(p @ p, p, atol=1e-14)
    np.testing.assert_allclose(p @ c.entries, 0.0, atol=1e-14)


def test_unit_vector_validation():
    with pytest.raises(NormalizationError):
        UnitVector(np.array([1.0, 1.0]))
    with pytest.raises(NormalizationError):
        UnitVector.normalized(np.zeros(3))
    np.testing.assert_allclose(UnitVector.normalized(np.array([3.0, 4.0])).entries, [0.6, 0.8])


def test_orthonormal_basis_validation():
    with pytest.raises(NormalizationError):
        OrthonormalBasis(np.array([[1.0, 1.0], [0.0, 1.0]]))
    with pytest.raises(DimensionError):
        OrthonormalBasis(np.ones((2, 3)))
    basis = OrthonormalBasis.identity(3)
    np.testing.assert_array_equal(basis.column(1).entries, [0.0, 1.0, 0.0])


@pytest.mark.parametrize(
    "c",
    [
        UnitVector.standard(5, 0),
        UnitVector.standard(5, 4),
        random_unit_vector(5, seed=1),
        random_unit_vector(5, seed=2, complex_flag=True),
    ],
    ids=["e1", "en", "real", "complex"],
)
def test_complement_basis(c):
    b = complement_basis(c)
    assert b.shape == (5, 4)
    np.testing.assert_allclose(b.conj().T @ b, np.eye(4), atol=1e-14)
    np.testing.assert_allclose(b.conj().T @ c.entries, 0.0, atol=1e-14)


@pytest.mark.parametrize("mode", BOTH_MODES)
def test_projected_spectrum_diagonal(diagonal_matrix, mode):
    result = projected_spectrum(diagonal_matrix, UnitVector.standard(3, 1), mode)
    np.testing.assert_allclose(result, [1.0, 3.0], atol=1e-14)


def test_projected_spectrum_swap(swap_matrix):
    c = UnitVector.standard(2, 0)
    np.testing.assert_allclose(projected_spectrum(swap_matrix, c), [0.0], atol=1e-15)
    with pytest.warns(AmbiguousDeflationWarning):
        result = projected_spectrum(swap_matrix, c, DeflationMode.DROP_SMALLEST)
    np.testing.assert_allclose(result, [0.0], atol=1e-15)


def test_drop_smallest_warns_when_compression_has_zero(caplog):
    matrix = HermitianMatrix(np.diag([0.0, 1.0, 2.0]))
    with caplog.at_level(logging.WARNING, logger="eigenid"):
        with pytest.warns(AmbiguousDeflationWarning):
            projected_spectrum(matrix, UnitVector.standard(3, 2), DeflationMode.DROP_SMALLEST)
    assert "ambiguous deflation" in caplog.text


def test_modes_agree_on_random_instance():
    matrix = random_hermitian(7, seed=17)
    c = random_unit_vector(7, seed=18, complex_flag=True)
    restricted = projected_spectrum(matrix, c)
    if np.abs(restricted).min() < 1e-6:
        pytest.skip("compressed spectrum too close to zero for drop-smallest")
    dropped = projected_spectrum(matrix, c, DeflationMode.DROP_SMALLEST)
    np.testing.assert_allclose(dropped, restricted, atol=1e-9)


def test_projected_spectrum_errors():
    with pytest.raises(DimensionError):
        projected_spectrum(HermitianMatrix(np.array([[1.0]])), UnitVector.standard(1, 0))
    with pytest.raises(ShapeError):
        projected_spectrum(HermitianMatrix(np.eye(3)), UnitVector.standard(2, 0))
    with pytest.raises(ShapeError):
        projected_spectra(HermitianMatrix(np.eye(3)), OrthonormalBasis.identity(2))


@pytest.mark.parametrize("mode", BOTH_MODES)
def test_projected_spectra_provenance(mode):
    spectra = projected_spectra(HermitianMatrix(np.diag([1.0, 2.0])), OrthonormalBasis.identity(2), mode)
    np.testing.assert_allclose(spectra.values, [[2.0], [1.0]], atol=1e-15)
    assert spectra.provenance is mode.provenance


def test_standard_basis_projections_match_minors():
    matrix = random_hermitian(8, seed=9)
    projected = projected_spectra(matrix, OrthonormalBasis.identity(8))
    assert projected.provenance is Provenance.SUBSPACE_RESTRICTION
    np.testing.assert_allclose(projected.values, minor_spectra(matrix).values, atol=1e-12)


def test_standard_basis_overlaps_match_eigenvector_magnitudes():
    matrix = random_hermitian(8, seed=10)
    overlaps = basis_overlap_magnitudes(matrix, OrthonormalBasis.identity(8))
    np.testing.assert_allclose(overlaps.values, eigenvector_magnitudes(matrix).values, atol=1e-11)


@pytest.mark.parametrize("mode", BOTH_MODES)
def test_rotated_basis_golden(mode):
    matrix = HermitianMatrix(np.diag([0.0, 2.0]))
    basis = OrthonormalBasis(np.array([[1.0, 1.0], [1.0, -1.0]]) / np.sqrt(2))
    result = basis_overlap_magnitudes(matrix, basis, mode)
    np.testing.assert_allclose(result.values, np.full((2, 2), 0.5), atol=1e-14)


def test_real_orthonormal_basis_matches_reference():
    matrix = random_hermitian(15, seed=6)
    basis = random_orthonormal(15, seed=7)
    result = basis_overlap_magnitudes(matrix, basis)
    assert max_abs_diff(result, reference_overlap_magnitudes(matrix, basis)) < 1e-10


def test_complex_unitary_basis_matches_reference():
    matrix = random_hermitian(20, seed=3)
    basis = random_unitary(20, seed=4)
    result = basis_overlap_magnitudes(matrix, basis)
    assert max_abs_diff(result, reference_overlap_magnitudes(matrix, basis)) < 1e-10
    assert result.is_doubly_stochastic(1e-8)
