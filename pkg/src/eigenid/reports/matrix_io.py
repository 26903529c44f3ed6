"""Matrix file codec: JSON documents and the Matrix Market text format."""

import json
import logging
from pathlib import Path
from typing import Optional, Union

import numpy as np
import scipy.io
from pydantic import ValidationError

from ..core import HermitianMatrix
from ..exceptions import DataFileError, EigenIdError
from ..models import MatrixFile, MatrixFormat

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]

_MM_SUFFIXES = {".mtx", ".mm"}


def infer_format(path: PathLike, fmt: Optional[MatrixFormat] = None) -> MatrixFormat:
    """Explicit ``fmt``, else Matrix Market for .mtx/.mm suffixes and JSON otherwise."""
    if fmt is not None:
        return fmt
    return MatrixFormat.MATRIX_MARKET if Path(path).suffix in _MM_SUFFIXES else MatrixFormat.JSON


def to_document(matrix: HermitianMatrix) -> MatrixFile:
    """Real entries as numbers, complex entries as [re, im] pairs."""
    a = matrix.entries
    if matrix.is_complex:
        entries = [[(float(z.real), float(z.imag)) for z in row] for row in a]
    else:
        entries = [[float(x) for x in row] for row in a]
    return MatrixFile(n=matrix.n, is_complex=matrix.is_complex, entries=entries)


def from_document(document: MatrixFile, symmetrize: bool = False) -> HermitianMatrix:
    """Inverse of :func:`to_document`, with the Hermitian check."""
    if document.is_complex:
        a = np.array(
            [[complex(re, im) for re, im in row] for row in document.entries],
            dtype=np.complex128,
        )
    else:
        a = np.array(document.entries, dtype=np.float64)
    return HermitianMatrix.from_array(a, symmetrize=symmetrize)


def save_matrix(
    matrix: HermitianMatrix, path: PathLike, fmt: Optional[MatrixFormat] = None
) -> Path:
    """Write a matrix; Python float repr keeps the JSON round trip lossless."""
    path = Path(path)
    try:
        if infer_format(path, fmt) is MatrixFormat.MATRIX_MARKET:
            with open(path, "wb") as f:
                scipy.io.mmwrite(
                    f,
                    np.asarray(matrix.entries),
                    field="complex" if matrix.is_complex else "real",
                    precision=17,
                    symmetry="general",
                )
        else:
            document = to_document(matrix).model_dump(mode="json", by_alias=True)
            with open(path, "w", encoding="utf-8") as f:
                json.dump(document, f, indent=2)
    except OSError as exc:
        raise DataFileError(f"cannot write matrix: {exc.strerror or exc}", path=str(path)) from exc
    logger.debug("wrote %dx%d matrix to %s", matrix.n, matrix.n, path)
    return path


def load_matrix(
    path: PathLike, fmt: Optional[MatrixFormat] = None, symmetrize: bool = False
) -> HermitianMatrix:
    """Read and validate a matrix. Any failure surfaces as DataFileError."""
    path = Path(path)
    try:
        if infer_format(path, fmt) is MatrixFormat.MATRIX_MARKET:
            array = scipy.io.mmread(str(path))
            if hasattr(array, "toarray"):
                array = array.toarray()
            return HermitianMatrix.from_array(np.asarray(array), symmetrize=symmetrize)
        with open(path, encoding="utf-8") as f:
            document = MatrixFile.model_validate(json.load(f))
        return from_document(document, symmetrize=symmetrize)
    except OSError as exc:
        raise DataFileError(f"cannot read matrix: {exc.strerror or exc}", path=str(path)) from exc
    except (ValueError, ValidationError, EigenIdError) as exc:
        raise DataFileError(f"invalid matrix file: {exc}", path=str(path)) from exc
