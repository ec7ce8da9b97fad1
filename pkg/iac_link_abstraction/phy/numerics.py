"""Small dense complex-matrix primitives.

All functions accept a single matrix or a stack of matrices (leading batch
axes) and never modify their inputs.
"""
import logging

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from iac_link_abstraction.errors import NotPositiveDefinite

logger = logging.getLogger(__name__)


class NumericsSettings(BaseModel):
    """Tolerances of the matrix primitives."""

    model_config = ConfigDict(frozen=True)

    inverse_tolerance: float = Field(default=1e-9, gt=0)
    pivot_floor: float = Field(default=1e-12, gt=0)


DEFAULT_SETTINGS = NumericsSettings()


def as_cmatrix(values):
    """
    Returns values as a complex array of shape (..., rows, cols) with rows, cols >= 1
    """
    matrix = np.asarray(values, dtype=complex)
    if matrix.ndim < 2 or matrix.shape[-1] < 1 or matrix.shape[-2] < 1:
        raise ValueError(f'Expected a matrix with at least one row and column, got shape {matrix.shape}')
    return matrix


def as_cvector(values):
    """
    Returns values as a complex array of shape (..., length) with length >= 1
    """
    vector = np.asarray(values, dtype=complex)
    if vector.ndim < 1 or vector.shape[-1] < 1:
        raise ValueError(f'Expected a vector with at least one entry, got shape {vector.shape}')
    return vector


def hermitian(matrix):
    return np.conj(np.swapaxes(matrix, -1, -2))


def gram(h):
    """
    Returns H^H H (cols x cols)
    """
    h = as_cmatrix(h)
    return hermitian(h) @ h


def inverse_hermitian(a, settings=DEFAULT_SETTINGS):
    """
    Inverts Hermitian positive definite matrices through their Cholesky factor
    Raises NotPositiveDefinite when a pivot falls below settings.pivot_floor
    """
    a = as_cmatrix(a)
    try:
        lower = np.linalg.cholesky(a)
    except np.linalg.LinAlgError as e:
        raise NotPositiveDefinite(f'Cholesky factorization failed: {e}')

    pivots = np.abs(np.diagonal(lower, axis1=-2, axis2=-1)) ** 2
    if np.any(pivots < settings.pivot_floor):
        raise NotPositiveDefinite(f'Pivot {pivots.min():.3e} below {settings.pivot_floor:.0e}')

    identity = np.broadcast_to(np.eye(a.shape[-1], dtype=complex), a.shape)
    lower_inv = np.linalg.solve(lower, identity)
    inverse = hermitian(lower_inv) @ lower_inv

    residual = np.linalg.norm(a @ inverse - identity, axis=(-2, -1))
    if np.any(residual > settings.inverse_tolerance):
        logger.warning('Inverse residual %.3e above tolerance %.0e', residual.max(), settings.inverse_tolerance)

    return inverse


def frobenius_norm(h):
    """
    Returns sqrt(sum |h_ij|^2)
    """
    h = as_cmatrix(h)
    return np.linalg.norm(h, axis=(-2, -1))


def to_db(linear):
    with np.errstate(divide='ignore'):
        return 10.0 * np.log10(linear)


def from_db(db):
    return 10.0 ** (np.asarray(db, dtype=float) / 10.0)


def invert_monotone_piecewise(x_grid, y_grid, target):
    """
    Inverts the piecewise-linear curve through (x_grid, y_grid), y non-decreasing
    Returns the smallest x whose interpolated y reaches target, clamped to the grid ends
    """
    x_grid = np.asarray(x_grid, dtype=float)
    y_grid = np.asarray(y_grid, dtype=float)

    if target <= y_grid[0]:
        return float(x_grid[0])
    if target >= y_grid[-1]:
        return float(x_grid[-1])

    # first knot at or above target; y_grid[i - 1] < target by construction
    i = int(np.searchsorted(y_grid, target, side='left'))
    if y_grid[i] == target:
        return float(x_grid[i])

    fraction = (target - y_grid[i - 1]) / (y_grid[i] - y_grid[i - 1])
    return float(x_grid[i - 1] + fraction * (x_grid[i] - x_grid[i - 1]))
