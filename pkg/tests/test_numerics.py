import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from iac_link_abstraction.errors import NotPositiveDefinite
from iac_link_abstraction.phy.numerics import (as_cmatrix, from_db, gram,
                                               frobenius_norm,
                                               inverse_hermitian,
                                               invert_monotone_piecewise,
                                               to_db)
from iac_link_abstraction.utils import create_rng


def random_hpd(seed, size, batch=()):
    rng = create_rng(seed)
    h = rng.standard_normal(batch + (size + 2, size)) + 1j * rng.standard_normal(batch + (size + 2, size))
    return np.eye(size) + gram(h)


def test_inverse_of_identity():
    assert np.allclose(inverse_hermitian(np.eye(3)), np.eye(3))


@pytest.mark.parametrize('size', [1, 2, 4])
def test_inverse_hermitian_residual(size):
    a = random_hpd(size, size)
    assert np.linalg.norm(a @ inverse_hermitian(a) - np.eye(size)) < 1e-9


def test_inverse_hermitian_is_batched():
    a = random_hpd(1, 3, batch=(5,))
    inverse = inverse_hermitian(a)
    assert inverse.shape == (5, 3, 3)
    for k in range(5):
        assert np.allclose(inverse[k], np.linalg.inv(a[k]))


@pytest.mark.parametrize('matrix', [
    [[1.0, 2.0], [2.0, 1.0]],
    [[1.0, 1.0], [1.0, 1.0]],
    [[0.0]],
])
def test_inverse_hermitian_rejects_non_positive_definite(matrix):
    with pytest.raises(NotPositiveDefinite):
        inverse_hermitian(matrix)


def test_inverse_hermitian_leaves_input_untouched():
    a = random_hpd(3, 2)
    copy = a.copy()
    inverse_hermitian(a)
    assert np.array_equal(a, copy)


def test_frobenius_norm():
    assert frobenius_norm([[3.0, 4.0j]]) == pytest.approx(5.0)


def test_as_cmatrix_rejects_vectors():
    with pytest.raises(ValueError):
        as_cmatrix([1.0, 2.0])


@given(st.floats(min_value=-50, max_value=50))
def test_db_roundtrip(db):
    assert to_db(from_db(db)) == pytest.approx(db, abs=1e-9)


def test_invert_monotone_piecewise_returns_smallest_abscissa():
    x = [0.0, 1.0, 2.0, 3.0]
    y = [0.0, 0.5, 0.5, 1.0]
    assert invert_monotone_piecewise(x, y, 0.5) == 1.0
    assert invert_monotone_piecewise(x, y, 0.25) == 0.5
    assert invert_monotone_piecewise(x, y, 0.75) == 2.5


@pytest.mark.parametrize('target,expected', [(-1.0, 0.0), (0.0, 0.0), (1.0, 3.0), (2.0, 3.0)])
def test_invert_monotone_piecewise_clamps(target, expected):
    assert invert_monotone_piecewise([0.0, 1.0, 2.0, 3.0], [0.0, 0.5, 0.5, 1.0], target) == expected


@settings(max_examples=50, deadline=None)
@given(st.integers(min_value=0, max_value=2 ** 32), st.floats(min_value=0.0, max_value=1.0))
def test_invert_monotone_piecewise_inverts_interpolation(seed, fraction):
    rng = create_rng(seed)
    x = np.cumsum(rng.uniform(0.1, 1.0, 10))
    y = np.cumsum(rng.uniform(0.1, 1.0, 10))
    target = y[0] + fraction * (y[-1] - y[0])
    assert np.interp(invert_monotone_piecewise(x, y, target), x, y) == pytest.approx(target, abs=1e-9)


@settings(max_examples=30, deadline=None)
@given(st.integers(min_value=0, max_value=2 ** 32), st.integers(min_value=1, max_value=4),
       st.integers(min_value=1, max_value=4))
def test_gram_matches_brute_force(seed, rows, cols):
    rng = create_rng(seed)
    h = rng.standard_normal((rows, cols)) + 1j * rng.standard_normal((rows, cols))
    g = gram(h)

    expected = np.zeros((cols, cols), dtype=complex)
    for i in range(cols):
        for j in range(cols):
            for r in range(rows):
                expected[i, j] += np.conj(h[r, i]) * h[r, j]

    assert np.max(np.abs(g - expected)) <= 1e-12 * max(1.0, np.max(np.abs(expected)))
    assert np.max(np.abs(g - g.conj().T)) <= 1e-12
    assert frobenius_norm(h) ** 2 == pytest.approx(np.real(np.trace(g)), rel=1e-12)
