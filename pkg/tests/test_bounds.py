import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from iac_link_abstraction.errors import ZeroServingChannel
from iac_link_abstraction.phy import (ScenarioConfig, generate, if_sinr, isr,
                                      layer_bounds, mmse_sinr)


@settings(max_examples=30, deadline=None)
@given(st.integers(min_value=0, max_value=2 ** 32), st.floats(min_value=0.01, max_value=10.0))
def test_mmse_never_exceeds_interference_free(seed, noise_var):
    realization = generate(ScenarioConfig(n_rx=2, v1=1, v2=1, n_subcarriers=4,
                                          interferer_scale=2.0, seed=seed))
    bounds = layer_bounds(realization.h1, realization.h2, noise_var)
    assert np.all(bounds.gamma_mmse >= 0)
    assert np.all(bounds.gamma_mmse <= bounds.gamma_if)
    assert np.all((bounds.isr >= 0) & (bounds.isr < 1))


def test_zero_interference_closes_the_gap():
    h1 = np.array([[1.0 + 0.5j], [0.3 - 0.2j]])
    h2 = np.zeros((2, 1))
    bounds = layer_bounds(h1, h2, 0.5)
    assert bounds.gamma_mmse == pytest.approx(bounds.gamma_if)
    assert bounds.isr == 0.0


def test_single_antenna_mmse_closed_form():
    h1 = np.array([[0.8 - 0.6j]])
    h2 = np.array([[0.5j]])
    noise_var = 0.2
    assert mmse_sinr(h1, h2, noise_var) == pytest.approx(1.0 / (0.25 + 0.2))
    assert if_sinr(h1[:, 0], noise_var) == pytest.approx(1.0 / 0.2)


def test_isr_closed_form():
    h1 = np.array([[3.0], [4.0]])
    h2 = np.array([[0.0], [5.0]])
    assert isr(h1, h2) == pytest.approx(1.0 - np.exp(-1.0))


def test_second_layer_counts_first_layer_as_interference():
    h1 = np.array([[2.0, 0.0], [0.0, 1.0]])
    h2 = np.zeros((2, 1))
    assert isr(h1, h2, layer=2) == pytest.approx(1.0 - np.exp(-2.0))
    assert isr(h1, h2, layer=1) == pytest.approx(1.0 - np.exp(-0.5))


def test_zero_serving_channel_is_rejected():
    with pytest.raises(ZeroServingChannel):
        isr(np.zeros((2, 1)), np.ones((2, 1)))


def test_batched_bounds_match_per_subcarrier_loop():
    realization = generate(ScenarioConfig(n_rx=2, v1=2, v2=1, n_subcarriers=6, seed=9))
    batched = layer_bounds(realization.h1, realization.h2, 0.3, layer=2)
    for k in range(6):
        single = layer_bounds(realization.h1[k], realization.h2[k], 0.3, layer=2)
        assert batched.gamma_mmse[k] == pytest.approx(single.gamma_mmse)
        assert batched.gamma_if[k] == pytest.approx(single.gamma_if)
        assert batched.isr[k] == pytest.approx(single.isr)


def test_invalid_layer_is_rejected():
    with pytest.raises(ValueError):
        mmse_sinr(np.ones((2, 1)), np.ones((2, 1)), 1.0, layer=2)


def test_non_positive_noise_is_rejected():
    with pytest.raises(ValueError):
        if_sinr(np.ones(2), 0.0)


def _adjugate_mmse_sinr(h1, h2, noise_var):
    h_bar = np.concatenate([h1, h2], axis=-1)
    a = np.eye(2) + h_bar.conj().T @ h_bar / noise_var
    determinant = a[0, 0] * a[1, 1] - a[0, 1] * a[1, 0]
    return 1.0 / np.real(a[1, 1] / determinant) - 1.0


@settings(max_examples=50, deadline=None)
@given(st.integers(min_value=0, max_value=2 ** 32), st.floats(min_value=0.05, max_value=5.0))
def test_mmse_matches_adjugate_inverse(seed, noise_var):
    realization = generate(ScenarioConfig(n_rx=2, v1=1, v2=1, n_subcarriers=1, seed=seed))
    h1, h2 = realization.h1[0], realization.h2[0]
    assert mmse_sinr(h1, h2, noise_var) == pytest.approx(_adjugate_mmse_sinr(h1, h2, noise_var), rel=1e-8)


@pytest.mark.parametrize('seed', [1, 2, 3])
def test_stronger_interference_never_helps_the_mmse_bound(seed):
    realization = generate(ScenarioConfig(n_rx=2, v1=1, v2=1, n_subcarriers=8, seed=seed))
    gammas = [mmse_sinr(realization.h1, realization.h2 * rho, 0.5) for rho in (0.0, 1.0, 10.0)]
    assert np.all(gammas[1] <= gammas[0] * (1 + 1e-12))
    assert np.all(gammas[2] <= gammas[1] * (1 + 1e-12))

    isr_values = [isr(realization.h1, realization.h2 * rho) for rho in (0.3, 1.0, 10.0)]
    assert np.all(isr_values[0] < isr_values[1])
    assert np.all(isr_values[1] < isr_values[2])


@pytest.mark.parametrize('n_rx, v2', [(1, 1), (2, 2)])
def test_mmse_bound_collapses_under_very_strong_interference(n_rx, v2):
    realization = generate(ScenarioConfig(n_rx=n_rx, v1=1, v2=v2, n_subcarriers=4, interferer_scale=100.0, seed=4))
    bounds = layer_bounds(realization.h1, realization.h2, 1.0)
    assert np.all(bounds.gamma_mmse <= 0.05 * bounds.gamma_if)


def test_orthogonal_interferer_costs_nothing():
    h1 = np.array([[0.6 + 0.8j], [0.0]])
    h2 = np.array([[0.0], [3.0 - 1.0j]])
    bounds = layer_bounds(h1, h2, 0.4)
    assert abs(bounds.gamma_mmse - bounds.gamma_if) <= 1e-9
    assert bounds.isr > 0


def test_empty_serving_column_is_rejected():
    with pytest.raises(ValueError):
        if_sinr(np.zeros(0), 1.0)
