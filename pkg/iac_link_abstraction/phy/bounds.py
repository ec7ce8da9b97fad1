"""Per-layer post-processing SINR bounds of the joint ML receiver and the ISR metric.

Every function takes single channels (n_rx, layers) or stacks over
subcarriers (K, n_rx, layers) and returns scalars or (K,) arrays accordingly.
"""
from dataclasses import dataclass

import numpy as np

from iac_link_abstraction.errors import ZeroServingChannel
from iac_link_abstraction.phy.numerics import (as_cmatrix, as_cvector,
                                               frobenius_norm, gram,
                                               inverse_hermitian)

ZERO_NORM = 1e-12


@dataclass(frozen=True, eq=False)
class LayerBounds:
    gamma_mmse: np.ndarray
    gamma_if: np.ndarray
    isr: np.ndarray


def mmse_sinr(h1, h2, noise_var, layer=1):
    """
    Unbiased MMSE post-SINR of a serving layer: 1 / [(I + Hbar^H Hbar / noise_var)^-1]_vv - 1
    The identity spans all V1 + V2 columns of Hbar = [H1 H2]
    """
    h1 = as_cmatrix(h1)
    h2 = as_cmatrix(h2)
    if not 1 <= layer <= h1.shape[-1]:
        raise ValueError(f'layer {layer} outside 1..{h1.shape[-1]}')

    h_bar = np.concatenate([h1, h2], axis=-1)
    size = h_bar.shape[-1]
    a = np.eye(size) + gram(h_bar) / noise_var
    mse = np.real(inverse_hermitian(a)[..., layer - 1, layer - 1])
    return 1.0 / mse - 1.0


def if_sinr(h1_column, noise_var):
    """
    Genie-aided interference-free SINR ||h||^2 / noise_var
    """
    if noise_var <= 0:
        raise ValueError(f'noise_var must be positive, got {noise_var}')
    h1_column = as_cvector(h1_column)
    return np.sum(np.abs(h1_column) ** 2, axis=-1) / noise_var


def isr(h1, h2, layer=1):
    """
    1 - exp(-||H2_eff||_F / ||h1_layer||), with the other serving layer counted as interference
    """
    h1 = as_cmatrix(h1)
    h2 = as_cmatrix(h2)
    v1 = h1.shape[-1]
    if v1 not in (1, 2):
        raise ValueError(f'ISR is defined for one or two serving layers, got {v1}')

    own = h1[..., layer - 1]
    others = np.delete(h1, layer - 1, axis=-1)
    h2_eff = np.concatenate([others, h2], axis=-1)

    serving_norm = np.linalg.norm(own, axis=-1)
    if np.any(serving_norm < ZERO_NORM):
        raise ZeroServingChannel(f'Serving channel norm {np.min(serving_norm):.3e} below {ZERO_NORM:.0e}')

    return 1.0 - np.exp(-frobenius_norm(h2_eff) / serving_norm)


def layer_bounds(h1, h2, noise_var, layer=1):
    """
    Both SINR bounds and the ISR of one serving layer
    Numerical noise is removed so that 0 <= gamma_mmse <= gamma_if holds exactly
    """
    h1 = as_cmatrix(h1)
    gamma_if = if_sinr(h1[..., layer - 1], noise_var)
    gamma_mmse = np.clip(mmse_sinr(h1, h2, noise_var, layer), 0.0, gamma_if)
    return LayerBounds(gamma_mmse=gamma_mmse,
                       gamma_if=gamma_if,
                       isr=isr(h1, h2, layer))
