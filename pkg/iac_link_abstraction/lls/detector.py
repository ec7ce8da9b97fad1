"""Max-log joint ML demapper over the serving and interfering candidate sets."""
import numpy as np

from iac_link_abstraction.phy.constellation import (candidate_vectors,
                                                    check_candidate_set)

# upper bound on the number of complex distance terms held in memory at once
CHUNK_ELEMENTS = 2 ** 22


def maxlog_joint_llr(r, h1, h2, constellation1, constellation2, noise_var):
    """
    LLRs of the serving layer bits, positive for bit 1
    r is (..., n_rx), h1 is (..., n_rx, v1) and h2 is (..., n_rx, v2); v2 may be 0
    Returns (..., v1, bits_per_symbol)
    """
    r = np.asarray(r, dtype=complex)
    h1 = np.asarray(h1, dtype=complex)
    h2 = np.asarray(h2, dtype=complex)
    h1 = np.broadcast_to(h1, r.shape + h1.shape[-1:])
    h2 = np.broadcast_to(h2, r.shape + h2.shape[-1:])
    v1, v2 = h1.shape[-1], h2.shape[-1]
    check_candidate_set(constellation1, v1, constellation2, v2)

    labels1, symbols1 = candidate_vectors(constellation1, v1)
    _, symbols2 = candidate_vectors(constellation2, v2)
    n_rx = r.shape[-1]

    leading = r.shape[:-1]
    r = r.reshape(-1, n_rx)
    h1 = h1.reshape(-1, n_rx, v1)
    h2 = h2.reshape(len(r), n_rx, v2)

    chunk = max(1, CHUNK_ELEMENTS // (len(symbols1) * len(symbols2) * n_rx))
    best = np.empty((len(r), len(symbols1)))
    for start in range(0, len(r), chunk):
        part = slice(start, start + chunk)
        serving = np.einsum('erv,cv->ecr', h1[part], symbols1)
        interfering = np.einsum('erv,cv->ecr', h2[part], symbols2)
        residual = r[part, None, None, :] - serving[:, :, None, :] - interfering[:, None, :, :]
        distances = np.sum(residual.real ** 2 + residual.imag ** 2, axis=-1)
        best[part] = np.min(distances, axis=2)

    bits = constellation1.bit_matrix[labels1]
    llrs = np.empty((len(r), v1, constellation1.bits_per_symbol))
    for layer in range(v1):
        for m in range(constellation1.bits_per_symbol):
            ones = bits[:, layer, m] == 1
            llrs[:, layer, m] = np.min(best[:, ~ones], axis=1) - np.min(best[:, ones], axis=1)

    return (llrs / noise_var).reshape(leading + (v1, constellation1.bits_per_symbol))
