"""Rate-1/2 K=7 (133, 171) convolutional code with rate matching and soft Viterbi decoding.

Coded bits are ordered step-major with the two generator outputs of each step
adjacent, as produced by commpy. LLRs are positive for bit 1.
"""
from functools import lru_cache

import commpy.channelcoding.convcode as cc
import numpy as np
from commpy.utilities import dec2bitarray

MEMORY = 6

GENERATORS = (0o133, 0o171)

CODE_DESCRIPTOR = 'conv-k7-133-171-zero-tail'

# per-period multiplicity of each mother-code output: 0 punctured, 1 sent, 2 repeated
RATE_MATCHING_PATTERNS = {
    '1/3': ((2,), (1,)),
    '1/2': ((1,), (1,)),
    '2/3': ((1, 1), (1, 0)),
    '3/4': ((1, 1, 0), (1, 0, 1))
}


@lru_cache(maxsize=None)
def mother_trellis():
    return cc.Trellis(np.array([MEMORY]), np.array([list(GENERATORS)]))


@lru_cache(maxsize=None)
def _trellis_tables():
    """
    Branch output bits (states, inputs, outputs) and, per next state, its two (state, input) predecessors
    """
    trellis = mother_trellis()
    n_states = trellis.number_states
    output_bits = np.array([[dec2bitarray(trellis.output_table[s][u], trellis.n) for u in range(2)]
                            for s in range(n_states)], dtype=int)

    predecessors = [[] for _ in range(n_states)]
    for s in range(n_states):
        for u in range(2):
            predecessors[trellis.next_state_table[s][u]].append((s, u))
    if any(len(p) != 2 for p in predecessors):
        raise RuntimeError('Mother code trellis is expected to have two branches into every state')

    predecessors = np.array(predecessors, dtype=int)
    return output_bits, predecessors[:, :, 0], predecessors[:, :, 1]


def check_code_rate(code_rate):
    if code_rate not in RATE_MATCHING_PATTERNS:
        raise ValueError(f'Unsupported code rate {code_rate}; expected one of {list(RATE_MATCHING_PATTERNS)}')
    return code_rate


def mother_length(n_info_bits):
    return 2 * (n_info_bits + MEMORY)


def multiplicities(n_info_bits, code_rate):
    """
    How many times each mother-code bit is transmitted
    """
    pattern = np.array(RATE_MATCHING_PATTERNS[check_code_rate(code_rate)], dtype=int)
    steps = n_info_bits + MEMORY
    period = pattern.shape[1]
    return pattern[:, np.arange(steps) % period].T.ravel()


def matched_length(n_info_bits, code_rate):
    return int(np.sum(multiplicities(n_info_bits, code_rate)))


def fit_info_bits(capacity, code_rate):
    """
    Largest information block whose matched codeword fits into capacity coded bits
    """
    n = 0
    while matched_length(n + 1, code_rate) <= capacity:
        n += 1
    if n == 0:
        raise ValueError(f'No information bit fits into {capacity} coded bits at rate {code_rate}')
    return n


def encode(info_bits, code_rate='1/2'):
    """
    Zero-tail encoding followed by rate matching
    """
    info_bits = np.asarray(info_bits, dtype=int)
    mother = cc.conv_encode(info_bits, mother_trellis(), termination='term')
    return np.repeat(mother, multiplicities(len(info_bits), code_rate))


def rate_recover(llrs, n_info_bits, code_rate):
    """
    Maps received LLRs (..., matched length) back onto the mother codeword
    Punctured positions get 0 and repeated positions are summed
    """
    counts = multiplicities(n_info_bits, code_rate)
    llrs = np.asarray(llrs, dtype=float)
    if llrs.shape[-1] != counts.sum():
        raise ValueError(f'Expected {counts.sum()} LLRs, got {llrs.shape[-1]}')

    positions = np.repeat(np.arange(len(counts)), counts)
    flat = llrs.reshape(-1, llrs.shape[-1])
    mother = np.zeros((flat.shape[0], len(counts)))
    np.add.at(mother, (slice(None), positions), flat)
    return mother.reshape(llrs.shape[:-1] + (len(counts),))


def viterbi_decode(mother_llrs):
    """
    Max-log soft Viterbi over a batch of zero-tail terminated mother codewords (..., 2 * steps)
    Returns the decoded information bits without the tail
    """
    output_bits, prev_state, prev_input = _trellis_tables()
    n_states = output_bits.shape[0]
    signs = (2 * output_bits - 1).reshape(n_states * 2, -1).T

    mother_llrs = np.asarray(mother_llrs, dtype=float)
    batch_shape = mother_llrs.shape[:-1]
    llrs = mother_llrs.reshape(-1, mother_llrs.shape[-1] // 2, 2)
    batch, steps, _ = llrs.shape

    metrics = np.full((batch, n_states), -np.inf)
    metrics[:, 0] = 0.0
    choices = np.empty((steps, batch, n_states), dtype=np.int8)

    branch = prev_state * 2 + prev_input
    for t in range(steps):
        gains = (llrs[:, t, :] @ signs).reshape(batch, n_states * 2)
        candidates = metrics[:, prev_state] + gains[:, branch]
        choices[t] = np.argmax(candidates, axis=2)
        metrics = np.take_along_axis(candidates, choices[t][:, :, None].astype(int), axis=2)[:, :, 0]

    rows = np.arange(batch)
    state = np.zeros(batch, dtype=int)
    decoded = np.empty((batch, steps), dtype=int)
    for t in range(steps - 1, -1, -1):
        choice = choices[t, rows, state]
        decoded[:, t] = prev_input[state, choice]
        state = prev_state[state, choice]

    return decoded[:, :steps - MEMORY].reshape(batch_shape + (steps - MEMORY,))


def decode(llrs, n_info_bits, code_rate='1/2'):
    """
    Rate recovery followed by soft Viterbi decoding; accepts a leading batch shape
    """
    return viterbi_decode(rate_recover(llrs, n_info_bits, code_rate))
