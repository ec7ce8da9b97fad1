import numpy as np

from iac_link_abstraction.errors import LengthMismatch
from iac_link_abstraction.utils import create_rng


class BitInterleaver:
    """Seeded uniform random permutation of a coded block."""

    def __init__(self, length, seed):
        self.length = length
        self.seed = seed
        self.permutation = create_rng(seed).permutation(length)
        self.inverse = np.argsort(self.permutation)

    def _check_length(self, values):
        if values.shape[-1] != self.length:
            raise LengthMismatch(f'Interleaver of length {self.length} applied to {values.shape[-1]} values')

    def interleave(self, bits):
        bits = np.asarray(bits)
        self._check_length(bits)
        return bits[..., self.permutation]

    def deinterleave(self, llrs):
        llrs = np.asarray(llrs)
        self._check_length(llrs)
        return llrs[..., self.inverse]


def interleave(bits, seed):
    bits = np.asarray(bits)
    return BitInterleaver(bits.shape[-1], seed).interleave(bits)


def deinterleave(llrs, seed, length=None):
    """
    Raises LengthMismatch if length is given and differs from the LLR block length
    """
    llrs = np.asarray(llrs)
    return BitInterleaver(length or llrs.shape[-1], seed).deinterleave(llrs)
