"""AWGN reference curves: BLER versus SNR per MCS, and the direct MMIB-to-BLER table."""
from dataclasses import dataclass

import numpy as np
from scipy.optimize import isotonic_regression

from iac_link_abstraction.phy.constellation import mib_lookup
from iac_link_abstraction.phy.numerics import (from_db,
                                               invert_monotone_piecewise)
from iac_link_abstraction.utils import read_csv_file, write_csv_file


@dataclass(frozen=True, eq=False)
class AwgnLut:
    """Non-increasing BLER curve of one MCS measured over AWGN."""

    mcs: int
    snr_grid_db: np.ndarray
    bler: np.ndarray
    block_length: int
    code_descriptor: str
    n_blocks: np.ndarray

    def __post_init__(self):
        if len(self.snr_grid_db) < 2 or np.any(np.diff(self.snr_grid_db) <= 0):
            raise ValueError('AWGN LUT needs an ascending grid of at least two points')
        if np.any(np.diff(self.bler) > 0) or np.any(self.bler <= 0) or np.any(self.bler > 1):
            raise ValueError('AWGN LUT BLER must be non-increasing within (0, 1]')

    @classmethod
    def create(cls, mcs, snr_grid_db, bler, block_length, code_descriptor, n_blocks):
        """
        Builds a LUT from raw measurements, enforcing monotonicity by isotonic regression in log10 BLER
        """
        order = np.argsort(snr_grid_db)
        snr_grid_db = np.asarray(snr_grid_db, dtype=float)[order]
        log_bler = np.log10(np.asarray(bler, dtype=float)[order])
        cleaned = isotonic_regression(log_bler, increasing=False).x
        return cls(mcs=mcs,
                   snr_grid_db=snr_grid_db,
                   bler=np.minimum(10.0 ** cleaned, 1.0),
                   block_length=block_length,
                   code_descriptor=code_descriptor,
                   n_blocks=np.asarray(n_blocks, dtype=int)[order])


def bler_from_lut(lut, sinr_db):
    """
    Interpolates log10 BLER linearly in dB; clamps outside the grid
    """
    return 10.0 ** np.interp(sinr_db, lut.snr_grid_db, np.log10(lut.bler))


def snr_from_lut(lut, bler):
    """
    Inverse LUT: smallest SNR (dB) whose interpolated BLER is at most bler
    """
    return invert_monotone_piecewise(lut.snr_grid_db, -np.log10(lut.bler), -np.log10(bler))


@dataclass(frozen=True, eq=False)
class DirectMmibLut:
    """BLER as a direct function of MMIB for one MCS."""

    mcs: int
    mib_knots: np.ndarray
    log_bler_first: np.ndarray
    log_bler_last: np.ndarray
    log_bler_at_top: float


def build_direct_lut(mib_table, lut):
    """
    Composes the MIB table and the AWGN LUT into an MMIB -> BLER table
    Knots are placed at every breakpoint of both curves, so the composition is exact
    """
    table_db = mib_table.gamma_grid_db
    lut_db = lut.snr_grid_db[(lut.snr_grid_db > table_db[0]) & (lut.snr_grid_db < table_db[-1])]
    knots_db = np.union1d(table_db, lut_db)

    mib = mib_lookup(mib_table, from_db(knots_db))
    log_bler = np.log10(bler_from_lut(lut, knots_db))

    # a flat MIB run maps to its first knot on equality and leaves from its last knot
    values, first, counts = np.unique(mib, return_index=True, return_counts=True)
    last = first + counts - 1
    return DirectMmibLut(mcs=lut.mcs,
                         mib_knots=values,
                         log_bler_first=log_bler[first],
                         log_bler_last=log_bler[last],
                         log_bler_at_top=float(np.log10(bler_from_lut(lut, table_db[-1]))))


def bler_from_mmib(direct_lut, mmib):
    """
    BLER straight from the mean MIB
    """
    knots = direct_lut.mib_knots
    if mmib >= knots[-1]:
        return float(10.0 ** direct_lut.log_bler_at_top)
    if mmib <= knots[0]:
        return float(10.0 ** direct_lut.log_bler_first[0])

    i = int(np.searchsorted(knots, mmib, side='left'))
    if knots[i] == mmib:
        return float(10.0 ** direct_lut.log_bler_first[i])

    fraction = (mmib - knots[i - 1]) / (knots[i] - knots[i - 1])
    left = direct_lut.log_bler_last[i - 1]
    right = direct_lut.log_bler_first[i]
    return float(10.0 ** (left + fraction * (right - left)))


def save_awgn_lut(output_file_path, lut, manifest_digest=''):
    header = {
        'mcs': lut.mcs,
        'code_descriptor': lut.code_descriptor,
        'block_length': lut.block_length,
        'manifest_digest': manifest_digest
    }
    rows = zip(lut.snr_grid_db.tolist(), lut.bler.tolist(), lut.n_blocks.tolist())
    write_csv_file(output_file_path, header, ['snr_db', 'bler', 'n_blocks'], rows)


def load_awgn_lut(input_file_path):
    header, rows = read_csv_file(input_file_path)
    return AwgnLut.create(mcs=int(header['mcs']),
                          snr_grid_db=[float(r['snr_db']) for r in rows],
                          bler=[float(r['bler']) for r in rows],
                          block_length=int(header['block_length']),
                          code_descriptor=str(header['code_descriptor']),
                          n_blocks=[int(r['n_blocks']) for r in rows])
