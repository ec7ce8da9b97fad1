"""Monte-Carlo BLER measurement of the BICM link with joint max-log detection.

Blocks are simulated in fixed-size batches, each batch drawing from its own
derived seed, so a measurement depends on the master seed and the batch size
but never on the number of workers.
"""
import logging
from dataclasses import dataclass

import numpy as np

from iac_link_abstraction.abstraction.awgn_lut import AwgnLut
from iac_link_abstraction.errors import GridTooSmall, LengthMismatch
from iac_link_abstraction.lls.coding import CODE_DESCRIPTOR, decode, encode
from iac_link_abstraction.lls.detector import maxlog_joint_llr
from iac_link_abstraction.lls.interleaver import BitInterleaver
from iac_link_abstraction.phy.channels import (ChannelRealization,
                                               circular_gaussian)
from iac_link_abstraction.phy.constellation import make_constellation
from iac_link_abstraction.phy.numerics import from_db
from iac_link_abstraction.utils import (create_rng, derive_seed,
                                        parallel_map, read_csv_file,
                                        write_csv_file)

logger = logging.getLogger(__name__)

MEASUREMENT_COLUMNS = ['seed', 'snr_db', 'rho', 'mcs', 'mod2', 'n_blocks', 'n_errors', 'bler']

AWGN_TOP_BLER = 0.99


@dataclass(frozen=True)
class BlerMeasurement:
    bler: float
    n_blocks: int
    n_errors: int


@dataclass(frozen=True)
class MeasurementRecord:
    seed: int
    snr_db: float
    rho: float
    mcs: int
    mod2: int
    n_blocks: int
    n_errors: int
    bler: float

    def as_row(self):
        return tuple(getattr(self, column) for column in MEASUREMENT_COLUMNS)


def floored_bler(n_errors, n_blocks):
    """
    Error rate, or half an error over the measured blocks when none was observed
    """
    return n_errors / n_blocks if n_errors else 0.5 / n_blocks


def awgn_channel(n_symbols, seed=0):
    """
    Single stream, unit gain, no interferer
    """
    return ChannelRealization(h1=np.ones((n_symbols, 1, 1), dtype=complex),
                              h2=np.zeros((n_symbols, 1, 0), dtype=complex),
                              seed=seed,
                              interferer_scale=0.0)


class LinkLevelSimulator:
    """Transmits random blocks through encode, interleave, map, channel, detect, deinterleave and decode."""

    def __init__(self, config):
        self.config = config
        self.constellation1 = make_constellation(config.mcs.modulation)
        self.constellation2 = make_constellation(config.mod2)
        self.interleaver = BitInterleaver(config.capacity, config.seed)

    def awgn_channel(self):
        return awgn_channel(self.config.scenario.n_subcarriers * self.config.scenario.v1)

    def simulate_batch(self, channels, noise_var, n_blocks, seed):
        """
        Returns the block error flags of n_blocks blocks drawn from seed
        """
        mcs = self.config.mcs
        n_subcarriers, n_rx, v1 = channels.h1.shape
        if n_subcarriers * v1 * mcs.bits_per_symbol != self.config.capacity:
            raise LengthMismatch(f'Channel carries {n_subcarriers * v1 * mcs.bits_per_symbol} coded bits, '
                                 f'the codeword has {self.config.capacity}')

        rng = create_rng(seed)
        info = rng.integers(0, 2, (n_blocks, mcs.info_bits))
        coded = np.zeros((n_blocks, self.config.capacity), dtype=int)
        coded[:, :mcs.matched_length] = [encode(bits, mcs.code_rate) for bits in info]

        bits = self.interleaver.interleave(coded).reshape(n_blocks, n_subcarriers, v1, mcs.bits_per_symbol)
        x1 = self.constellation1.map_bits(bits)
        x2 = self.constellation2.points[rng.integers(0, self.config.mod2, (n_blocks, n_subcarriers, channels.v2))]
        noise = np.sqrt(noise_var) * circular_gaussian(rng, (n_blocks, n_subcarriers, n_rx))
        r = np.einsum('krv,bkv->bkr', channels.h1, x1) + np.einsum('krv,bkv->bkr', channels.h2, x2) + noise

        llrs = maxlog_joint_llr(r, channels.h1, channels.h2, self.constellation1, self.constellation2, noise_var)
        llrs = self.interleaver.deinterleave(llrs.reshape(n_blocks, -1))
        decoded = decode(llrs[:, :mcs.matched_length], mcs.info_bits, mcs.code_rate)
        return np.any(decoded != info, axis=1)

    def measure(self, channels=None, snr_db=0.0, workers=1, seed=None):
        """
        Counts block errors until min_block_errors is reached or max_blocks were sent
        channels=None simulates the AWGN reference link
        """
        config = self.config
        channels = channels if channels is not None else self.awgn_channel()
        noise_var = float(from_db(-snr_db))
        point_seed = derive_seed(config.seed if seed is None else seed, channels.seed)
        n_batches = -(-config.max_blocks // config.batch_size)

        flags = np.zeros(0, dtype=bool)
        stop = None
        next_batch = 0
        while stop is None and next_batch < n_batches:
            batches = range(next_batch, min(next_batch + max(1, workers), n_batches))
            units = [(config, channels, noise_var,
                      min(config.batch_size, config.max_blocks - b * config.batch_size),
                      derive_seed(point_seed, b + 1))
                     for b in batches]
            flags = np.concatenate([flags] + parallel_map(_simulate_unit, units, workers))
            next_batch = batches.stop

            reached = np.flatnonzero(np.cumsum(flags) >= config.min_block_errors)
            if len(reached):
                stop = int(reached[0]) + 1

        n_blocks = stop or len(flags)
        n_errors = int(np.sum(flags[:n_blocks]))
        return BlerMeasurement(bler=floored_bler(n_errors, n_blocks), n_blocks=n_blocks, n_errors=n_errors)


def _simulate_unit(unit):
    config, channels, noise_var, n_blocks, seed = unit
    return LinkLevelSimulator(config).simulate_batch(channels, noise_var, n_blocks, seed)


def measure_bler(config, channels=None, snr_db=0.0, workers=1, seed=None):
    return config.create_simulator().measure(channels, snr_db, workers, seed)


def measure_sweep(config, channel_set, snr_grid_db, workers=1):
    """
    Measures every (realization, SNR) pair of a channel set
    """
    simulator = config.create_simulator()
    records = []
    for channels in channel_set:
        for snr_db in snr_grid_db:
            measurement = simulator.measure(channels, snr_db, workers)
            records.append(_record(channels.seed, snr_db, channels.interferer_scale, config, measurement))
        logger.info('Measured realization %d over %d SNR points', channels.seed, len(snr_grid_db))
    return records


def gen_awgn_lut(config, mcs_indices, snr_grid_db, workers=1, max_extensions=10):
    """
    Measures AWGN reference curves, extending the grid by its step until the curve spans
    from BLER >= 0.99 down to an error-free point
    Returns {mcs index: AwgnLut} and the raw measurement records
    """
    snr_grid_db = sorted(float(s) for s in snr_grid_db)
    if len(snr_grid_db) < 2:
        raise GridTooSmall(f'AWGN SNR grid needs at least two points, got {len(snr_grid_db)}')
    step = snr_grid_db[1] - snr_grid_db[0]

    luts, records = {}, []
    for index in mcs_indices:
        mcs_config = config.with_mcs(index)
        simulator = mcs_config.create_simulator()
        measured = {snr_db: simulator.measure(None, snr_db, workers) for snr_db in snr_grid_db}

        for _ in range(max_extensions):
            lowest = min(measured)
            if measured[lowest].bler >= AWGN_TOP_BLER:
                break
            measured[round(lowest - step, 10)] = simulator.measure(None, round(lowest - step, 10), workers)
        else:
            logger.warning('AWGN curve of MCS %d still below BLER %.2f at %.2f dB', index, AWGN_TOP_BLER, min(measured))

        for _ in range(max_extensions):
            highest = max(measured)
            if measured[highest].n_errors == 0:
                break
            measured[round(highest + step, 10)] = simulator.measure(None, round(highest + step, 10), workers)
        else:
            logger.warning('AWGN curve of MCS %d still has errors at %.2f dB', index, max(measured))

        grid = sorted(measured)
        mcs = mcs_config.mcs
        luts[index] = AwgnLut.create(mcs=index,
                                     snr_grid_db=grid,
                                     bler=[measured[s].bler for s in grid],
                                     block_length=mcs.info_bits,
                                     code_descriptor=f'{CODE_DESCRIPTOR} rate {mcs.code_rate} {mcs.modulation}QAM',
                                     n_blocks=[measured[s].n_blocks for s in grid])
        records += [_record(mcs_config.seed, s, 0.0, mcs_config, measured[s]) for s in grid]
        logger.info('Measured AWGN curve of MCS %d on %d points', index, len(grid))

    return luts, records


def _record(seed, snr_db, rho, config, measurement):
    return MeasurementRecord(seed=seed,
                             snr_db=float(snr_db),
                             rho=float(rho),
                             mcs=config.mcs.index,
                             mod2=config.mod2,
                             n_blocks=measurement.n_blocks,
                             n_errors=measurement.n_errors,
                             bler=measurement.bler)


def save_measurements(output_file_path, records, header=None):
    write_csv_file(output_file_path, header or {}, MEASUREMENT_COLUMNS, [r.as_row() for r in records])


def load_measurements(input_file_path):
    _, rows = read_csv_file(input_file_path)
    return [MeasurementRecord(seed=int(row['seed']),
                              snr_db=float(row['snr_db']),
                              rho=float(row['rho']),
                              mcs=int(row['mcs']),
                              mod2=int(row['mod2']),
                              n_blocks=int(row['n_blocks']),
                              n_errors=int(row['n_errors']),
                              bler=float(row['bler']))
            for row in rows]
