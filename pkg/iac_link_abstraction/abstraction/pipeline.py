"""Link performance abstraction: bounds -> MIB -> ISR-adaptive combining -> MMIB -> ESM -> BLER."""
import logging
import math
from dataclasses import dataclass

import numpy as np

from iac_link_abstraction.abstraction.awgn_lut import (bler_from_lut,
                                                       snr_from_lut)
from iac_link_abstraction.abstraction.beta_model import beta_of_isr
from iac_link_abstraction.errors import ConfigError, EmptyInput
from iac_link_abstraction.phy.bounds import layer_bounds
from iac_link_abstraction.phy.constellation import mib_inverse, mib_lookup
from iac_link_abstraction.phy.numerics import to_db
from iac_link_abstraction.utils import read_csv_file, write_csv_file

logger = logging.getLogger(__name__)

REPORT_COLUMNS = ['seed', 'rho', 'snr_db', 'mean_isr', 'mean_mib_low', 'mean_mib_up',
                  'mmib', 'sinr_eff_db', 'bler_est', 'bler_monte', 'sinr_awgn_db']


@dataclass(frozen=True, eq=False)
class LinkState:
    """Model-independent part of one channel state: per (subcarrier, layer) bounds and ISR."""

    seed: int
    rho: float
    snr_db: float
    isr: np.ndarray
    mib_low: np.ndarray
    mib_up: np.ndarray


@dataclass(frozen=True)
class AbstractionRecord:
    seed: int
    rho: float
    snr_db: float
    mean_isr: float
    mean_mib_low: float
    mean_mib_up: float
    mmib: float
    sinr_eff_db: float
    bler_est: float
    bler_monte: float | None = None
    sinr_awgn_db: float | None = None

    def as_row(self):
        return tuple(getattr(self, column) for column in REPORT_COLUMNS)


def combine_mib(mib_low, mib_up, beta):
    """
    (1 - beta) * low + beta * up, clamped to [0, 1]
    """
    return np.clip((1.0 - beta) * mib_low + beta * mib_up, 0.0, 1.0)


def mmib(values):
    """
    Mean MIB with compensated summation so that results do not depend on evaluation order
    """
    values = np.ravel(values)
    if len(values) == 0:
        raise EmptyInput('MMIB of an empty set of MIB values')
    return math.fsum(values.tolist()) / len(values)


def prepare_link_state(channels, noise_var, mib_table):
    """
    Evaluates the SINR bounds of every serving layer on every subcarrier and maps them to MIB
    """
    isr, low, up = [], [], []
    for layer in range(1, channels.v1 + 1):
        bounds = layer_bounds(channels.h1, channels.h2, noise_var, layer)
        isr.append(bounds.isr)
        low.append(mib_lookup(mib_table, bounds.gamma_mmse))
        up.append(mib_lookup(mib_table, bounds.gamma_if))

    return LinkState(seed=channels.seed,
                     rho=channels.interferer_scale,
                     snr_db=float(to_db(1.0 / noise_var)),
                     isr=np.concatenate(isr),
                     mib_low=np.concatenate(low),
                     mib_up=np.concatenate(up))


def predict(state, model, mib_table, lut):
    """
    Returns (mmib, sinr_eff_db, bler_est) of a prepared state under a beta model
    """
    beta = beta_of_isr(model, state.isr)
    mean_mib = mmib(combine_mib(state.mib_low, state.mib_up, beta))
    sinr_eff_db = float(to_db(mib_inverse(mib_table, mean_mib)))
    return mean_mib, sinr_eff_db, float(bler_from_lut(lut, sinr_eff_db))


def abstract_link(channels, noise_var, mcs1, mod2, model, mib_tables, lut, bler_monte=None):
    """
    Predicts the instantaneous BLER of one channel state
    """
    if (model.mcs1, model.mod2) != (mcs1.index, mod2):
        raise ConfigError(f'Beta model for ({model.mcs1}, {model.mod2}) used with ({mcs1.index}, {mod2})')
    if lut.mcs != mcs1.index:
        raise ConfigError(f'AWGN LUT of MCS {lut.mcs} used with MCS {mcs1.index}')
    if mcs1.modulation not in mib_tables:
        raise ConfigError(f'No MIB table for modulation order {mcs1.modulation}')

    mib_table = mib_tables[mcs1.modulation]
    state = prepare_link_state(channels, noise_var, mib_table)
    return record_from_state(state, model, mib_table, lut, bler_monte)


def record_from_state(state, model, mib_table, lut, bler_monte=None):
    mean_mib, sinr_eff_db, bler_est = predict(state, model, mib_table, lut)
    sinr_awgn_db = snr_from_lut(lut, bler_monte) if bler_monte is not None else None
    return AbstractionRecord(seed=state.seed,
                             rho=state.rho,
                             snr_db=state.snr_db,
                             mean_isr=float(np.mean(state.isr)),
                             mean_mib_low=float(np.mean(state.mib_low)),
                             mean_mib_up=float(np.mean(state.mib_up)),
                             mmib=mean_mib,
                             sinr_eff_db=sinr_eff_db,
                             bler_est=bler_est,
                             bler_monte=bler_monte,
                             sinr_awgn_db=sinr_awgn_db)


def save_report(output_file_path, records, header=None):
    write_csv_file(output_file_path, header or {}, REPORT_COLUMNS, [r.as_row() for r in records])


def load_report(input_file_path):
    """
    Returns the report header and its records
    """
    header, rows = read_csv_file(input_file_path)
    records = [AbstractionRecord(seed=int(row['seed']),
                                 rho=float(row['rho']),
                                 snr_db=float(row['snr_db']),
                                 mean_isr=float(row['mean_isr']),
                                 mean_mib_low=float(row['mean_mib_low']),
                                 mean_mib_up=float(row['mean_mib_up']),
                                 mmib=float(row['mmib']),
                                 sinr_eff_db=float(row['sinr_eff_db']),
                                 bler_est=float(row['bler_est']),
                                 bler_monte=_optional_float(row['bler_monte']),
                                 sinr_awgn_db=_optional_float(row['sinr_awgn_db']))
               for row in rows]
    return header, records


def _optional_float(value):
    return float(value) if value not in (None, '') else None
