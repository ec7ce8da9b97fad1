"""Fitting of the ISR-adaptive combining model to measured block error rates."""
import logging
import math
from dataclasses import dataclass

import numpy as np

from iac_link_abstraction.abstraction.beta_model import BetaModel
from iac_link_abstraction.abstraction.pipeline import (predict,
                                                       prepare_link_state)
from iac_link_abstraction.errors import EmptyTrainingSet, MissingMeasurement
from iac_link_abstraction.lls.simulator import measure_bler
from iac_link_abstraction.phy.numerics import from_db, to_db
from iac_link_abstraction.training.search import (BETA_MIN_2D, TRACE_COLUMNS,
                                                  UNITS_PER_ONE,
                                                  SearchTrace,
                                                  directed_search_1d,
                                                  directed_search_2d,
                                                  directed_search_3d)
from iac_link_abstraction.utils import write_csv_file

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class TrainingSample:
    channels: object
    noise_var: float
    bler_monte: float

    def __post_init__(self):
        if not 0 < self.bler_monte <= 1:
            raise ValueError(f'bler_monte must lie in (0, 1], got {self.bler_monte}')

    @property
    def snr_db(self):
        return float(to_db(1.0 / self.noise_var))


@dataclass(frozen=True)
class FitResult:
    model: BetaModel
    mse: float
    trace: SearchTrace


def mse_log_bler(bler_est, bler_monte):
    """
    Sum of squared log10 BLER differences
    """
    differences = np.log10(np.asarray(bler_est, dtype=float)) - np.log10(np.asarray(bler_monte, dtype=float))
    return math.fsum((differences ** 2).tolist())


class TrainingContext:
    """
    Prediction error of candidate parameters over a fixed sample set
    The channel-dependent part of the pipeline is evaluated once per sample
    """

    def __init__(self, samples, mcs1, mod2, mib_table, lut):
        if not samples:
            raise EmptyTrainingSet('No training samples')
        self.mcs1 = mcs1
        self.mod2 = mod2
        self.mib_table = mib_table
        self.lut = lut
        self.states = [prepare_link_state(s.channels, s.noise_var, mib_table) for s in samples]
        self.bler_monte = np.array([s.bler_monte for s in samples])

    def model(self, params):
        y0, y1, beta_min = params
        return BetaModel(y0=y0, y1=y1, beta_min=beta_min, mcs1=self.mcs1.index, mod2=self.mod2)

    def predictions(self, model):
        return np.array([predict(state, model, self.mib_table, self.lut)[2] for state in self.states])

    def __call__(self, params):
        return mse_log_bler(self.predictions(self.model(params)), self.bler_monte)


class LiveBlerSource:
    """Measures BLER on demand with the link-level simulator."""

    def __init__(self, lls_config, workers=1):
        self.lls_config = lls_config
        self.workers = workers

    def bler(self, channels, snr_db):
        return measure_bler(self.lls_config, channels, snr_db, self.workers).bler


class TableBlerSource:
    """Looks BLER up in a measurement log written by the link-level simulator."""

    def __init__(self, records, mcs1, mod2):
        self.table = {(r.seed, round(r.rho, 6), round(r.snr_db, 6)): r.bler
                      for r in records if r.mcs == mcs1 and r.mod2 == mod2}
        self.mcs1 = mcs1
        self.mod2 = mod2

    def bler(self, channels, snr_db):
        key = (channels.seed, round(float(channels.interferer_scale), 6), round(float(snr_db), 6))
        if key not in self.table:
            raise MissingMeasurement(f'No measurement for realization {key[0]} (rho={key[1]}) at {key[2]} dB '
                                     f'(mcs1={self.mcs1}, mod2={self.mod2})')
        return self.table[key]


def build_training_samples(channel_set, snr_grid_db, bler_source):
    """
    One sample per (realization, SNR) pair
    """
    samples = [TrainingSample(channels=channels, noise_var=float(from_db(-snr_db)),
                              bler_monte=bler_source.bler(channels, snr_db))
               for channels in channel_set for snr_db in snr_grid_db]
    if not samples:
        raise EmptyTrainingSet('Training needs at least one realization and one SNR point')
    return samples


def fit_context(context):
    """
    2D search over (y0, y1) followed by the 3D search including the floor
    """
    trace = SearchTrace()
    y0_2d, y1_2d, mse_2d = directed_search_2d(context, trace)
    y0, y1, beta_min, mse = directed_search_3d(context, (y0_2d, y1_2d, 0.0), trace)
    if mse > mse_2d:
        # the 3D origin lifts the floor to 0
        logger.info('3D search ended above the 2D optimum, keeping the unfloored fit')
        y0, y1, beta_min, mse = y0_2d, y1_2d, BETA_MIN_2D / UNITS_PER_ONE, mse_2d
    logger.info('Fitted y0=%.2f y1=%.2f beta_min=%.2f, mse %.6g (2D stage %.6g)', y0, y1, beta_min, mse, mse_2d)
    return FitResult(model=context.model((y0, y1, beta_min)), mse=mse, trace=trace)


def fit_static_context(context):
    """
    Constant beta = y0 = y1 without floor
    """
    trace = SearchTrace()
    beta, mse = directed_search_1d(context, trace)
    logger.info('Fitted static beta=%.2f, mse %.6g', beta, mse)
    return FitResult(model=BetaModel.static(beta, context.mcs1.index, context.mod2), mse=mse, trace=trace)


def fit_beta_model(channel_set, snr_grid_db, bler_source, mcs1, mod2, mib_table, lut):
    """
    Raises EmptyTrainingSet if the channel set or the SNR set is empty
    """
    samples = build_training_samples(channel_set, snr_grid_db, bler_source)
    return fit_context(TrainingContext(samples, mcs1, mod2, mib_table, lut))


def fit_static_model(channel_set, snr_grid_db, bler_source, mcs1, mod2, mib_table, lut):
    samples = build_training_samples(channel_set, snr_grid_db, bler_source)
    return fit_static_context(TrainingContext(samples, mcs1, mod2, mib_table, lut))


def save_trace(output_file_path, trace, header=None):
    write_csv_file(output_file_path, header or {}, TRACE_COLUMNS, trace.rows)
