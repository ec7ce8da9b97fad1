"""Exact (Monte-Carlo) bit-channel mutual information of the interference-aware ML receiver.

The expectation over the transmitted bits and symbols is taken by exhaustive
enumeration of the joint candidates; only the noise is sampled.
"""
import logging
from dataclasses import dataclass

import numpy as np
from scipy.special import logsumexp
from scipy.stats import kendalltau

from iac_link_abstraction.errors import DegenerateBounds
from iac_link_abstraction.phy.bounds import layer_bounds
from iac_link_abstraction.phy.channels import circular_gaussian
from iac_link_abstraction.phy.constellation import (candidate_vectors,
                                                    check_candidate_set,
                                                    make_constellation,
                                                    mib_lookup)
from iac_link_abstraction.phy.numerics import as_cmatrix
from iac_link_abstraction.utils import (create_rng, derive_seed,
                                        parallel_map, write_csv_file)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class OracleResult:
    mib_exact: float
    std_error: float


@dataclass(frozen=True)
class ScatterPoint:
    realization_seed: int
    subcarrier: int
    isr: float
    mib_low: float
    mib_up: float
    mib_exact: float
    std_error: float
    beta: float | None

    @property
    def degenerate(self):
        return self.beta is None


@dataclass(frozen=True)
class ScatterResult:
    points: list

    @property
    def retained(self):
        return [p for p in self.points if not p.degenerate]

    @property
    def n_degenerate(self):
        return sum(p.degenerate for p in self.points)

    def pairs(self):
        return [(p.isr, p.beta) for p in self.retained]


@dataclass(frozen=True)
class BetaTrend:
    bin_centers: np.ndarray
    medians: np.ndarray
    counts: np.ndarray
    kendall_tau: float


def exact_mib(h1, h2, mod1, mod2, noise_var, config):
    """
    MIB of serving layer config.layer under joint ML detection over serving and interfering symbols
    """
    h1 = as_cmatrix(h1)
    h2 = as_cmatrix(h2)
    constellation1 = make_constellation(mod1)
    constellation2 = make_constellation(mod2)
    check_candidate_set(constellation1, h1.shape[-1], constellation2, h2.shape[-1])

    labels1, symbols1 = candidate_vectors(constellation1, h1.shape[-1])
    _, symbols2 = candidate_vectors(constellation2, h2.shape[-1])
    n1, n2 = len(symbols1), len(symbols2)

    # noiseless received vectors of every joint candidate, serving index major
    received1 = symbols1 @ h1.T
    received2 = symbols2 @ h2.T
    joint = (received1[:, None, :] + received2[None, :, :]).reshape(n1 * n2, -1)

    layer_bits = constellation1.bit_matrix[labels1[:, config.layer - 1]]
    rng = create_rng(config.seed)
    n_rx = h1.shape[0]

    penalties = []
    for t in range(n1 * n2):
        noise = np.sqrt(noise_var) * circular_gaussian(rng, (config.n_noise_samples, n_rx))
        received = joint[t] + noise
        metrics = -np.sum(np.abs(received[:, None, :] - joint[None, :, :]) ** 2, axis=-1) / noise_var
        serving = logsumexp(metrics.reshape(-1, n1, n2), axis=2)
        total = logsumexp(serving, axis=1)

        transmitted_bits = layer_bits[t // n2]
        penalty = np.zeros(config.n_noise_samples)
        for m, bit in enumerate(transmitted_bits):
            matching = serving[:, layer_bits[:, m] == bit]
            penalty += (total - logsumexp(matching, axis=1)) / np.log(2.0)
        penalties.append(penalty / len(transmitted_bits))

    penalties = np.concatenate(penalties)
    mib = 1.0 - float(np.mean(penalties))
    std_error = float(np.std(penalties, ddof=1) / np.sqrt(len(penalties)))
    return OracleResult(mib_exact=float(np.clip(mib, 0.0, 1.0)), std_error=std_error)


def optimal_beta(mib_exact, mib_low, mib_up, min_gap=1e-3):
    """
    Combining ratio reproducing mib_exact from the two bounds; not clamped
    """
    gap = mib_up - mib_low
    if gap < min_gap:
        raise DegenerateBounds(f'Bound gap {gap:.2e} below {min_gap:.0e}')
    return (mib_exact - mib_low) / gap


def beta_scatter(channel_set, noise_var, mod1, mod2, mib_table, config, workers=1):
    """
    Optimal combining ratio for every subcarrier of every realization
    Points whose bounds coincide are kept with beta=None
    """
    units = []
    for realization in channel_set:
        for k in range(realization.n_subcarriers):
            seed = derive_seed(config.seed, len(units))
            units.append((realization.h1[k], realization.h2[k], realization.seed, k,
                          mod1, mod2, noise_var, mib_table, config.model_copy(update={'seed': seed})))

    points = parallel_map(_scatter_unit, units, workers)
    result = ScatterResult(points=points)
    logger.info('Evaluated %d scatter points, %d degenerate', len(points), result.n_degenerate)
    return result


def _scatter_unit(unit):
    h1, h2, realization_seed, k, mod1, mod2, noise_var, mib_table, config = unit
    bounds = layer_bounds(h1, h2, noise_var, config.layer)
    mib_low = float(mib_lookup(mib_table, bounds.gamma_mmse))
    mib_up = float(mib_lookup(mib_table, bounds.gamma_if))
    oracle = exact_mib(h1, h2, mod1, mod2, noise_var, config)

    try:
        beta = optimal_beta(oracle.mib_exact, mib_low, mib_up, config.min_bound_gap)
    except DegenerateBounds:
        beta = None

    return ScatterPoint(realization_seed=realization_seed,
                        subcarrier=k,
                        isr=float(bounds.isr),
                        mib_low=mib_low,
                        mib_up=mib_up,
                        mib_exact=oracle.mib_exact,
                        std_error=oracle.std_error,
                        beta=beta)


def filter_mib_band(points, low, high):
    """
    Keeps points whose exact MIB lies in [low, high]
    """
    return [p for p in points if low <= p.mib_exact <= high]


def beta_trend(points, n_bins=10):
    """
    Median optimal beta per equal-width ISR bin and Kendall's tau between bin index and median
    """
    retained = [p for p in points if not p.degenerate]
    edges = np.linspace(0.0, 1.0, n_bins + 1)
    isr_values = np.array([p.isr for p in retained])
    betas = np.array([p.beta for p in retained])
    indices = np.clip(np.digitize(isr_values, edges) - 1, 0, n_bins - 1)

    centers, medians, counts = [], [], []
    for b in range(n_bins):
        selected = betas[indices == b]
        if len(selected):
            centers.append(0.5 * (edges[b] + edges[b + 1]))
            medians.append(float(np.median(selected)))
            counts.append(len(selected))

    tau = kendalltau(np.arange(len(medians)), medians).statistic if len(medians) > 1 else float('nan')
    return BetaTrend(bin_centers=np.array(centers),
                     medians=np.array(medians),
                     counts=np.array(counts),
                     kendall_tau=float(tau))


def save_scatter(output_file_path, result, header=None):
    """
    Dumps scatter points to CSV, one row per subcarrier
    """
    columns = ['realization_seed', 'subcarrier', 'isr', 'mib_low', 'mib_up',
               'mib_exact', 'std_error', 'beta', 'degenerate_flag']
    rows = [(p.realization_seed, p.subcarrier, p.isr, p.mib_low, p.mib_up,
             p.mib_exact, p.std_error, p.beta, p.degenerate) for p in result.points]
    write_csv_file(output_file_path, header or {}, columns, rows)


@dataclass(frozen=True)
class CurvePoint:
    rho: float
    isr: float
    mib_low: float
    mib_up: float
    mib_exact: float
    std_error: float
    beta: float | None

    @property
    def degenerate(self):
        return self.beta is None


def isr_curve(realization, subcarrier, scales, noise_var, mod1, mod2, mib_table, config, workers=1):
    """
    Bounds, exact MIB and optimal beta of one subcarrier while its interferer is rescaled to each value of scales
    Every point reuses the oracle seed, so the curve is smooth in rho
    """
    if realization.interferer_scale <= 0:
        raise ValueError('The interferer of the realization is zero and cannot be rescaled')
    if not 0 <= subcarrier < realization.n_subcarriers:
        raise ValueError(f'Subcarrier {subcarrier} outside 0..{realization.n_subcarriers - 1}')

    h1 = realization.h1[subcarrier]
    h2_unit = realization.h2[subcarrier] / realization.interferer_scale
    units = [(h1, h2_unit * float(rho), realization.seed, subcarrier, mod1, mod2, noise_var, mib_table, config)
             for rho in scales]
    points = [CurvePoint(rho=float(rho), isr=p.isr, mib_low=p.mib_low, mib_up=p.mib_up,
                         mib_exact=p.mib_exact, std_error=p.std_error, beta=p.beta)
              for rho, p in zip(scales, parallel_map(_scatter_unit, units, workers))]
    logger.info('Evaluated the ISR curve of realization %d, subcarrier %d over %d scales',
                realization.seed, subcarrier, len(points))
    return points


def save_curve(output_file_path, points, header=None):
    columns = ['rho', 'isr', 'mib_low', 'mib_up', 'mib_exact', 'std_error', 'beta', 'degenerate_flag']
    rows = [(p.rho, p.isr, p.mib_low, p.mib_up, p.mib_exact, p.std_error, p.beta, p.degenerate) for p in points]
    write_csv_file(output_file_path, header or {}, columns, rows)
