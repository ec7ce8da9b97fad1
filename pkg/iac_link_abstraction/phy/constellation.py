"""Gray-labeled square QAM constellations and the AWGN MIB mapping function.

The MIB table built here is the single source of truth for both the forward
map I_Mc(gamma) and its inverse used by the effective SINR mapping.
"""
import itertools
import logging
from dataclasses import dataclass, field

import numpy as np
from numpy.polynomial.hermite import hermgauss
from pydantic import BaseModel, ConfigDict, Field
from scipy.optimize import isotonic_regression
from scipy.special import logsumexp

from iac_link_abstraction.errors import (CandidateSetTooLarge, GridTooSmall,
                                         UnsupportedOrder)
from iac_link_abstraction.phy.numerics import (from_db,
                                               invert_monotone_piecewise,
                                               to_db)
from iac_link_abstraction.utils import create_rng, read_csv_file, write_csv_file

logger = logging.getLogger(__name__)

SUPPORTED_ORDERS = (4, 16, 64)

MAX_CANDIDATES = 2 ** 16


@dataclass(frozen=True, eq=False)
class Constellation:
    """Square QAM with unit average power; points[i] carries label i."""

    order: int
    points: np.ndarray
    labels: np.ndarray

    @property
    def bits_per_symbol(self):
        return int(np.log2(self.order))

    @property
    def bit_matrix(self):
        """
        (order, bits_per_symbol) array of label bits, most significant bit first
        """
        shifts = np.arange(self.bits_per_symbol - 1, -1, -1)
        return (self.labels[:, None] >> shifts[None, :]) & 1

    def map_bits(self, bits):
        """
        Maps bits (..., bits_per_symbol) to symbols (...)
        """
        bits = np.asarray(bits, dtype=int)
        weights = 1 << np.arange(self.bits_per_symbol - 1, -1, -1)
        return self.points[bits @ weights]


def make_constellation(order):
    """
    Builds a square QAM whose I and Q axes each carry a reflected Gray code
    The I axis carries the most significant half of the label
    """
    if order not in SUPPORTED_ORDERS:
        raise UnsupportedOrder(f'Unsupported modulation order {order}; expected one of {SUPPORTED_ORDERS}')

    side = int(round(np.sqrt(order)))
    axis_bits = int(np.log2(side))
    levels = 2 * np.arange(side) - (side - 1)
    gray = np.arange(side) ^ (np.arange(side) >> 1)
    norm = np.sqrt(2.0 * (order - 1) / 3.0)

    points = np.empty(order, dtype=complex)
    for i_index, q_index in itertools.product(range(side), range(side)):
        label = (gray[i_index] << axis_bits) | gray[q_index]
        points[label] = (levels[i_index] + 1j * levels[q_index]) / norm

    points.setflags(write=False)
    labels = np.arange(order)
    labels.setflags(write=False)
    return Constellation(order=order, points=points, labels=labels)


def candidate_vectors(constellation, n_layers):
    """
    Enumerates all symbol vectors of n_layers layers
    Returns (labels, symbols), both shaped (order ** n_layers, n_layers)
    """
    labels = np.array(list(itertools.product(range(constellation.order), repeat=n_layers)), dtype=int)
    return labels, constellation.points[labels]


def check_candidate_set(constellation1, v1, constellation2, v2):
    """
    Raises CandidateSetTooLarge when exhaustive joint enumeration exceeds the guard
    """
    size = constellation1.order ** v1 * constellation2.order ** v2
    if size > MAX_CANDIDATES:
        raise CandidateSetTooLarge(f'Joint candidate set of size {size} exceeds {MAX_CANDIDATES}')
    return size


def awgn_bit_mi(constellation, gamma_linear, nodes=16, method='quadrature', n_samples=100000, seed=0):
    """
    Mean per-bit mutual information of y = sqrt(gamma) s + w, w ~ CN(0, 1)
    The noise expectation uses a nodes x nodes Gauss-Hermite rule, or Monte-Carlo as a fallback
    """
    if gamma_linear < 0:
        raise ValueError(f'gamma must be non-negative, got {gamma_linear}')

    if method == 'quadrature':
        x, w = hermgauss(nodes)
        noise = (x[:, None] + 1j * x[None, :]).ravel()
        weights = (w[:, None] * w[None, :]).ravel() / np.pi
    elif method == 'monte_carlo':
        rng = create_rng(seed)
        noise = (rng.standard_normal(n_samples) + 1j * rng.standard_normal(n_samples)) / np.sqrt(2.0)
        weights = np.full(n_samples, 1.0 / n_samples)
    else:
        raise ValueError(f'Unknown integration method {method}')

    amplitude = np.sqrt(gamma_linear)
    points = constellation.points
    bits = constellation.bit_matrix

    # log-likelihoods up to a common constant: (transmitted, noise, candidate)
    received = amplitude * points[:, None] + noise[None, :]
    metrics = -np.abs(received[:, :, None] - amplitude * points[None, None, :]) ** 2
    total = logsumexp(metrics, axis=2)

    information = 0.0
    for m in range(constellation.bits_per_symbol):
        same_bit = bits[:, m][:, None] == bits[:, m][None, :]
        masked = np.where(same_bit[:, None, :], metrics, -np.inf)
        penalty = (total - logsumexp(masked, axis=2)) / np.log(2.0)
        information += 1.0 - np.mean(penalty @ weights)

    return float(np.clip(information / constellation.bits_per_symbol, 0.0, 1.0))


class MibGridSpec(BaseModel):
    """SNR grid and integration settings of a MIB table."""

    model_config = ConfigDict(frozen=True)

    min_db: float = -20.0
    max_db: float = 30.0
    step_db: float = Field(default=0.25, gt=0)
    nodes: int = Field(default=16, ge=2)

    @property
    def grid_db(self):
        count = int(round((self.max_db - self.min_db) / self.step_db)) + 1
        return self.min_db + self.step_db * np.arange(count)


@dataclass(frozen=True, eq=False)
class MibTable:
    """Monotone map from post-processing SNR (dB) to MIB for one modulation order."""

    modulation: int
    gamma_grid_db: np.ndarray
    mib: np.ndarray
    settings: dict = field(default_factory=dict)

    def __post_init__(self):
        if len(self.gamma_grid_db) < 2:
            raise GridTooSmall(f'MIB table needs at least two grid points, got {len(self.gamma_grid_db)}')
        if np.any(np.diff(self.mib) < 0):
            raise ValueError('MIB table must be non-decreasing')


def build_mib_table(order, grid_spec=MibGridSpec()):
    """
    Evaluates awgn_bit_mi on the grid and removes quadrature jitter by isotonic regression
    """
    grid_db = grid_spec.grid_db
    if len(grid_db) < 2:
        raise GridTooSmall(f'MIB grid needs at least two points, got {len(grid_db)}')

    constellation = make_constellation(order)
    raw = np.array([awgn_bit_mi(constellation, g, nodes=grid_spec.nodes) for g in from_db(grid_db)])
    mib = np.clip(isotonic_regression(raw, increasing=True).x, 0.0, 1.0)

    if mib[0] > 0.01 or mib[-1] < 0.999:
        logger.warning('MIB table for order %d spans [%.4f, %.4f]; widen the grid', order, mib[0], mib[-1])
    logger.info('Built MIB table for order %d on %d grid points', order, len(grid_db))

    return MibTable(modulation=order,
                    gamma_grid_db=grid_db,
                    mib=mib,
                    settings={'grid_step_db': grid_spec.step_db,
                              'nodes': grid_spec.nodes,
                              'method': 'gauss-hermite'})


def mib_lookup(table, gamma_linear):
    """
    Linear interpolation in (dB, MIB); clamps outside the grid
    """
    return np.interp(to_db(gamma_linear), table.gamma_grid_db, table.mib)


def mib_inverse(table, mib):
    """
    Smallest SNR (linear) whose interpolated MIB reaches mib; clamps to the grid ends
    """
    return float(from_db(invert_monotone_piecewise(table.gamma_grid_db, table.mib, float(mib))))


def save_mib_table(output_file_path, table, manifest_digest=''):
    header = {'modulation': table.modulation, 'manifest_digest': manifest_digest}
    header.update(table.settings)
    rows = zip(table.gamma_grid_db.tolist(), table.mib.tolist())
    write_csv_file(output_file_path, header, ['gamma_db', 'mib'], rows)


def load_mib_table(input_file_path):
    header, rows = read_csv_file(input_file_path)
    settings = {k: v for k, v in header.items() if k not in ('modulation', 'manifest_digest', 'schema_version')}
    return MibTable(modulation=int(header['modulation']),
                    gamma_grid_db=np.array([float(r['gamma_db']) for r in rows]),
                    mib=np.array([float(r['mib']) for r in rows]),
                    settings=settings)
