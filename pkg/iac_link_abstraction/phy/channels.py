"""Rayleigh-fading effective channels of the two-cell interference scenario.

r_k = H1_k x1_k + H2_k x2_k + n_k, with the pathloss of the interfering link
folded into H2_k through the amplitude factor `interferer_scale`.
"""
import logging
from dataclasses import dataclass

import numpy as np

from iac_link_abstraction.phy.scenario_config import ScenarioConfig
from iac_link_abstraction.utils import (RNG_ALGORITHM, SCHEMA_VERSION,
                                        derive_seed, export_to_json_file,
                                        import_from_json_file, parallel_map)

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class ChannelRealization:
    """Per-subcarrier effective channels: h1 is (K, n_rx, v1), h2 is (K, n_rx, v2)."""

    h1: np.ndarray
    h2: np.ndarray
    seed: int
    interferer_scale: float

    def __post_init__(self):
        if self.h1.ndim != 3 or self.h2.ndim != 3:
            raise ValueError('Channels must have shape (subcarriers, n_rx, layers)')
        if self.h1.shape[:2] != self.h2.shape[:2]:
            raise ValueError(f'Mismatched channel shapes {self.h1.shape} and {self.h2.shape}')
        self.h1.setflags(write=False)
        self.h2.setflags(write=False)

    @property
    def n_subcarriers(self):
        return self.h1.shape[0]

    @property
    def v1(self):
        return self.h1.shape[2]

    @property
    def v2(self):
        return self.h2.shape[2]

    def to_dict(self):
        return {
            'seed': self.seed,
            'interferer_scale': self.interferer_scale,
            'h1': _complex_to_pairs(self.h1),
            'h2': _complex_to_pairs(self.h2)
        }

    @classmethod
    def from_dict(cls, data):
        return cls(h1=_pairs_to_complex(data['h1']),
                   h2=_pairs_to_complex(data['h2']),
                   seed=int(data['seed']),
                   interferer_scale=float(data['interferer_scale']))


def circular_gaussian(rng, shape):
    """
    Draws i.i.d. CN(0, 1) entries
    """
    return (rng.standard_normal(shape) + 1j * rng.standard_normal(shape)) / np.sqrt(2.0)


def generate(config):
    """
    Draws one realization; fully determined by the config (seed included)
    """
    rng = config.create_rng()
    shape = (config.n_subcarriers, config.n_rx)
    h1 = circular_gaussian(rng, shape + (config.v1,))
    h2 = circular_gaussian(rng, shape + (config.v2,)) * config.interferer_scale
    return ChannelRealization(h1=h1, h2=h2, seed=config.seed, interferer_scale=config.interferer_scale)


def generate_set(config, count, workers=1):
    """
    Draws count independent realizations with seeds derived from config.seed
    """
    if count < 1:
        raise ValueError(f'count must be at least 1, got {count}')

    configs = [config.model_copy(update={'seed': derive_seed(config.seed, i)}) for i in range(count)]
    return parallel_map(generate, configs, workers)


def generate_sweep(config, count, scales, workers=1):
    """
    Draws count realizations for each interferer scale
    Realization i of scale j is seeded from (j, i), so no two realizations of a sweep share a seed
    """
    if count < 1:
        raise ValueError(f'count must be at least 1, got {count}')

    configs = [config.model_copy(update={'interferer_scale': float(scale),
                                         'seed': derive_seed(config.seed, j, i)})
               for j, scale in enumerate(scales) for i in range(count)]
    realizations = parallel_map(generate, configs, workers)
    logger.info('Generated %d realizations over %d interferer scales', len(realizations), len(scales))
    return realizations


def save_channel_set(output_file_path, config, realizations, manifest_digest=''):
    """
    Dumps a channel set to JSON; complex entries are stored as [re, im] pairs
    """
    data = {
        'schema_version': SCHEMA_VERSION,
        'rng_algorithm': RNG_ALGORITHM,
        'manifest_digest': manifest_digest,
        'config': config.model_dump(mode='json'),
        'realizations': [r.to_dict() for r in realizations]
    }
    export_to_json_file(output_file_path, data)


def load_channel_set(input_file_path):
    """
    Loads a channel dump written by save_channel_set
    Returns the scenario config and the list of realizations
    """
    data = import_from_json_file(input_file_path)
    config = ScenarioConfig(**data['config'])
    realizations = [ChannelRealization.from_dict(r) for r in data['realizations']]
    return config, realizations


def _complex_to_pairs(values):
    return np.stack([values.real, values.imag], axis=-1).tolist()


def _pairs_to_complex(pairs):
    values = np.asarray(pairs, dtype=float)
    return values[..., 0] + 1j * values[..., 1]
