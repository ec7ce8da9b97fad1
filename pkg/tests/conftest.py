import numpy as np
import pytest

from iac_link_abstraction.abstraction import AwgnLut
from iac_link_abstraction.lls import LlsConfig
from iac_link_abstraction.phy import MibGridSpec, ScenarioConfig, build_mib_table


@pytest.fixture(scope='session')
def qpsk_table():
    return build_mib_table(4, MibGridSpec(step_db=0.5))


@pytest.fixture(scope='session')
def qam16_table():
    return build_mib_table(16, MibGridSpec(step_db=0.5))


@pytest.fixture(scope='session')
def waterfall_lut():
    """
    MCS 9 curve whose log10 BLER falls linearly from 0 at -10 dB to -4 at 20 dB
    """
    grid = np.arange(-10.0, 21.0, 1.0)
    bler = 10.0 ** (-4.0 * (grid + 10.0) / 30.0)
    return AwgnLut.create(mcs=9, snr_grid_db=grid, bler=bler, block_length=42,
                          code_descriptor='synthetic', n_blocks=np.full(len(grid), 1000))


@pytest.fixture
def scenario():
    return ScenarioConfig(n_rx=2, v1=1, v2=1, n_subcarriers=8, seed=5)


@pytest.fixture
def small_lls_config():
    return LlsConfig(mcs=9,
                     mod2=4,
                     scenario={'n_rx': 2, 'v1': 1, 'v2': 1, 'n_subcarriers': 16},
                     min_block_errors=20,
                     max_blocks=100,
                     batch_size=25,
                     seed=3)
