from .bounds import LayerBounds, if_sinr, isr, layer_bounds, mmse_sinr
from .channels import (ChannelRealization, generate, generate_set,
                       generate_sweep, load_channel_set, save_channel_set)
from .constellation import (Constellation, MibGridSpec, MibTable,
                            awgn_bit_mi, build_mib_table, load_mib_table,
                            make_constellation, mib_inverse, mib_lookup,
                            save_mib_table)
from .numerics import (NumericsSettings, frobenius_norm, gram,
                       inverse_hermitian)
from .scenario_config import ScenarioConfig

__all__ = [
    'LayerBounds',
    'if_sinr',
    'isr',
    'layer_bounds',
    'mmse_sinr',
    'ChannelRealization',
    'generate',
    'generate_set',
    'generate_sweep',
    'load_channel_set',
    'save_channel_set',
    'Constellation',
    'MibGridSpec',
    'MibTable',
    'awgn_bit_mi',
    'build_mib_table',
    'load_mib_table',
    'make_constellation',
    'mib_inverse',
    'mib_lookup',
    'save_mib_table',
    'NumericsSettings',
    'frobenius_norm',
    'gram',
    'inverse_hermitian',
    'ScenarioConfig'
]
