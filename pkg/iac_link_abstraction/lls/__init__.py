from .coding import (CODE_DESCRIPTOR, RATE_MATCHING_PATTERNS, decode, encode,
                     fit_info_bits, matched_length)
from .detector import maxlog_joint_llr
from .interleaver import BitInterleaver, deinterleave, interleave
from .lls_config import LlsConfig
from .mcs import DEFAULT_MCS_TABLE, McsEntry, default_mcs_table, mcs_entry
from .simulator import (BlerMeasurement, LinkLevelSimulator,
                        MeasurementRecord, awgn_channel, gen_awgn_lut,
                        load_measurements, measure_bler, measure_sweep,
                        save_measurements)

__all__ = [
    'CODE_DESCRIPTOR',
    'RATE_MATCHING_PATTERNS',
    'decode',
    'encode',
    'fit_info_bits',
    'matched_length',
    'maxlog_joint_llr',
    'BitInterleaver',
    'deinterleave',
    'interleave',
    'LlsConfig',
    'DEFAULT_MCS_TABLE',
    'McsEntry',
    'default_mcs_table',
    'mcs_entry',
    'BlerMeasurement',
    'LinkLevelSimulator',
    'MeasurementRecord',
    'awgn_channel',
    'gen_awgn_lut',
    'load_measurements',
    'measure_bler',
    'measure_sweep',
    'save_measurements'
]
