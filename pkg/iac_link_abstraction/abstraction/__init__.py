from .awgn_lut import (AwgnLut, DirectMmibLut, bler_from_lut, bler_from_mmib,
                       build_direct_lut, load_awgn_lut, save_awgn_lut,
                       snr_from_lut)
from .beta_model import (BetaModel, append_beta_model, beta_of_isr,
                         load_beta_models, select_beta_model)
from .pipeline import (AbstractionRecord, LinkState, abstract_link,
                       combine_mib, load_report, mmib, predict,
                       prepare_link_state, record_from_state, save_report)
from .validation import delta_db, summarize, validate_records

__all__ = [
    'AwgnLut',
    'DirectMmibLut',
    'bler_from_lut',
    'bler_from_mmib',
    'build_direct_lut',
    'load_awgn_lut',
    'save_awgn_lut',
    'snr_from_lut',
    'BetaModel',
    'append_beta_model',
    'beta_of_isr',
    'load_beta_models',
    'select_beta_model',
    'AbstractionRecord',
    'LinkState',
    'abstract_link',
    'combine_mib',
    'load_report',
    'mmib',
    'predict',
    'prepare_link_state',
    'record_from_state',
    'save_report',
    'delta_db',
    'summarize',
    'validate_records'
]
