from .oracle import (BetaTrend, CurvePoint, OracleResult, ScatterPoint,
                     ScatterResult, beta_scatter, beta_trend, exact_mib,
                     filter_mib_band, isr_curve, optimal_beta, save_curve,
                     save_scatter)
from .oracle_config import OracleConfig

__all__ = [
    'BetaTrend',
    'CurvePoint',
    'OracleResult',
    'ScatterPoint',
    'ScatterResult',
    'beta_scatter',
    'beta_trend',
    'exact_mib',
    'filter_mib_band',
    'isr_curve',
    'optimal_beta',
    'save_curve',
    'save_scatter',
    'OracleConfig'
]
