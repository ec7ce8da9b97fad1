"""Accuracy of predicted effective SINRs against the AWGN-equivalent SINR of measured BLERs."""
import numpy as np

from iac_link_abstraction.errors import EmptyInput

PERCENTILES = (5, 50, 95)


def delta_db(records):
    """
    sinr_eff_db - sinr_awgn_db of every record that carries a measurement
    """
    return np.array([r.sinr_eff_db - r.sinr_awgn_db for r in records if r.sinr_awgn_db is not None])


def summarize(deltas):
    deltas = np.asarray(deltas, dtype=float)
    if len(deltas) == 0:
        raise EmptyInput('No record with a measured BLER to validate against')

    summary = {
        'count': len(deltas),
        'rms_db': float(np.sqrt(np.mean(deltas ** 2))),
        'mean_db': float(np.mean(deltas)),
        'mean_abs_db': float(np.mean(np.abs(deltas)))
    }
    for p, value in zip(PERCENTILES, np.percentile(deltas, PERCENTILES)):
        summary[f'p{p}_db'] = float(value)
    return summary


def validate_records(records):
    """
    Statistics over all records and per interferer scale
    """
    summary = {'overall': summarize(delta_db(records)), 'per_rho': {}}
    for rho in sorted({r.rho for r in records}):
        deltas = delta_db([r for r in records if r.rho == rho])
        if len(deltas):
            summary['per_rho'][repr(float(rho))] = summarize(deltas)
    return summary
