import os

import numpy as np
from pydantic import BaseModel, ConfigDict, field_validator

from iac_link_abstraction.utils import read_csv_file, write_csv_file

BETA_MODEL_COLUMNS = ['label', 'mcs1', 'mod2', 'y0', 'y1', 'beta_min']


class BetaModel(BaseModel):
    """Piecewise-linear ISR-adaptive combining ratio for one (MCS1, interferer order) pair."""

    model_config = ConfigDict(frozen=True)

    y0: float
    y1: float
    beta_min: float = float('-inf')
    mcs1: int
    mod2: int

    @field_validator('beta_min')
    @classmethod
    def check_beta_min(cls, value):
        if value > 1:
            raise ValueError(f'beta_min must not exceed 1, got {value}')
        return value

    @classmethod
    def static(cls, beta, mcs1, mod2):
        """
        Constant combining ratio: the conventional fixed-beta layer separation
        """
        return cls(y0=beta, y1=beta, beta_min=float('-inf'), mcs1=mcs1, mod2=mod2)

    @property
    def is_static(self):
        return self.y0 == self.y1 and self.beta_min == float('-inf')


def beta_of_isr(model, isr):
    """
    max(min((y1 - y0) * isr + y0, 1), beta_min)
    """
    linear = (model.y1 - model.y0) * np.asarray(isr, dtype=float) + model.y0
    return np.maximum(np.minimum(linear, 1.0), model.beta_min)


def load_beta_models(input_file_path):
    """
    Returns (label, BetaModel) pairs in file order
    """
    _, rows = read_csv_file(input_file_path)
    return [(row['label'],
             BetaModel(y0=float(row['y0']), y1=float(row['y1']), beta_min=float(row['beta_min']),
                       mcs1=int(row['mcs1']), mod2=int(row['mod2'])))
            for row in rows]


def select_beta_model(labeled_models, mcs1, mod2, label=None):
    """
    Last model in the list matching (mcs1, mod2) and, if given, the label
    """
    matches = [model for model_label, model in labeled_models
               if model.mcs1 == mcs1 and model.mod2 == mod2 and (label is None or model_label == label)]
    if not matches:
        raise KeyError(f'No beta model for mcs1={mcs1}, mod2={mod2}, label={label}')
    return matches[-1]


def append_beta_model(output_file_path, model, label, manifest_digest=''):
    """
    Appends a trained model to the model table, creating the file if needed
    """
    labeled_models = load_beta_models(output_file_path) if os.path.exists(output_file_path) else []
    labeled_models.append((label, model))
    rows = [(model_label, m.mcs1, m.mod2, m.y0, m.y1, m.beta_min) for model_label, m in labeled_models]
    write_csv_file(output_file_path, {'manifest_digest': manifest_digest}, BETA_MODEL_COLUMNS, rows)
