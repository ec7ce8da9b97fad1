from .fitting import (FitResult, LiveBlerSource, TableBlerSource,
                      TrainingContext, TrainingSample, build_training_samples,
                      fit_beta_model, fit_context, fit_static_context,
                      fit_static_model, mse_log_bler, save_trace)
from .search import (SearchState, SearchTrace, directed_search_1d,
                     directed_search_2d, directed_search_3d)

__all__ = [
    'FitResult',
    'LiveBlerSource',
    'TableBlerSource',
    'TrainingContext',
    'TrainingSample',
    'build_training_samples',
    'fit_beta_model',
    'fit_context',
    'fit_static_context',
    'fit_static_model',
    'mse_log_bler',
    'save_trace',
    'SearchState',
    'SearchTrace',
    'directed_search_1d',
    'directed_search_2d',
    'directed_search_3d'
]
