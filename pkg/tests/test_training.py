import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from iac_link_abstraction.abstraction import (BetaModel, beta_of_isr,
                                              prepare_link_state, predict,
                                              record_from_state,
                                              validate_records)
from iac_link_abstraction.errors import (EmptyTrainingSet,
                                         MaxIterationsExceeded,
                                         MissingMeasurement)
from iac_link_abstraction.lls import (MeasurementRecord, load_measurements,
                                      mcs_entry, save_measurements)
from iac_link_abstraction.phy import ScenarioConfig, generate_sweep
from iac_link_abstraction.phy.numerics import from_db
from iac_link_abstraction.training import (LiveBlerSource, SearchTrace,
                                           TableBlerSource, TrainingContext,
                                           TrainingSample,
                                           build_training_samples,
                                           directed_search_1d,
                                           directed_search_2d,
                                           directed_search_3d, fit_context,
                                           fit_static_context, mse_log_bler,
                                           save_trace)
from iac_link_abstraction.utils import create_rng, read_csv_file

TRUE_MODEL = BetaModel(y0=0.1, y1=0.9, beta_min=0.05, mcs1=9, mod2=4)

SNR_GRID_DB = (0.0, 5.0, 10.0)

SWEEP_SCALES = (0.3, 1.0, 3.0, 10.0)

# the floor covers every ISR below 8 / 15
FLOORED_MODEL = BetaModel(y0=-0.5, y1=1.0, beta_min=0.3, mcs1=9, mod2=4)


def _quadratic(a, b, c=0.0):
    def objective(params):
        y0, y1, beta_min = params
        return (y0 - a) ** 2 + (y1 - b) ** 2 + (max(beta_min, -1.0) - c) ** 2
    return objective


def _synthetic_context(qpsk_table, waterfall_lut, model, seed, noise_log10=0.0):
    """
    Samples whose measured BLER is the prediction of model, optionally perturbed by log10-normal noise
    """
    channel_set = generate_sweep(ScenarioConfig(n_subcarriers=8, seed=seed), 4, SWEEP_SCALES)
    samples = [TrainingSample(channels=channels, noise_var=float(from_db(-snr_db)), bler_monte=1.0)
               for channels in channel_set for snr_db in SNR_GRID_DB]
    context = TrainingContext(samples, mcs_entry(9), 4, qpsk_table, waterfall_lut)
    noise = noise_log10 * create_rng(seed).standard_normal(len(samples))
    context.bler_monte = context.predictions(model) * 10.0 ** noise
    return context


@pytest.fixture(scope='module')
def synthetic_context(qpsk_table, waterfall_lut):
    """
    Samples whose measured BLER is exactly the prediction of TRUE_MODEL
    """
    return _synthetic_context(qpsk_table, waterfall_lut, TRUE_MODEL, seed=17)


def test_mse_log_bler():
    assert mse_log_bler([0.1, 0.01], [0.1, 0.1]) == pytest.approx(1.0)
    assert mse_log_bler([0.2], [0.2]) == 0.0


@settings(max_examples=100, deadline=None)
@given(st.integers(min_value=-200, max_value=200), st.integers(min_value=-200, max_value=200))
def test_2d_search_lands_on_grid_optimum(a, b):
    y0, y1, mse = directed_search_2d(_quadratic(a / 100, b / 100, -1.0))
    assert (y0, y1) == (a / 100, b / 100)
    assert mse == pytest.approx(0.0, abs=1e-20)


def test_flat_surface_keeps_origin():
    trace = SearchTrace()
    assert directed_search_2d(lambda params: 1.0, trace) == (0.0, 0.0, 1.0)
    assert all(row[2:4] == (0.0, 0.0) for row in trace.rows)


def test_3d_search_stays_at_optimal_start():
    assert directed_search_3d(_quadratic(0.4, 0.7, 0.0), (0.4, 0.7, 0.0)) == (0.4, 0.7, 0.0, 0.0)


def test_3d_search_finds_floor():
    y0, y1, beta_min, _ = directed_search_3d(_quadratic(0.4, 0.7, 0.05), (0.4, 0.7, 0.0))
    assert (y0, y1, beta_min) == (0.4, 0.7, 0.05)


def test_1d_search_ties_both_axes():
    trace = SearchTrace()
    beta, mse = directed_search_1d(lambda params: (params[0] - 0.37) ** 2 + (params[1] - 0.37) ** 2, trace)
    assert beta == 0.37
    assert all(row[2] == row[3] and row[4] == float('-inf') for row in trace.rows)


def test_search_gives_up_after_max_moves():
    with pytest.raises(MaxIterationsExceeded):
        directed_search_2d(_quadratic(2.0, 2.0, -1.0), max_moves=1)


def test_trace_is_monotone_within_each_stage():
    trace = SearchTrace()
    directed_search_2d(_quadratic(1.23, -0.45, -1.0), trace)
    mses = [row[5] for row in trace.rows]
    assert mses == sorted(mses, reverse=True)
    assert [row[1] for row in trace.rows][-1] == 0.01
    assert trace.stage_end('2d') == pytest.approx(0.0, abs=1e-20)


def test_fit_recovers_synthetic_model(synthetic_context):
    result = fit_context(synthetic_context)
    assert result.model.y0 == pytest.approx(TRUE_MODEL.y0, abs=0.05)
    assert result.model.y1 == pytest.approx(TRUE_MODEL.y1, abs=0.05)
    # the floor never binds: every linear beta is at least y0
    assert result.model.beta_min <= 0.1
    assert result.mse <= result.trace.stage_end('2d')
    assert result.mse == pytest.approx(0.0, abs=1e-3)


def test_static_fit_is_never_better(synthetic_context):
    adaptive = fit_context(synthetic_context)
    static = fit_static_context(synthetic_context)
    assert static.model.is_static
    assert static.mse >= adaptive.mse


def test_fit_recovers_model_from_noisy_measurements(qpsk_table, waterfall_lut):
    context = _synthetic_context(qpsk_table, waterfall_lut, TRUE_MODEL, seed=23, noise_log10=0.02)
    result = fit_context(context)
    assert result.model.y0 == pytest.approx(TRUE_MODEL.y0, abs=0.05)
    assert result.model.y1 == pytest.approx(TRUE_MODEL.y1, abs=0.05)
    # a floor below y0 is never active, so only the resulting beta curve is identifiable
    isr_values = np.concatenate([state.isr for state in context.states])
    assert np.max(np.abs(beta_of_isr(result.model, isr_values) - beta_of_isr(TRUE_MODEL, isr_values))) <= 0.05


def test_fit_recovers_binding_floor(qpsk_table, waterfall_lut):
    context = _synthetic_context(qpsk_table, waterfall_lut, FLOORED_MODEL, seed=29)
    isr_values = np.concatenate([state.isr for state in context.states])
    assert np.mean(beta_of_isr(FLOORED_MODEL, isr_values) == FLOORED_MODEL.beta_min) > 0.2

    result = fit_context(context)
    assert result.model.beta_min == pytest.approx(FLOORED_MODEL.beta_min, abs=0.05)
    assert result.model.y1 == pytest.approx(FLOORED_MODEL.y1, abs=0.05)
    assert result.mse < result.trace.stage_end('2d')


def _held_out_records(qpsk_table, waterfall_lut, model, seed):
    channel_set = generate_sweep(ScenarioConfig(n_subcarriers=8, seed=seed), 4, SWEEP_SCALES)
    records = []
    for channels in channel_set:
        for snr_db in SNR_GRID_DB:
            state = prepare_link_state(channels, float(from_db(-snr_db)), qpsk_table)
            bler_monte = predict(state, TRUE_MODEL, qpsk_table, waterfall_lut)[2]
            records.append(record_from_state(state, model, qpsk_table, waterfall_lut, bler_monte))
    return records


def test_adaptive_beats_static_on_held_out_channels(qpsk_table, waterfall_lut, synthetic_context):
    adaptive = fit_context(synthetic_context).model
    static = fit_static_context(synthetic_context).model

    adaptive_summary = validate_records(_held_out_records(qpsk_table, waterfall_lut, adaptive, seed=31))
    static_summary = validate_records(_held_out_records(qpsk_table, waterfall_lut, static, seed=31))

    assert adaptive_summary['overall']['rms_db'] < static_summary['overall']['rms_db']
    high_isr = '10.0'
    assert adaptive_summary['per_rho'][high_isr]['rms_db'] <= 0.85 * static_summary['per_rho'][high_isr]['rms_db']


def test_save_trace(tmp_path, synthetic_context):
    result = fit_static_context(synthetic_context)
    path = tmp_path / 'trace.csv'
    save_trace(path, result.trace, {'label': 'static'})
    header, rows = read_csv_file(path)
    assert header['label'] == 'static'
    assert len(rows) == len(result.trace.rows)
    assert {row['stage'] for row in rows} == {'1d'}


def test_table_source(scenario):
    channel_set = generate_sweep(scenario, 2, [1.0])
    records = [MeasurementRecord(seed=c.seed, snr_db=snr_db, rho=1.0, mcs=9, mod2=4,
                                 n_blocks=100, n_errors=10, bler=0.1)
               for c in channel_set for snr_db in (0.0, 5.0)]
    source = TableBlerSource(records, 9, 4)
    samples = build_training_samples(channel_set, [0.0, 5.0], source)
    assert len(samples) == 4
    assert samples[1].snr_db == pytest.approx(5.0)

    with pytest.raises(MissingMeasurement):
        build_training_samples(channel_set, [10.0], source)
    with pytest.raises(MissingMeasurement):
        build_training_samples(channel_set, [0.0], TableBlerSource(records, 17, 4))


def test_table_source_keeps_interferer_scales_apart(tmp_path):
    channel_set = generate_sweep(ScenarioConfig(n_subcarriers=4, seed=7), 3, [0.3, 1.0])
    records = [MeasurementRecord(seed=c.seed, snr_db=0.0, rho=c.interferer_scale, mcs=9, mod2=4,
                                 n_blocks=100, n_errors=1, bler=0.01 if c.interferer_scale < 1 else 0.9)
               for c in channel_set]
    path = tmp_path / 'measurements.csv'
    save_measurements(path, records)
    source = TableBlerSource(load_measurements(path), 9, 4)

    assert [source.bler(c, 0.0) for c in channel_set] == [0.01, 0.01, 0.01, 0.9, 0.9, 0.9]

    shifted = generate_sweep(ScenarioConfig(n_subcarriers=4, seed=7), 3, [0.5, 1.0])[0]
    with pytest.raises(MissingMeasurement):
        source.bler(shifted, 0.0)


def test_empty_training_set_is_rejected(qpsk_table, waterfall_lut):
    with pytest.raises(EmptyTrainingSet):
        build_training_samples([], [0.0], LiveBlerSource(None))
    with pytest.raises(EmptyTrainingSet):
        TrainingContext([], mcs_entry(9), 4, qpsk_table, waterfall_lut)


def test_sample_rejects_zero_bler(scenario):
    channels = generate_sweep(scenario, 1, [1.0])[0]
    with pytest.raises(ValueError):
        TrainingSample(channels=channels, noise_var=1.0, bler_monte=0.0)


def test_live_source_measures_with_simulator(small_lls_config):
    channels = generate_sweep(small_lls_config.scenario, 1, [0.2])[0]
    assert LiveBlerSource(small_lls_config).bler(channels, 40.0) == pytest.approx(0.005)
