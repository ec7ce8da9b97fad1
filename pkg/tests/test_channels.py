import json

import numpy as np
import pytest
from pydantic import ValidationError

from iac_link_abstraction.errors import FormatVersionError
from iac_link_abstraction.phy import (ScenarioConfig, generate, generate_set,
                                      generate_sweep, load_channel_set,
                                      save_channel_set)


def test_zero_interferer_scale_gives_zero_interference(scenario):
    realization = generate(scenario.model_copy(update={'interferer_scale': 0.0}))
    assert np.all(realization.h2 == 0)


def test_generate_is_deterministic(scenario):
    first, second = generate(scenario), generate(scenario)
    assert np.array_equal(first.h1, second.h1)
    assert np.array_equal(first.h2, second.h2)


def test_shapes_follow_config():
    config = ScenarioConfig(n_rx=2, v1=2, v2=1, n_subcarriers=12)
    realization = generate(config)
    assert realization.h1.shape == (12, 2, 2)
    assert realization.h2.shape == (12, 2, 1)
    assert (realization.n_subcarriers, realization.v1, realization.v2) == (12, 2, 1)


def test_entries_have_unit_power():
    realization = generate(ScenarioConfig(n_rx=2, n_subcarriers=50000, interferer_scale=3.0, seed=11))
    assert np.mean(np.abs(realization.h1) ** 2) == pytest.approx(1.0, abs=0.02)
    assert np.mean(np.abs(realization.h2) ** 2) == pytest.approx(9.0, rel=0.03)


def test_realizations_are_read_only(scenario):
    realization = generate(scenario)
    with pytest.raises(ValueError):
        realization.h1[0, 0, 0] = 1.0


def test_generate_set_first_member_equals_generate(scenario):
    realizations = generate_set(scenario, 3)
    assert np.array_equal(realizations[0].h1, generate(scenario).h1)
    assert len({r.seed for r in realizations}) == 3
    assert not np.array_equal(realizations[0].h1, realizations[1].h1)


def test_generate_set_does_not_depend_on_workers(scenario):
    sequential = generate_set(scenario, 4, workers=1)
    parallel = generate_set(scenario, 4, workers=2)
    for a, b in zip(sequential, parallel):
        assert a.seed == b.seed
        assert np.array_equal(a.h1, b.h1)
        assert np.array_equal(a.h2, b.h2)


def test_generate_set_rejects_zero_count(scenario):
    with pytest.raises(ValueError):
        generate_set(scenario, 0)


def test_generate_sweep_scales_interference(scenario):
    realizations = generate_sweep(scenario, 2, [0.0, 1.0, 3.0])
    assert [r.interferer_scale for r in realizations] == [0.0, 0.0, 1.0, 1.0, 3.0, 3.0]
    assert np.all(realizations[0].h2 == 0)


@pytest.mark.parametrize('fields', [
    {'v1': 3},
    {'n_rx': 1, 'v1': 2},
    {'noise_var': 0.0},
    {'interferer_scale': -1.0},
    {'n_subcarriers': 0},
])
def test_invalid_scenarios_are_rejected(fields):
    with pytest.raises(ValidationError):
        ScenarioConfig(**fields)


def test_channel_set_roundtrip_is_exact_and_byte_stable(tmp_path, scenario):
    realizations = generate_set(scenario, 2)
    first, second = tmp_path / 'a.json', tmp_path / 'b.json'
    save_channel_set(first, scenario, realizations, 'sha256:abc')
    save_channel_set(second, scenario, realizations, 'sha256:abc')
    assert first.read_bytes() == second.read_bytes()

    config, loaded = load_channel_set(first)
    assert config == scenario
    for original, restored in zip(realizations, loaded):
        assert np.array_equal(original.h1, restored.h1)
        assert np.array_equal(original.h2, restored.h2)
        assert original.seed == restored.seed


def test_channel_set_with_unknown_version_is_rejected(tmp_path, scenario):
    path = tmp_path / 'channels.json'
    save_channel_set(path, scenario, generate_set(scenario, 1))
    data = json.loads(path.read_text())
    data['schema_version'] = '2.0'
    path.write_text(json.dumps(data))
    with pytest.raises(FormatVersionError):
        load_channel_set(path)


def test_generate_sweep_seeds_never_collide():
    realizations = generate_sweep(ScenarioConfig(n_subcarriers=4, seed=7), 3, [0.3, 1.0, 3.0])
    seeds = [r.seed for r in realizations]
    assert len(set(seeds)) == len(seeds)
    for i, a in enumerate(realizations):
        for b in realizations[i + 1:]:
            assert not np.array_equal(a.h1, b.h1)


def test_generate_sweep_is_reproducible(scenario):
    first = generate_sweep(scenario, 2, [0.5, 2.0])
    second = generate_sweep(scenario, 2, [0.5, 2.0], workers=2)
    assert [r.seed for r in first] == [r.seed for r in second]
    assert all(np.array_equal(a.h2, b.h2) for a, b in zip(first, second))
