import json

import pytest

from reachkit.config import ExperimentConfig, bundled_configs, load_config
from reachkit.core.exceptions import ConfigError


def test_bundled_experiments():
    assert bundled_configs() == ["bilinear", "nonlinear"]


def test_bilinear_sweep_and_overrides():
    config = load_config("bilinear")
    assert config.N == 30
    assert len(config.rho) == 9
    kernel, C1, C2 = config.learning_parameters(0.2)
    assert (kernel.sigma, C1, C2) == (0.35, 85.0, 200.0)


def test_learning_parameters_fall_back_to_defaults(tiny_config):
    kernel, C1, C2 = tiny_config.learning_parameters(0.7)
    assert (kernel.sigma, C1, C2) == (0.8, 2.0, 15.0)


def test_cli_overrides_replace_file_values(tmp_path):
    config = load_config("nonlinear", {"rho": [0.5], "seed": 3, "outputs": str(tmp_path), "jobs": None})
    assert config.rho == [0.5]
    assert config.seed == 3
    assert config.jobs == 1


def test_config_round_trip(tiny_config):
    assert ExperimentConfig.from_dict(tiny_config.to_dict()) == tiny_config


def test_load_from_file(tmp_path, tiny_config):
    path = tmp_path / "experiment.json"
    path.write_text(json.dumps(tiny_config.to_dict()))
    assert load_config(str(path)) == tiny_config


@pytest.mark.parametrize(
    "changes",
    [
        {"rho": [0.2, 0.5]},
        {"rho": []},
        {"N": 0},
        {"C1": -1.0},
        {"ball_check_mode": "remove"},
        {"omega": [[1.0, 1.0], [0.0, 0.0]]},
        {"hyperparameters": {"1": {"gamma": 2.0}}},
        {"colour": "red"},
        {"kernel": {"sigma": 0.5, "width": 1}},
    ],
)
def test_invalid_configuration(tiny_config, changes):
    data = tiny_config.to_dict()
    data.update(changes)
    with pytest.raises(ConfigError):
        ExperimentConfig.from_dict(data)


def test_unknown_experiment_name():
    with pytest.raises(ConfigError, match="No configuration"):
        load_config("does-not-exist")


def test_malformed_json_is_a_config_error(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text('{"system": "bilinear", ')
    with pytest.raises(ConfigError, match="Cannot read configuration"):
        load_config(str(path))
