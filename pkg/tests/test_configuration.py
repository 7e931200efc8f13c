#!/usr/bin/env python3
# Tests for configuration loading in quivergeo

import pytest
import yaml

from quivergeo.config import Configuration, ConfigurationError, create_example_config, load_config
from quivergeo.constants import DEFAULT_BUDGET, GRASSMANNIAN_MODELS


def test_defaults():
    """Defaults apply when no file or environment is given."""
    config = Configuration()
    assert config.get("logging.level") == "INFO"
    assert config.get("enumeration.budget") == DEFAULT_BUDGET
    assert config.get("enumeration.check_collinearity") is True
    assert config.get("output.format") == "text"
    assert config.get("verify.models") == GRASSMANNIAN_MODELS


def test_configuration_falsy_values():
    """Test that Configuration.get() correctly handles falsy values like 0, False, empty strings."""
    config = Configuration()

    config._config["test"] = {"indent": 0}
    assert config.get("test.indent", 2) == 0

    config._config["test"]["enabled"] = False
    assert config.get("test.enabled", True) is False

    config._config["test"]["name"] = ""
    assert config.get("test.name", "default") == ""

    config._config["test"]["value"] = None
    assert config.get("test.value", "default") == "default"

    assert config.get("test.missing", "default") == "default"


def test_file_overrides_defaults(tmp_path):
    path = tmp_path / "quivergeo.yaml"
    path.write_text(
        yaml.dump({"enumeration": {"budget": 500}, "verify": {"models": ["kronecker"]}}),
        encoding="utf-8",
    )
    config = load_config(path)
    assert config.get("enumeration.budget") == 500
    assert config.get("verify.models") == ["kronecker"]
    # untouched sections keep their defaults
    assert config.get("output.indent") == 2


def test_missing_file_falls_back_to_defaults(tmp_path):
    config = load_config(tmp_path / "absent.yaml")
    assert config.get("enumeration.budget") == DEFAULT_BUDGET


def test_invalid_yaml(tmp_path):
    path = tmp_path / "broken.yaml"
    path.write_text("enumeration: [budget\n", encoding="utf-8")
    with pytest.raises(ConfigurationError, match="Invalid YAML"):
        load_config(path)


def test_non_mapping_file(tmp_path):
    path = tmp_path / "list.yaml"
    path.write_text("- 1\n- 2\n", encoding="utf-8")
    with pytest.raises(ConfigurationError, match="must contain a mapping"):
        load_config(path)


def test_environment_overrides_file(tmp_path, monkeypatch):
    path = tmp_path / "quivergeo.yaml"
    path.write_text(yaml.dump({"enumeration": {"budget": 500}}), encoding="utf-8")
    monkeypatch.setenv("QUIVERGEO_BUDGET", "750")
    monkeypatch.setenv("QUIVERGEO_CHECK_COLLINEARITY", "no")
    monkeypatch.setenv("QUIVERGEO_LOG_LEVEL", "DEBUG")
    config = load_config(path)
    assert config.get("enumeration.budget") == 750
    assert config.get("enumeration.check_collinearity") is False
    assert config.get("logging.level") == "DEBUG"


def test_invalid_environment_integer(monkeypatch):
    monkeypatch.setenv("QUIVERGEO_BUDGET", "lots")
    with pytest.raises(ConfigurationError, match="budget must be a positive integer"):
        Configuration()


def test_cli_overrides_everything(monkeypatch):
    monkeypatch.setenv("QUIVERGEO_FORMAT", "text")
    config = Configuration()
    config.update_from_cli_args({"format": "json", "budget": 42, "log_level": None})
    assert config.get("output.format") == "json"
    assert config.get("enumeration.budget") == 42
    assert config.get("logging.level") == "INFO"


@pytest.mark.parametrize(
    "section, values, error_match",
    [
        ("logging", {"level": "LOUD"}, "logging.level must be one of"),
        ("enumeration", {"budget": 0}, "budget must be a positive integer"),
        ("enumeration", {"budget": True}, "budget must be a positive integer"),
        ("enumeration", {"check_collinearity": "yes"}, "check_collinearity must be a boolean"),
        ("output", {"format": "xml"}, "output.format must be one of"),
        ("output", {"indent": -1}, "indent must be a non-negative integer"),
        ("verify", {"models": []}, "verify.models must be a non-empty subset"),
        ("verify", {"models": ["segre"]}, "verify.models must be a non-empty subset"),
        ("verify", {"sample_size": -5}, "sample_size must be a non-negative integer"),
    ],
)
def test_validation(tmp_path, section, values, error_match):
    path = tmp_path / "bad.yaml"
    path.write_text(yaml.dump({section: values}), encoding="utf-8")
    with pytest.raises(ConfigurationError, match=error_match):
        load_config(path)


def test_cli_update_revalidates():
    config = Configuration()
    with pytest.raises(ConfigurationError, match="budget must be a positive integer"):
        config.update_from_cli_args({"budget": -1})


def test_example_config_loads(tmp_path):
    path = tmp_path / "example.yaml"
    create_example_config(path)
    text = path.read_text(encoding="utf-8")
    assert text.startswith("# quivergeo configuration")
    assert load_config(path).to_dict() == Configuration().to_dict()


def test_save_to_file(tmp_path):
    config = Configuration()
    config.update_from_cli_args({"budget": 1234})
    path = tmp_path / "saved.yaml"
    config.save_to_file(path)
    assert load_config(path).get("enumeration.budget") == 1234


def test_str():
    assert "budget=" in str(Configuration())
