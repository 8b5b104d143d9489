import pytest

from pointless.configuration import Configuration
from pointless.errors import ConfigurationError


def test_default_sections():
    configuration = Configuration()
    assert configuration.get_setting("pipeline", "kappa") == 7
    assert configuration.get_setting("lifting", "max_samples") == 48
    assert configuration.get_setting("oracle", "up_guard") == 2000


def test_set_setting():
    configuration = Configuration()
    configuration.set_setting("pipeline", "threads", 4)
    assert configuration.get_setting("pipeline", "threads") == 4


def test_unknown_keys():
    configuration = Configuration()
    with pytest.raises(ValueError):
        configuration.get_setting("pipeline", "nope")
    with pytest.raises(ValueError):
        configuration.get_setting("solver", "kappa")


def test_missing_section(tmp_path):
    path = tmp_path / "partial.yaml"
    path.write_text("pipeline_settings:\n  kappa: 2\n")
    with pytest.raises(ConfigurationError):
        Configuration(str(path))


def test_empty_file(tmp_path):
    path = tmp_path / "empty.yaml"
    path.write_text("")
    with pytest.raises(ConfigurationError):
        Configuration(str(path))
