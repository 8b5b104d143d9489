import os
from typing import Any, Literal

import yaml

from .errors import ConfigurationError

current_dir = os.path.dirname(os.path.abspath(__file__))
DEFAULT_CONFIG_YAML_PATH = os.path.join(current_dir, "config.yaml")

SectionType = Literal["pipeline", "lifting", "oracle"]


class Configuration:
    """
    Configuration class for pointless.

    Holds the settings of the batch pipeline, the lifting step and the
    brute-force oracles. Defaults come from the config.yaml shipped with the
    package; another YAML file with the same sections can be passed instead.
    """

    def __init__(self, config_path: str = DEFAULT_CONFIG_YAML_PATH):
        """
        Initialize the Configuration object.

        Args:
            config_path: Path to the configuration YAML file. Defaults to the config.yaml in the package.
        """
        config_data = self.load_config_from_yaml(config_path) or {}
        for name in ("pipeline_settings", "lifting_settings", "oracle_settings"):
            if not isinstance(config_data.get(name), dict):
                raise ConfigurationError(f"{config_path} has no {name} section")
        self.pipeline_settings = config_data["pipeline_settings"]
        self.lifting_settings = config_data["lifting_settings"]
        self.oracle_settings = config_data["oracle_settings"]

    def load_config_from_yaml(self, config_path: str):
        """
        Load configuration from a YAML file.

        Args:
            config_path: Path to the configuration YAML file.

        Returns:
            The loaded configuration data as a dictionary.
        """
        with open(config_path, "r") as file:
            return yaml.safe_load(file)

    def _section(self, section: SectionType) -> dict:
        settings = getattr(self, f"{section}_settings", None)
        if settings is None:
            raise ValueError(f"Unsupported section: {section}")
        return settings

    def get_setting(self, section: SectionType, key: str) -> Any:
        """
        Get one setting.

        Args:
            section: The section ('pipeline', 'lifting' or 'oracle').
            key: The setting name within the section.

        Returns:
            The stored value.

        Raises:
            ValueError: If the section or the key is unknown.
        """
        settings = self._section(section)
        if key not in settings:
            raise ValueError(f"Unknown {section} setting: {key}")
        return settings[key]

    def set_setting(self, section: SectionType, key: str, value: Any):
        """
        Override one setting.

        Args:
            section: The section ('pipeline', 'lifting' or 'oracle').
            key: The setting name within the section.
            value: The new value.

        Raises:
            ValueError: If the section is unknown.
        """
        self._section(section)[key] = value


config = Configuration()
