"""User configuration: an XDG config file with defaults for the rank computations."""

import configparser
import os
import platform
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Any, Optional

from borderedsuture import constants

APP_NAME = "borderedsuture"

_home = os.path.expanduser("~")

xdg_config_home = os.environ.get("XDG_CONFIG_HOME") or os.path.join(_home, ".config")

if platform.system() == "Darwin":
    # macOS
    config_dir = Path(f"~/Library/Application Support/{APP_NAME}").expanduser()
else:
    # Linux or others
    config_dir = Path(os.path.join(xdg_config_home, APP_NAME))


def get_config_file():
    return config_dir / f"{APP_NAME}.cfg"


def init_dirs():
    os.makedirs(config_dir, exist_ok=True)


class ConfigAccessor:
    """
    A dict-like accessor for configuration files.

    Missing sections or keys are handled gracefully. The config directory is
    only created when the configuration is saved.

    Usage:
        config = ConfigAccessor()
        value = config.get('compute', 'seed', default='1')
    """

    def __init__(self, config_path: Optional[Path] = None):
        """
        Initialize a ConfigAccessor with an optional config file path.

        Args:
            config_path: Path to the configuration file. If None, uses the default path.
        """
        if config_path is None:
            self.config_path = get_config_file()
        else:
            self.config_path = Path(config_path)

        self.config = configparser.ConfigParser()
        if self.config_path.exists():
            self.config.read(self.config_path)

    def get(self, section: str, key: str, default: Any = None) -> Any:
        """
        Get a configuration value from the specified section and key.

        Args:
            section: The configuration section
            key: The configuration key
            default: Value to return if the section or key doesn't exist

        Returns:
            The configuration value if it exists, otherwise the default value
        """
        try:
            return self.config[section][key]
        except (KeyError, configparser.NoSectionError, configparser.NoOptionError):
            return default

    def set(self, section: str, key: str, value: str) -> None:
        """
        Set a configuration value.

        Args:
            section: The configuration section
            key: The configuration key
            value: The value to set
        """
        if not self.config.has_section(section):
            self.config.add_section(section)

        self.config[section][key] = value

    def save(self) -> None:
        """
        Save the current configuration to the config file.
        """
        self.config_path.parent.mkdir(parents=True, exist_ok=True)
        with open(self.config_path, "w") as configfile:
            self.config.write(configfile)

    def sections(self) -> list:
        """
        Get all available sections in the config.

        Returns:
            List of section names
        """
        return self.config.sections()

    def options(self, section: str) -> list:
        """
        Get all options (keys) in a section.

        Args:
            section: The section name

        Returns:
            List of options in the section or empty list if section doesn't exist
        """
        try:
            return self.config.options(section)
        except configparser.NoSectionError:
            return []


@dataclass(frozen=True)
class ComputeSettings:
    """Resolved settings for rank computations, passed explicitly to the pipeline."""

    mode: str = constants.DEFAULT_MODE
    seed: int = constants.DEFAULT_SEED
    field_degree: int = constants.DEFAULT_FIELD_DEGREE
    repetitions: int = constants.DEFAULT_REPETITIONS
    iteration_cap: int = constants.DEFAULT_ITERATION_CAP
    exact_max_dim: int = constants.DEFAULT_EXACT_MAX_DIM

    @classmethod
    def from_config(cls, accessor: Optional[ConfigAccessor] = None) -> "ComputeSettings":
        """
        Read the [compute] section, falling back to the built-in defaults.

        Args:
            accessor: The configuration to read. Defaults to the user config file.

        Returns:
            ComputeSettings with values from the config file where present
        """
        accessor = accessor if accessor is not None else config
        defaults = cls()
        mode = accessor.get("compute", "mode", defaults.mode)
        if mode not in constants.MODES:
            raise ValueError(f"Invalid compute mode in config: {mode}")
        return cls(
            mode=mode,
            seed=int(accessor.get("compute", "seed", defaults.seed)),
            field_degree=int(
                accessor.get("compute", "field_degree", defaults.field_degree)
            ),
            repetitions=int(
                accessor.get("compute", "repetitions", defaults.repetitions)
            ),
            iteration_cap=int(
                accessor.get("compute", "iteration_cap", defaults.iteration_cap)
            ),
            exact_max_dim=int(
                accessor.get("compute", "exact_max_dim", defaults.exact_max_dim)
            ),
        )

    def override(self, **values) -> "ComputeSettings":
        """Return a copy with the non-None values replaced."""
        return replace(self, **{k: v for k, v in values.items() if v is not None})


# Create a global config accessor instance
config = ConfigAccessor()
