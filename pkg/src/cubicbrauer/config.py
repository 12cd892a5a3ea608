"""
Configuration management for the cubic surface analyzer.

This module provides the run-wide settings: working precisions, the seed of
the factorization randomness, enumeration caps and output preferences.
Defaults are overridden by a YAML file and then by ``CUBICBRAUER_*``
environment variables.
"""

import logging
import os
import sys
from copy import deepcopy
from pathlib import Path
from typing import Any

import yaml

logger = logging.getLogger(__name__)

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


def _merge(target: dict[str, Any], source: dict[str, Any]) -> None:
    for key, value in source.items():
        if isinstance(value, dict) and isinstance(target.get(key), dict):
            _merge(target[key], value)
        else:
            target[key] = value


class CubicBrauerConfig:
    """
    Configuration for the analyzer.

    Class-level registry; ``initialize`` may be called again to reset it
    (the tests do this between cases).
    """

    _default_config: dict[str, Any] = {
        "arithmetic": {
            "unramified_precision": 12,
            "eisenstein_precision": 24,
            "max_extension_degree": 36,
            "seed": 20240611,
        },
        "curve": {
            "enumeration_cap": 1_000_000,
        },
        "model": {
            "vertex_search_cap": 2_000_000,
        },
        "output": {
            "format": "text",
        },
        "logging": {
            "level": "WARNING",
        },
    }

    _config: dict[str, Any] = {}

    _initialized: bool = False

    # environment variable -> (dotted key, converter)
    _env_overrides: dict[str, tuple[str, type]] = {
        "CUBICBRAUER_PRECISION": ("arithmetic.eisenstein_precision", int),
        "CUBICBRAUER_UNRAMIFIED_PRECISION": ("arithmetic.unramified_precision", int),
        "CUBICBRAUER_SEED": ("arithmetic.seed", int),
        "CUBICBRAUER_FORMAT": ("output.format", str),
        "CUBICBRAUER_LOG_LEVEL": ("logging.level", str),
    }

    @classmethod
    def initialize(cls, config_path: str | None = None) -> None:
        """
        Initialize the configuration.

        Args:
            config_path: Optional path to a YAML configuration file
        """
        cls._config = deepcopy(cls._default_config)

        if config_path:
            cls._load_from_file(config_path)

        cls._load_from_env()
        cls._validate()

        cls._initialized = True

    @classmethod
    def _load_from_file(cls, config_path: str) -> None:
        """
        Load configuration from a YAML file. A missing or malformed file is fatal.

        Args:
            config_path: Path to the YAML configuration file
        """
        path = Path(config_path)
        if not path.exists():
            print(f"CRITICAL: configuration file not found: {config_path}", file=sys.stderr)
            sys.exit(1)

        try:
            with open(path) as f:
                file_config = yaml.safe_load(f)
        except (OSError, yaml.YAMLError) as e:
            print(f"CRITICAL: error loading configuration file: {e}", file=sys.stderr)
            sys.exit(1)

        if file_config is None:
            return
        if not isinstance(file_config, dict):
            print(
                f"CRITICAL: configuration file {config_path} must contain a mapping",
                file=sys.stderr,
            )
            sys.exit(1)
        _merge(cls._config, file_config)

    @classmethod
    def _load_from_env(cls) -> None:
        """Load configuration from environment variables."""
        for variable, (key, convert) in cls._env_overrides.items():
            raw = os.environ.get(variable)
            if raw is None or raw == "":
                continue
            try:
                value = convert(raw)
            except ValueError:
                print(f"CRITICAL: {variable}={raw!r} is not a valid {convert.__name__}",
                      file=sys.stderr)
                sys.exit(1)
            cls.set(key, value)

    @classmethod
    def _validate(cls) -> None:
        m = cls._config["arithmetic"]["eisenstein_precision"]
        n = cls._config["arithmetic"]["unramified_precision"]
        if not isinstance(m, int) or m < 3:
            raise ValueError(f"arithmetic.eisenstein_precision must be an integer >= 3, got {m}")
        if not isinstance(n, int) or 3 * n < m:
            raise ValueError(
                f"arithmetic.unramified_precision={n} cannot carry Pi-adic precision {m}"
            )
        if cls._config["output"]["format"] not in ("text", "json"):
            raise ValueError(f"output.format must be text or json, "
                             f"got {cls._config['output']['format']!r}")

    @classmethod
    def _ensure_initialized(cls) -> None:
        """Ensure the configuration is initialized."""
        if not cls._initialized:
            cls.initialize()

    @classmethod
    def get(cls, key: str, default: Any = None) -> Any:
        """
        Get a configuration value.

        Args:
            key: The configuration key to retrieve, dotted for nested sections
            default: Default value to return if key is not found

        Returns:
            The configuration value, or default if not found
        """
        cls._ensure_initialized()

        value: Any = cls._config
        for part in key.split("."):
            if isinstance(value, dict) and part in value:
                value = value[part]
            else:
                return default
        return value

    @classmethod
    def set(cls, key: str, value: Any) -> None:
        """Override one dotted key for the rest of the run (CLI flags use this)."""
        if not cls._config:
            cls._config = deepcopy(cls._default_config)
        parts = key.split(".")
        section = cls._config
        for part in parts[:-1]:
            section = section.setdefault(part, {})
        section[parts[-1]] = value

    @classmethod
    def eisenstein_precision(cls) -> int:
        return int(cls.get("arithmetic.eisenstein_precision", 24))

    @classmethod
    def unramified_precision(cls) -> int:
        """
        Get the p-adic precision of the unramified base ring.

        Always large enough to carry the Pi-adic precision, since the
        components of an element at Pi-adic precision M live modulo
        p^ceil(M/3).
        """
        n = int(cls.get("arithmetic.unramified_precision", 12))
        return max(n, -(-cls.eisenstein_precision() // 3))

    @classmethod
    def seed(cls) -> int:
        return int(cls.get("arithmetic.seed", 20240611))

    @classmethod
    def max_extension_degree(cls) -> int:
        return int(cls.get("arithmetic.max_extension_degree", 36))

    @classmethod
    def enumeration_cap(cls) -> int:
        return int(cls.get("curve.enumeration_cap", 1_000_000))

    @classmethod
    def vertex_search_cap(cls) -> int:
        return int(cls.get("model.vertex_search_cap", 2_000_000))

    @classmethod
    def output_format(cls) -> str:
        return str(cls.get("output.format", "text"))

    @classmethod
    def configure_logging(cls) -> None:
        """Install a stderr handler at the configured level."""
        level_name = str(cls.get("logging.level", "WARNING")).upper()
        level = logging.getLevelName(level_name)
        if not isinstance(level, int):
            raise ValueError(f"unknown logging level {level_name!r}")
        root = logging.getLogger("cubicbrauer")
        root.setLevel(level)
        if not root.handlers:
            handler = logging.StreamHandler(sys.stderr)
            handler.setFormatter(logging.Formatter(LOG_FORMAT))
            root.addHandler(handler)
        logger.debug("logging configured at %s", level_name)
