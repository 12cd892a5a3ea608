"""
Tests for the CubicBrauerConfig class.
"""

import logging
import os
import tempfile
from pathlib import Path

import pytest
import yaml

from cubicbrauer.config import CubicBrauerConfig


class TestCubicBrauerConfig:
    """Tests for the CubicBrauerConfig class."""

    def setup_method(self) -> None:
        """Set up the test environment."""
        # Reset the configuration state before each test
        CubicBrauerConfig._config = {}
        CubicBrauerConfig._initialized = False

        self.original_env = {}
        for key in ["CUBICBRAUER_PRECISION", "CUBICBRAUER_SEED",
                    "CUBICBRAUER_FORMAT", "CUBICBRAUER_LOG_LEVEL"]:
            self.original_env[key] = os.environ.get(key)
            if key in os.environ:
                del os.environ[key]

    def teardown_method(self) -> None:
        """Clean up after the test."""
        for key, value in self.original_env.items():
            if value is not None:
                os.environ[key] = value
            elif key in os.environ:
                del os.environ[key]

    def test_default_config(self) -> None:
        """Test the default configuration values."""
        # Reading a value triggers initialization
        assert CubicBrauerConfig.get("arithmetic.eisenstein_precision") == 24
        assert CubicBrauerConfig.eisenstein_precision() == 24
        assert CubicBrauerConfig.unramified_precision() >= 8
        assert CubicBrauerConfig.seed() == 20240611
        assert CubicBrauerConfig.output_format() == "text"
        assert CubicBrauerConfig.get("logging.level") == "WARNING"

    def test_environment_override(self) -> None:
        """Test overriding configuration with environment variables."""
        os.environ["CUBICBRAUER_PRECISION"] = "30"
        os.environ["CUBICBRAUER_SEED"] = "7"
        os.environ["CUBICBRAUER_FORMAT"] = "json"

        CubicBrauerConfig.initialize()

        assert CubicBrauerConfig.eisenstein_precision() == 30
        assert CubicBrauerConfig.seed() == 7
        assert CubicBrauerConfig.output_format() == "json"
        # the unramified ring grows to carry the larger precision
        assert CubicBrauerConfig.unramified_precision() >= 10

    def test_file_config(self) -> None:
        """Test loading configuration from a file."""
        with tempfile.NamedTemporaryFile(mode="w", suffix=".yaml", delete=False) as f:
            yaml.dump({
                "arithmetic": {"eisenstein_precision": 18, "seed": 99},
                "curve": {"enumeration_cap": 5000},
            }, f)
            config_path = f.name

        try:
            CubicBrauerConfig.initialize(config_path)

            assert CubicBrauerConfig.eisenstein_precision() == 18
            assert CubicBrauerConfig.seed() == 99
            assert CubicBrauerConfig.enumeration_cap() == 5000
            # untouched keys keep their defaults
            assert CubicBrauerConfig.vertex_search_cap() == 2_000_000
            assert CubicBrauerConfig.output_format() == "text"
        finally:
            os.unlink(config_path)

    def test_environment_beats_file(self) -> None:
        """Test that environment variables override the configuration file."""
        with tempfile.NamedTemporaryFile(mode="w", suffix=".yaml", delete=False) as f:
            yaml.dump({"arithmetic": {"eisenstein_precision": 18}}, f)
            config_path = f.name

        try:
            os.environ["CUBICBRAUER_PRECISION"] = "21"
            CubicBrauerConfig.initialize(config_path)
            assert CubicBrauerConfig.eisenstein_precision() == 21
        finally:
            os.unlink(config_path)

    def test_missing_file_is_fatal(self) -> None:
        """Test that a missing configuration file stops the run."""
        with pytest.raises(SystemExit) as excinfo:
            CubicBrauerConfig.initialize(str(Path(tempfile.gettempdir()) / "no-such-config.yaml"))
        assert excinfo.value.code == 1

    def test_invalid_environment_value_is_fatal(self) -> None:
        """Test that a non-integer precision in the environment stops the run."""
        os.environ["CUBICBRAUER_PRECISION"] = "lots"
        with pytest.raises(SystemExit):
            CubicBrauerConfig.initialize()

    def test_validation(self) -> None:
        """Test that an unusable precision or output format is rejected."""
        os.environ["CUBICBRAUER_PRECISION"] = "2"
        with pytest.raises(ValueError, match="eisenstein_precision"):
            CubicBrauerConfig.initialize()

        os.environ["CUBICBRAUER_PRECISION"] = "24"
        os.environ["CUBICBRAUER_FORMAT"] = "xml"
        with pytest.raises(ValueError, match="output.format"):
            CubicBrauerConfig.initialize()

    def test_get_missing_key(self) -> None:
        """Test that unknown keys fall back to the default."""
        assert CubicBrauerConfig.get("no.such.key") is None
        assert CubicBrauerConfig.get("no.such.key", 5) == 5

    def test_set_override(self) -> None:
        """Test that set() overrides one dotted key."""
        CubicBrauerConfig.initialize()
        CubicBrauerConfig.set("arithmetic.seed", 3)
        assert CubicBrauerConfig.seed() == 3
        assert CubicBrauerConfig.eisenstein_precision() == 24

    def test_configure_logging(self) -> None:
        """Test that the configured level reaches the package logger."""
        CubicBrauerConfig.initialize()
        CubicBrauerConfig.set("logging.level", "debug")
        CubicBrauerConfig.configure_logging()
        assert logging.getLogger("cubicbrauer").level == logging.DEBUG

        CubicBrauerConfig.set("logging.level", "chatty")
        with pytest.raises(ValueError, match="unknown logging level"):
            CubicBrauerConfig.configure_logging()
