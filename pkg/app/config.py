"""Configuration management for cutwidth-bounds."""

import copy
import logging
import os
from typing import Any, Optional

import structlog
import yaml

# Configure initial logging with WARNING level
logging.basicConfig(level=logging.WARNING)
structlog.configure(
    processors=[
        structlog.processors.TimeStamper(fmt="iso"),
        structlog.stdlib.add_log_level,
        structlog.processors.JSONRenderer(),
    ],
    wrapper_class=structlog.stdlib.BoundLogger,
    context_class=dict,
    logger_factory=structlog.stdlib.LoggerFactory(),
)

logger = structlog.get_logger()

CONFIG_ENV_VAR = "CWB_CONFIG"

DEFAULT_CONFIG = {
    "solver": {
        "budget": 20,  # Largest vertex count the exact solver accepts
    },
    "verify": {
        "seed": 7,
        "trials": {
            "prop1": 200,
            "thm1": 300,
            "claim1": 300,
            "oracle": 100,
        },
        "max_n": {
            "prop1": 8,
            "thm1": 12,
            "claim1": 12,
            "oracle": 7,
        },
        "max_multiplicity": 14,  # Total multiplicity cap for subdivision trials
    },
    "logging": {
        "level": "warning",
        "format": "console",  # console or json, always on stderr
    },
}

DEFAULT_CONFIG_LOCATIONS = [
    "/etc/cwb/config.yaml",
    "~/.config/cwb/config.yaml",
    "./cwb.yaml",
]

LOG_LEVELS = ("debug", "info", "warning", "error", "critical")
LOG_FORMATS = ("console", "json")


class ConfigManager:
    """Manages application configuration.

    The first file found among ``--config``, ``$CWB_CONFIG`` and the default
    locations is merged over the defaults. Nothing is created on disk unless
    ``save_config`` is called.
    """

    def __init__(self, config_path: Optional[str] = None):
        """Initialize configuration manager.

        Args:
            config_path: Path to configuration file
        """
        self.config_path = config_path or os.environ.get(CONFIG_ENV_VAR)
        self.config = copy.deepcopy(DEFAULT_CONFIG)

        if not self.config_path:
            for path in DEFAULT_CONFIG_LOCATIONS:
                expanded_path = os.path.expanduser(path)
                if os.path.exists(expanded_path):
                    self.config_path = expanded_path
                    break

        if self.config_path:
            self.load_config()

    def load_config(self) -> Optional[dict]:
        """Load configuration from file."""
        try:
            with open(os.path.expanduser(self.config_path), "r") as f:
                file_config = yaml.safe_load(f)

            if file_config:
                self._merge_config(self.config, file_config)

            logger.debug("Configuration loaded", path=self.config_path)
            return self.config

        except Exception as e:
            logger.error(f"Failed to load configuration: {e}")
            return None

    def _merge_config(self, base: dict, override: dict) -> None:
        """Recursively merge override config into base config."""
        for key, value in override.items():
            if key in base and isinstance(base[key], dict) and isinstance(value, dict):
                self._merge_config(base[key], value)
            else:
                base[key] = value

    def validate_config(self) -> bool:
        """Validate the current configuration.

        Returns:
            True if configuration is valid, False otherwise
        """
        try:
            budget = self.config.get("solver", {}).get("budget")
            if not _positive_int(budget):
                logger.error(f"solver.budget must be a positive integer, got {budget!r}")
                return False

            verify = self.config.get("verify", {})
            if not isinstance(verify, dict):
                logger.error("verify configuration must be a dictionary")
                return False
            if not isinstance(verify.get("seed"), int) or isinstance(verify.get("seed"), bool):
                logger.error("verify.seed must be an integer")
                return False
            for section in ("trials", "max_n"):
                values = verify.get(section, {})
                if not isinstance(values, dict):
                    logger.error(f"verify.{section} must be a dictionary")
                    return False
                for suite, value in values.items():
                    if not _positive_int(value):
                        logger.error(f"verify.{section}.{suite} must be a positive integer")
                        return False
            if not _positive_int(verify.get("max_multiplicity")):
                logger.error("verify.max_multiplicity must be a positive integer")
                return False

            log_config = self.config.get("logging", {})
            if not isinstance(log_config, dict):
                logger.error("Logging configuration must be a dictionary")
                return False
            if str(log_config.get("level", "")).lower() not in LOG_LEVELS:
                logger.error(f"Unknown logging.level: {log_config.get('level')!r}")
                return False
            if log_config.get("format") not in LOG_FORMATS:
                logger.error(f"Unknown logging.format: {log_config.get('format')!r}")
                return False

            return True

        except Exception as e:
            logger.error("Configuration validation failed", error=str(e))
            return False

    def get_config(self) -> dict:
        return self.config

    def suite_settings(self, suite: str, **overrides: Any) -> dict[str, Any]:
        """Settings handed to one verification check.

        Args:
            suite: Suite name, e.g. ``thm1``
            overrides: Command-line values; ``None`` entries are ignored
        """
        verify = self.config.get("verify", {})
        settings = {
            "seed": verify.get("seed", 7),
            "budget": self.config.get("solver", {}).get("budget", 20),
            "max_multiplicity": verify.get("max_multiplicity", 14),
        }
        trials = verify.get("trials", {}).get(suite)
        if trials is not None:
            settings["trials"] = trials
        max_n = verify.get("max_n", {}).get(suite)
        if max_n is not None:
            settings["max_n"] = max_n
        settings.update({k: v for k, v in overrides.items() if v is not None})
        return settings

    def save_config(self) -> bool:
        """Save the current configuration to file.

        Returns:
            True if save was successful, False otherwise
        """
        try:
            path = os.path.expanduser(self.config_path or DEFAULT_CONFIG_LOCATIONS[1])
            directory = os.path.dirname(path)
            if directory:
                os.makedirs(directory, exist_ok=True)
            with open(path, "w", encoding="utf-8") as f:
                yaml.dump(self.config, f, default_flow_style=False, sort_keys=False)
            self.config_path = path
            logger.info("Configuration saved successfully", path=path)
            return True
        except Exception as e:
            logger.error("Failed to save configuration", error=str(e))
            return False


def _positive_int(value: Any) -> bool:
    return isinstance(value, int) and not isinstance(value, bool) and value > 0
