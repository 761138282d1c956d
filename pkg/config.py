"""
Configuration module for the Higher-Order Pattern Miner.

Handles environment variables and application settings.
Uses python-dotenv to load configuration from .env file.
"""

import os
from dotenv import load_dotenv

from errors import ConfigurationError

# Load environment variables from .env file
load_dotenv()


class Config:
    """
    Application configuration class.

    Loads all environment variables and provides them as class attributes.
    Out-of-range values are rejected by validate_config().
    """

    # Application Settings
    APP_NAME = os.getenv("APP_NAME", "Higher-Order Pattern Miner")
    APP_DESCRIPTION = os.getenv(
        "APP_DESCRIPTION",
        "Constraint-based mining of higher order association patterns"
    )

    # Logging Configuration
    LOG_LEVEL = os.getenv("LOG_LEVEL", "WARNING")
    LOG_FILE = os.getenv("LOG_FILE", "")

    # Sub-pattern enumeration
    ENUMERATION_CAP = int(os.getenv("ENUMERATION_CAP", 16))
    PATTERN_SPACE_MAX_K = int(os.getenv("PATTERN_SPACE_MAX_K", 10))
    MEASURE_TOLERANCE = float(os.getenv("MEASURE_TOLERANCE", 1e-9))

    # Miner defaults
    DEFAULT_MAX_LEN = int(os.getenv("DEFAULT_MAX_LEN", 4))
    DEFAULT_MAX_MEDIATOR_LEN = int(os.getenv("DEFAULT_MAX_MEDIATOR_LEN", 1))
    DEFAULT_MIN_SIDE = int(os.getenv("DEFAULT_MIN_SIDE", 2))
    DEFAULT_DEPENDENCE_MEASURE = os.getenv("DEFAULT_DEPENDENCE_MEASURE", "lift")
    DEFAULT_CURVE_MEASURE = os.getenv("DEFAULT_CURVE_MEASURE", "support")

    @staticmethod
    def validate_config():
        """
        Validate that all configuration parameters are in range.

        Raises:
            ConfigurationError: If a setting is out of range.
        """
        if Config.ENUMERATION_CAP < 1 or Config.ENUMERATION_CAP > 24:
            raise ConfigurationError("ENUMERATION_CAP must be between 1 and 24.")

        if Config.PATTERN_SPACE_MAX_K < 0:
            raise ConfigurationError("PATTERN_SPACE_MAX_K must not be negative.")

        if Config.MEASURE_TOLERANCE <= 0:
            raise ConfigurationError("MEASURE_TOLERANCE must be greater than 0.")

        if Config.DEFAULT_MAX_LEN < 1 or Config.DEFAULT_MAX_MEDIATOR_LEN < 1:
            raise ConfigurationError("DEFAULT_MAX_LEN and DEFAULT_MAX_MEDIATOR_LEN must be at least 1.")

        if Config.DEFAULT_MIN_SIDE < 1:
            raise ConfigurationError("DEFAULT_MIN_SIDE must be at least 1.")

        # imported lazily: the registry itself reads Config
        from measures.registry import resolve_measure
        for name in (Config.DEFAULT_DEPENDENCE_MEASURE, Config.DEFAULT_CURVE_MEASURE):
            try:
                resolve_measure(name)
            except Exception as exc:
                raise ConfigurationError(f"Unknown measure in configuration: {name!r}") from exc


def get_config() -> Config:
    """
    Get validated configuration.

    Returns:
        Config: Application configuration object.

    Raises:
        ConfigurationError: If configuration validation fails.
    """
    Config.validate_config()
    return Config
