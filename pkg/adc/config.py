import logging
import os

from utilities.config_utils import read_env_int

logger = logging.getLogger(__name__)

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


class ConfigManager:

    """Settings read from the environment, with defaults."""

    def __init__(self):
        level = os.getenv("ADC_LOG_LEVEL", "WARNING").strip().upper() or "WARNING"
        if level not in LOG_LEVELS:
            unknown_level = f"ADC_LOG_LEVEL must be one of {', '.join(LOG_LEVELS)}, got {level!r}."
            raise ValueError(unknown_level)
        self.log_level = level
        self.default_bound = read_env_int("ADC_DEFAULT_BOUND", 1, minimum=1)
        self.safe_integer_bits = read_env_int("ADC_SAFE_INTEGER_BITS", 53, minimum=1)
        self.indent = read_env_int("ADC_INDENT", 2, minimum=0)
        logger.debug(
            "Config: level=%s bound=%d safe_bits=%d indent=%d",
            self.log_level,
            self.default_bound,
            self.safe_integer_bits,
            self.indent,
        )

    def log_level_number(self, verbose: bool = False) -> int:
        return logging.DEBUG if verbose else getattr(logging, self.log_level)
