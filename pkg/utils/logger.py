"""
Logging utility for the Higher-Order Pattern Miner.

Provides centralized logging with console output and optional file output.
Handles error tracking and mining run monitoring.
"""

import logging
import logging.handlers
import sys
from logging import Formatter

from config import Config


class MiningLogger:
    """
    Centralized logger for the pattern mining toolkit.

    Provides structured logging with timestamps, log levels, and module tracking.
    Console output goes to stderr so result streams on stdout stay clean.
    """

    _logger = None

    @staticmethod
    def get_logger(name: str) -> logging.Logger:
        """
        Get or create a logger instance.

        Args:
            name: The name of the logger (usually __name__ from the calling module).

        Returns:
            logging.Logger: Configured logger instance.
        """
        if MiningLogger._logger is None:
            MiningLogger._initialize_logger()

        return MiningLogger._logger.getChild(name)

    @staticmethod
    def _initialize_logger():
        """
        Initialize the package logger with handlers and formatters.

        The file handler is only attached when LOG_FILE is configured.
        """
        logger = logging.getLogger("hopminer")
        log_level = getattr(logging, Config.LOG_LEVEL.upper(), logging.WARNING)
        logger.setLevel(log_level)
        logger.propagate = False

        # Clear any existing handlers
        logger.handlers = []

        formatter = Formatter(
            fmt='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
            datefmt='%Y-%m-%d %H:%M:%S'
        )

        if Config.LOG_FILE:
            try:
                file_handler = logging.handlers.RotatingFileHandler(
                    Config.LOG_FILE,
                    maxBytes=10485760,  # 10MB
                    backupCount=5
                )
                file_handler.setLevel(log_level)
                file_handler.setFormatter(formatter)
                logger.addHandler(file_handler)
            except OSError as e:
                print(f"Failed to configure file handler: {e}", file=sys.stderr)

        console_handler = logging.StreamHandler(sys.stderr)
        console_handler.setLevel(log_level)
        console_handler.setFormatter(formatter)
        logger.addHandler(console_handler)

        MiningLogger._logger = logger

    @staticmethod
    def log_mining_run(kind: str, n_transactions: int, n_results: int, elapsed: float):
        """
        Log the outcome of one miner invocation.

        Args:
            kind: Pattern family that was mined.
            n_transactions: Size of the database.
            n_results: Number of patterns returned.
            elapsed: Wall-clock seconds spent.
        """
        logger = MiningLogger.get_logger(__name__)
        logger.info(
            f"Mining Run - Kind: {kind}, Transactions: {n_transactions}, "
            f"Results: {n_results}, Elapsed: {elapsed:.3f}s"
        )

    @staticmethod
    def log_error(error_type: str, error_message: str, traceback_info: str = ""):
        """
        Log error information with context.

        Args:
            error_type: Type of error (e.g., LoadError, ConstraintSyntaxError).
            error_message: Detailed error message.
            traceback_info: Optional traceback information.
        """
        logger = MiningLogger.get_logger(__name__)
        logger.error(
            f"{error_type}: {error_message}\n{traceback_info}" if traceback_info
            else f"{error_type}: {error_message}"
        )
