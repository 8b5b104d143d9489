import logging
import os

from termcolor import colored


class ColoredFormatter(logging.Formatter):
    """
    A formatter that colors each log line according to its level.

    Attributes:
        COLORS: A dictionary mapping log levels to colors.
    """

    COLORS = {
        "DEBUG": "cyan",
        "INFO": "green",
        "WARNING": "yellow",
        "ERROR": "red",
        "CRITICAL": "magenta",
    }

    def format(self, record):
        """
        Format a log record with colors.

        Args:
            record: The log record to format.

        Returns:
            The formatted log message with colors.
        """
        log_message = super().format(record)
        return colored(log_message, self.COLORS.get(record.levelname, "white"))


ENV_VAR = "POINTLESS_LOG"

LEVELS = {
    "debug": logging.DEBUG,
    "info": logging.INFO,
    "warning": logging.WARNING,
    "error": logging.ERROR,
}

# config log
dev_logger = logging.getLogger("pointless.dev")
dev_formatter = ColoredFormatter("%(asctime)s - %(levelname)s - %(threadName)s - %(message)s")
dev_handler = logging.StreamHandler()
dev_handler.setFormatter(dev_formatter)
dev_logger.addHandler(dev_handler)
dev_logger.setLevel(logging.INFO)
dev_logger.propagate = False

progress_logger = logging.getLogger("pointless.progress")
progress_handler = logging.StreamHandler()
progress_handler.setFormatter(ColoredFormatter("%(message)s"))
progress_logger.addHandler(progress_handler)
progress_logger.setLevel(logging.INFO)
progress_logger.propagate = False

dev_mode = False


def set_dev_mode(mode: bool):
    """
    Set the development mode.

    In development mode debug, info, warning and error messages are emitted.
    Outside of it only critical messages and color_print output appear.

    Args:
        mode: True to enable development mode, False to disable it.
    """
    global dev_mode
    dev_mode = mode


def set_level(level):
    """
    Set the logging level for the development logger.

    Args:
        level: The logging level to set (e.g., logging.DEBUG, logging.INFO).
    """
    dev_logger.setLevel(level)


def configure_from_env(environ=None):
    """
    Apply the verbosity requested through the POINTLESS_LOG environment variable.

    Args:
        environ: Mapping to read from. Defaults to os.environ.

    Returns:
        The level name that was applied, or None when the variable is unset.

    Raises:
        ValueError: If the variable holds an unknown level name.
    """
    environ = os.environ if environ is None else environ
    value = environ.get(ENV_VAR, "").strip().lower()
    if not value:
        set_dev_mode(False)
        return None
    if value not in LEVELS:
        raise ValueError(f"{ENV_VAR} must be one of {sorted(LEVELS)}, got {value!r}")
    set_dev_mode(True)
    set_level(LEVELS[value])
    return value


def debug(message):
    """Log a debug message."""
    if dev_mode:
        dev_logger.debug(message)


def info(message):
    """Log an info message."""
    if dev_mode:
        dev_logger.info(message)


def warning(message):
    """Log a warning message."""
    if dev_mode:
        dev_logger.warning(message)


def error(message):
    """Log an error message."""
    if dev_mode:
        dev_logger.error(message)


def critical(message):
    """
    Log a critical message and raise a RuntimeError.

    Args:
        message: The message to log.

    Raises:
        RuntimeError: Always raised with the provided message.
    """
    dev_logger.critical(message)
    raise RuntimeError(message)


def color_print(message, **kwargs):
    """
    Print a colored message to the progress logger.

    Args:
        message: The message to print.
        **kwargs: Additional keyword arguments to pass to the logger.
    """
    progress_logger.info(message, **kwargs)


configure_from_env()
