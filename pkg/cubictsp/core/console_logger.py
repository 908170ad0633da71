# File: cubictsp/core/console_logger.py
"""
LOGGER SETUP

Library modules only call `logger.*`; sinks are installed here, once, by the
command-line entry point. Standard output carries command results, so every
sink writes to stderr or to files under the log directory.

Sinks:
- stderr, colorized, at the requested level
- cubictsp.log: everything at DEBUG, rotated
- performance.log: timing lines emitted by debug_performance ("PERF:", "SLOW")
- error.log: errors with backtrace
"""

import sys
from pathlib import Path

from loguru import logger

CONSOLE_FORMAT = (
    "<green>{time:HH:mm:ss.SSS}</green> | "
    "<level>{level: <8}</level> | "
    "<cyan>{module}</cyan>:<yellow>{function}</yellow>:<magenta>{line}</magenta> | "
    "<level>{message}</level>"
)
FILE_FORMAT = "{time:YYYY-MM-DD HH:mm:ss.SSS} | {level: <8} | {module}:{function}:{line} | {message}"

_PERF_KEYWORDS = ("PERF:", "SLOW")


def _is_perf_record(record) -> bool:
    message = record["message"].upper()
    return any(keyword in message for keyword in _PERF_KEYWORDS)


def setup_logger(level: str = "INFO", log_dir: str = "logs", enable_file_logs: bool = True):
    """
    Install the stderr sink and, optionally, the file sinks.

    Args:
        level: stderr log level (DEBUG/INFO/WARNING/ERROR)
        log_dir: directory for the rotating log files
        enable_file_logs: False keeps everything on stderr (used by tests)

    Returns:
        The configured loguru logger.
    """
    logger.remove()

    logger.add(sys.stderr, level=level.upper(), format=CONSOLE_FORMAT, colorize=True)

    if enable_file_logs:
        directory = Path(log_dir)
        directory.mkdir(parents=True, exist_ok=True)

        logger.add(
            directory / "cubictsp.log",
            level="DEBUG",
            format=FILE_FORMAT,
            rotation="5 MB",
            retention="10 days",
        )
        logger.add(
            directory / "performance.log",
            level="INFO",
            format="{time} | {module}:{function} | {message}",
            rotation="2 MB",
            retention="5 days",
            filter=_is_perf_record,
        )
        logger.add(
            directory / "error.log",
            level="ERROR",
            format=FILE_FORMAT + " | {exception}",
            rotation="1 MB",
            retention="10 days",
            backtrace=True,
            diagnose=True,
        )

    logger.debug(f"Logger ready (level={level}, file_logs={enable_file_logs}, dir={log_dir})")
    return logger
