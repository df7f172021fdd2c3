"""Logging for PerfectLab.

One ``perfectlab`` logger per process. Suite workers are separate processes,
so each record carries the process name; components log through children
such as ``perfectlab.verifier``.
"""

import logging
import sys

from .config import data_dir, log_level

ROOT = "perfectlab"
LOG_FORMAT = "%(asctime)s [%(levelname)s] %(processName)s %(name)s: %(message)s"
DATE_FORMAT = "%Y-%m-%d %H:%M:%S"
LOG_FILE_NAME = "perfectlab.log"


def _configure(logger: logging.Logger) -> None:
    logger.setLevel(logging.DEBUG)
    logger.propagate = False
    formatter = logging.Formatter(LOG_FORMAT, DATE_FORMAT)

    # stdout carries graph6 lines and JSON reports
    stream_handler = logging.StreamHandler(sys.stderr)
    stream_handler.setLevel(log_level())
    stream_handler.setFormatter(formatter)
    logger.addHandler(stream_handler)

    try:
        log_file = data_dir() / LOG_FILE_NAME
        log_file.parent.mkdir(parents=True, exist_ok=True)
        file_handler = logging.FileHandler(log_file)
        file_handler.setFormatter(formatter)
        logger.addHandler(file_handler)
    except OSError:
        pass


def get_logger(component: str | None = None) -> logging.Logger:
    """Return the PerfectLab logger (or a component child), configuring on first call."""
    root = logging.getLogger(ROOT)
    if not root.handlers:
        _configure(root)
    return root.getChild(component) if component else root
