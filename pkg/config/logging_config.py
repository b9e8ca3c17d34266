"""
Logging configuration for the toolkit.

Log records go to stderr so that the machine-readable stdout of the CLI
stays byte-identical between runs.
"""

import logging
import sys


def configure_logging(level: str = "WARNING"):
    """
    Configure logging for the entire application.

    Args:
        level: Logging level (DEBUG, INFO, WARNING, ERROR)
    """
    logging.basicConfig(
        level=level.upper(),
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        datefmt='%Y-%m-%d %H:%M:%S',
        stream=sys.stderr,
        force=True,
    )

    # Keep our package loggers at the requested level
    for name in ("braids", "coxeter", "routers"):
        logging.getLogger(name).setLevel(level.upper())

    logging.debug("Logging configured successfully")

