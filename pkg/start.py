#!/usr/bin/env python3
"""
Batch entrypoint: runs a request file with a worker pool sized from the
settings or the CPU count.

    python start.py requests.txt
"""
import logging
import multiprocessing
import sys
from typing import Optional

from app import main as app_main
from config.logging_config import configure_logging
from config.settings import Settings, get_settings
from models.errors import UsageError

logger = logging.getLogger(__name__)


def get_optimal_jobs(config: Optional[Settings] = None) -> int:
    """
    Number of batch workers.

    An explicit ``jobs`` setting (BRAIDFORGE_JOBS) wins; otherwise the CPU
    count, capped at 8. Invalid values never reach here: they are rejected
    when the settings load.

    Returns:
        int: worker count
    """
    if config is None:
        config = get_settings()
    if "jobs" in config.model_fields_set:
        logger.info(f"Using configured jobs: {config.jobs}")
        return config.jobs

    cpu_count = multiprocessing.cpu_count()
    max_jobs = 8
    jobs = min(cpu_count, max_jobs)
    logger.info(f"Auto-detected {cpu_count} CPU cores, using {jobs} jobs")
    return jobs


def main(argv=None) -> int:
    """Run the batch file named on the command line."""
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        config = get_settings()
    except UsageError as e:
        sys.stderr.write(f"usage error: {e}\n")
        return 2
    configure_logging(config.log_level)
    if len(argv) != 1:
        sys.stderr.write("usage: start.py REQUEST_FILE\n")
        return 2
    return app_main(["batch", argv[0], "--jobs", str(get_optimal_jobs(config))])


if __name__ == "__main__":
    sys.exit(main())
