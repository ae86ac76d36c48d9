"""
Lowner
Entry point for the command line toolkit

Logging goes to the configured log file only; stdout carries the CSV/JSON
artifact and stderr the verdict summary.
"""

import logging
import sys

import config
from cli import main

logging.basicConfig(
    level=getattr(logging, config.LOG_LEVEL),
    format=config.LOG_FORMAT,
    handlers=[
        logging.FileHandler(config.LOG_FILE)
    ]
)
logger = logging.getLogger(__name__)


if __name__ == "__main__":
    sys.exit(main(sys.argv[1:]))
