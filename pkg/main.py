#!/usr/bin/env python3
"""
holevo-weak - command-line entry point
"""

import logging
import sys

from src.core.app import HolevoApp
from src.core.config import Config, setup_logging
from src.core.exceptions import ConfigError
from src.utils.decorators import EXIT_USAGE


def main(argv=None) -> int:
    """Main entry point for the CLI"""
    logger = logging.getLogger(__name__)

    try:
        setup_logging()
        config = Config()
    except ConfigError as e:
        logger.error(f"❌ Invalid configuration: {e}")
        return EXIT_USAGE

    app = HolevoApp(config)
    try:
        app.start()
        return app.run(argv)
    except KeyboardInterrupt:
        logger.info("⚠️ Stopped by user")
        return 130


if __name__ == "__main__":
    sys.exit(main())
