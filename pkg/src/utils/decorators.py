"""
Decorators for command handlers
"""

import logging
import sys
from functools import wraps
from typing import Callable

from src.core.exceptions import HolevoError

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_USAGE = 2
EXIT_INTERNAL_ERROR = 3


def handle_errors(func: Callable) -> Callable:
    """Turn input errors into exit code 2 with a one-line message on stderr"""
    @wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except (HolevoError, ValueError) as e:
            logger.error(f"{func.__name__} rejected input: {e}")
            print(f"error: {e}", file=sys.stderr)
            return EXIT_USAGE
        except Exception as e:
            logger.error(f"Error in {func.__name__}: {e}", exc_info=True)
            print(f"internal error: {e}", file=sys.stderr)
            return EXIT_INTERNAL_ERROR

    return wrapper
