import logging
import sys
from typing import TextIO


LOG_FORMAT = "%(asctime)s %(levelname)s [%(name)s] %(message)s"

# third-party loggers that drown the service's own lines at DEBUG
_NOISY = ("httpx", "uvicorn.access")


def configure_logging(level: str | int = "INFO", stream: TextIO | None = None) -> None:
    """Route every record to a single handler.

    The API logs to stdout; the CLI passes stderr so stdout only carries
    rendered records.
    """
    root = logging.getLogger()
    for handler in list(root.handlers):
        root.removeHandler(handler)
    handler = logging.StreamHandler(stream or sys.stdout)
    handler.setFormatter(logging.Formatter(fmt=LOG_FORMAT, datefmt="%Y-%m-%d %H:%M:%S"))
    root.addHandler(handler)
    root.setLevel(level.upper() if isinstance(level, str) else level)
    for name in _NOISY:
        logging.getLogger(name).setLevel(max(root.level, logging.WARNING))
