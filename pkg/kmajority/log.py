"""Logging setup: one rich handler on standard error."""

import logging

from rich.console import Console
from rich.logging import RichHandler

_stderr_console = Console(stderr=True)


def get_console() -> Console:
  """Console used for human-readable output; never standard output."""
  return _stderr_console


def configure_logging(verbose: bool = False) -> None:
  """Install the rich handler on the package logger.

  Args:
      verbose: Log at DEBUG instead of WARNING
  """
  logger = logging.getLogger('kmajority')
  for handler in list(logger.handlers):
    logger.removeHandler(handler)
  handler = RichHandler(console=_stderr_console, show_path=False, rich_tracebacks=True)
  handler.setFormatter(logging.Formatter('%(message)s'))
  logger.addHandler(handler)
  logger.setLevel(logging.DEBUG if verbose else logging.WARNING)
  logger.propagate = False
