"""Records the verifications a command performs before it reports anything."""

import time
from contextlib import contextmanager
from typing import Iterator

from kmajority.errors import VerificationError
from kmajority.models import CheckSpan


class CheckRecorder:
  """Collects named checks with their outcome and duration."""

  def __init__(self):
    self.spans: list[CheckSpan] = []
    self.started = time.perf_counter()

  def record(self, name: str, passed: bool, detail: str = '', duration_ms: float = 0.0) -> bool:
    span = CheckSpan(name=name, passed=bool(passed), detail=detail, duration_ms=duration_ms)
    self.spans.append(span)
    return bool(passed)

  @contextmanager
  def check(self, name: str, detail: str = '') -> Iterator[dict[str, object]]:
    """Time a check; the body sets ``outcome['passed']`` (and optionally ``'detail'``).

    Args:
        name: Predicate being checked
        detail: Default detail text

    Yields:
        A dict to store the outcome
    """
    outcome: dict[str, object] = {'passed': False, 'detail': detail}
    start = time.perf_counter()
    try:
      yield outcome
    except VerificationError as e:
      outcome['passed'] = False
      outcome['detail'] = e.detail or str(e)
      raise
    finally:
      self.record(
        name,
        bool(outcome['passed']),
        str(outcome['detail']),
        (time.perf_counter() - start) * 1000,
      )

  def require(self, name: str, passed: bool, detail: str = '') -> None:
    """Record a check and stop the command if it failed.

    Raises:
        VerificationError: ``passed`` is false
    """
    if not self.record(name, passed, detail):
      raise VerificationError(name, detail)

  @property
  def verification(self) -> dict[str, bool]:
    flags: dict[str, bool] = {}
    for span in self.spans:
      flags[span.name] = flags.get(span.name, True) and span.passed
    return flags

  def first_failure(self) -> CheckSpan | None:
    return next((span for span in self.spans if not span.passed), None)

  @property
  def elapsed_s(self) -> float:
    return time.perf_counter() - self.started
