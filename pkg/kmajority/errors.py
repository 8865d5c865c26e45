"""Exception hierarchy shared by the library and the command line."""


class KMajorityError(Exception):
  """Base class for every error raised by kmajority.

  The ``exit_code`` is what the command line returns when the error escapes a command.
  """

  exit_code = 1


class InvalidArgumentError(KMajorityError, ValueError):
  """An argument violates an operation's precondition."""


class NoPairError(KMajorityError):
  """No pair of non-empty vertex sets can be produced for the input."""


class VerificationError(KMajorityError):
  """A produced object failed one of the core predicates."""

  exit_code = 2

  def __init__(self, predicate: str, detail: str = ''):
    self.predicate = predicate
    self.detail = detail
    message = f'verification failed: {predicate}'
    if detail:
      message = f'{message} ({detail})'
    super().__init__(message)


class InternalSearchError(KMajorityError):
  """A search failed where a solution is known to exist."""

  exit_code = 2


class ResourceLimitError(KMajorityError):
  """An input exceeds the size an exhaustive routine accepts."""

  exit_code = 3


class SearchBudgetExceeded(ResourceLimitError):
  """A bounded search stopped before exhausting its space; the answer is unknown."""
