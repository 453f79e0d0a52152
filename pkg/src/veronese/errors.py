"""Exception types shared across the package."""


class InvalidInputError(ValueError):
    """A caller-supplied value violates a documented precondition."""


class BudgetExceededError(RuntimeError):
    """An exhaustive search refused to run past its configured bounds.

    Raised instead of returning a possibly-wrong partial answer.
    """


class InternalConsistencyError(RuntimeError):
    """An internally constructed object failed its own verification.

    This always indicates a bug in the library, never a legitimate
    negative answer.
    """
