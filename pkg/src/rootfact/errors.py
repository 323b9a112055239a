"""Error taxonomy shared by the library and the CLI.

Every library failure raises a LibError subclass carrying a stable
``kind`` string.  The CLI maps kinds to exit codes: user mistakes
(invalid-input, invalid-word, budget-exceeded, branch-violation) exit
with 2, geometric failures (exceptional-set, stratum-failure) with 3.
"""

from __future__ import annotations


class LibError(Exception):
    """Base class; ``kind`` identifies the failure class."""

    kind = "error"

    def payload(self) -> dict:
        """JSON-ready description of the failure."""
        return {"kind": self.kind, "message": str(self)}


class InvalidInputError(LibError):
    kind = "invalid-input"


class InvalidWordError(LibError):
    """A word or root ordering fails validation.

    ``index`` is the 1-based position of the first offending letter or
    root when known, else None.
    """

    kind = "invalid-word"

    def __init__(self, message: str, index: int | None = None):
        super().__init__(message)
        self.index = index

    def payload(self) -> dict:
        return {"kind": self.kind, "message": str(self), "index": self.index}


class BudgetExceededError(LibError):
    kind = "budget-exceeded"


class StratumError(LibError):
    """LDU elimination hit a vanishing pivot on an invertible matrix.

    ``index`` is the 1-based pivot position; the matrix lies outside
    the open stratum where the factorization exists.
    """

    kind = "stratum-failure"

    def __init__(self, message: str, index: int):
        super().__init__(message)
        self.index = index

    def payload(self) -> dict:
        return {"kind": self.kind, "message": str(self), "index": self.index}


class ExceptionalSetError(LibError):
    """A coordinate point lies on the exceptional set of an inverse map.

    ``index`` is the 1-based recurrence or pivot position where the
    reconstruction degenerated, ``value`` a short origin tag.
    """

    kind = "exceptional-set"

    def __init__(self, message: str, index: int | None = None, value: str | None = None):
        super().__init__(message)
        self.index = index
        self.value = value

    def payload(self) -> dict:
        return {
            "kind": self.kind,
            "message": str(self),
            "index": self.index,
            "value": self.value,
        }


class BranchViolationError(LibError):
    """A square-root branch constraint failed (value not real positive)."""

    kind = "branch-violation"
