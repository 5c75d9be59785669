"""Error types shared across the toolkit.

Every expected failure carries a stable ``code`` string so that the CLI and
the HTTP service can surface machine-readable error names instead of stack
traces.
"""

from __future__ import annotations

from typing import Sequence


class SmeError(Exception):
    """Base class for all expected domain errors."""

    code = "ERROR"

    def __init__(self, message: str, *, subjects: Sequence[str] = ()) -> None:
        super().__init__(message)
        self.message = message
        self.subjects = tuple(subjects)

    def __str__(self) -> str:  # pragma: no cover - trivial
        return self.message


class ParseError(SmeError):
    """The document is not well-formed structured text."""

    code = "PARSE_ERROR"


class SchemaError(SmeError):
    """The document parses but does not match the expected schema."""

    code = "SCHEMA_ERROR"


class IntegrityError(SmeError):
    """The document violates a repository invariant; subjects name the ids."""

    code = "INTEGRITY_ERROR"


class UnknownIdError(SmeError):
    """An operation referenced a fragment id missing from the repository."""

    code = "UNKNOWN_ID"


class CycleError(SmeError):
    """Task ordering hit a precedence cycle; subjects name the cycle."""

    code = "CYCLE"


class PreconditionError(SmeError):
    """An operation was invoked on input that fails its precondition."""

    code = "PRECONDITION"


class EmptyFragmentSetError(SmeError):
    """Coverage was requested against a fragment set with no counted tasks."""

    code = "EMPTY_FRAGMENT_SET"


class UnknownFragmentError(SmeError):
    """A corpus or project mapping cited an unresolvable fragment id."""

    code = "UNKNOWN_FRAGMENT"


class NoRequirementsError(SmeError):
    """Usability is undefined for a project with zero requirements."""

    code = "NO_REQUIREMENTS"
