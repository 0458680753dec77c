"""Exception hierarchy. Every error carries the exit status the CLI reports."""

from borderedsuture.constants import (
    EXIT_DISAGREEMENT,
    EXIT_FAILURE,
    EXIT_INTERFACE,
    EXIT_SCHEMA,
    EXIT_TERMINATION,
)


class BorderedError(Exception):
    """
    General exception for borderedsuture.
    """

    exit_code = EXIT_FAILURE

    def __init__(self, message):
        self.message = message
        super().__init__(self.message)


class SchemaError(BorderedError):
    """
    Raised when an input does not parse against its schema.
    """

    exit_code = EXIT_SCHEMA


class ValidationError(SchemaError):
    """Exception raised for (possibly accumulated) validation errors."""

    def __init__(self, *errors):
        self.errors = errors[0] if len(errors) == 1 else errors
        self.message = str(self)
        Exception.__init__(self, *errors)

    def __str__(self):
        if isinstance(self.errors, tuple):
            return "\n".join(map(str, self.errors))
        return str(self.errors)


class InterfaceError(BorderedError):
    """
    Raised on algebra, interface or idempotent mismatches, and on missing templates.
    """

    exit_code = EXIT_INTERFACE


class BackendDisagreementError(BorderedError):
    """
    Raised when two independent computations of the same quantity disagree.
    """

    exit_code = EXIT_DISAGREEMENT


class TerminationError(BorderedError):
    """
    Raised when an iteration or enumeration cap is hit. Results are never truncated.
    """

    exit_code = EXIT_TERMINATION


class StructureError(BorderedError):
    """
    Raised when a module fails its structure equations.
    """

    exit_code = EXIT_FAILURE


def ensure_valid(diagnostics: list) -> None:
    """Raise the accumulated diagnostics, if any."""
    if diagnostics:
        raise ValidationError(*diagnostics)
