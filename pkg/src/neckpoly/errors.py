"""Exception taxonomy shared by the whole package.

CLI exit codes map onto these: InputError (and its DomainError subclass)
exit 1, ResourceError exit 2, VerificationError and failed check reports
exit 3.
"""


class InputError(ValueError):
    """Malformed or inconsistent arguments (bad digits, mismatched rings, ...)."""


class DomainError(InputError):
    """Arguments outside an operation's mathematical domain.

    Example: asking for a balanced-expansion coefficient of an integer
    that has no balanced expansion in the given base.
    """


class ResourceError(RuntimeError):
    """A guardrail refused the computation; the message names the offending size."""


class VerificationError(AssertionError):
    """Two computation paths that must agree by theorem disagreed.

    This signals a defect in the implementation (or its premises), never
    a user mistake.
    """
