"""Shared exception types.

The CLI maps these to exit codes: plain ValueError (malformed arguments or
input) is a usage problem, BoundRefusal is a guarded refusal grounded in the
theory, InternalCheckError means a post-condition the library re-validates
for itself failed and indicates a bug.
"""


class BoundRefusal(ValueError):
    """The requested operation lies outside a proven bound and is refused."""


class OracleGuardError(BoundRefusal):
    """A brute-force oracle would exceed its candidate guard."""


class InternalCheckError(RuntimeError):
    """An internally re-validated post-condition failed (implementation bug)."""
