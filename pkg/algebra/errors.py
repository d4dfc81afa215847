"""
Error Types

Student Guide:
--------------
Three things can go wrong in a computation, and each one has its own type:

- UsageError: the caller broke a precondition (wrong basis, odd degree,
  truncation too short). The CLI maps this to exit code 2.
- CutoffOverflowError: a Chern-ring result would exceed the degree cutoff.
- DecompositionError: a solve that exactness guarantees to succeed did not.
  That is a bug, so it is never swallowed.

A failed mathematical CHECK is not an exception. Checks return reports with
pass=False and a witness.
"""


class UsageError(ValueError):
    """A precondition of an operation was violated."""


class CutoffOverflowError(UsageError):
    """A Chern-ring result has terms above the ring's degree cutoff."""


class DecompositionError(RuntimeError):
    """A preimage that must exist could not be found."""
