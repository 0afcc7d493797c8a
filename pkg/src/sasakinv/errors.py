"""Error taxonomy shared by every module.

DomainError signals bad input (a violated precondition); IntegrityError
signals an internal consistency failure that should never occur on valid
input and indicates a bug or a corrupted fixture.
"""


class DomainError(ValueError):
    """Raised when an operation is called outside its domain."""


class IntegrityError(RuntimeError):
    """Raised when a cross-check that must hold by construction fails."""
