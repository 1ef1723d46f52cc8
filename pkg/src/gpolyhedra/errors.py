"""Exception hierarchy.

``DomainError`` subclasses signal mathematically invalid requests (exit code
1 on the command line); ``InputError`` covers malformed or inconsistent
input (exit code 2).
"""


class GPolyError(Exception):
    pass


class InputError(GPolyError, ValueError):
    """Malformed data: bad dimensions, unknown fields, dependent bases."""


class DomainError(GPolyError):
    pass


class EmptySetError(DomainError):
    """An operation that needs a nonempty set received the empty set."""


class NotAConeError(DomainError):
    pass


class UnsolvableObjectiveError(DomainError):
    """The objective lies outside the cone of solvable objectives."""


class DependentWeightsError(DomainError):
    pass


class EmptyInteriorError(DomainError):
    def __init__(self, msg: str = "int K empty"):
        super().__init__(msg)


class NotInSetError(DomainError):
    """A query point that must belong to the feasible set does not."""
