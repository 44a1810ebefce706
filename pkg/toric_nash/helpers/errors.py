"""Exception types raised across the package.

Every user-facing failure is a ``ToricError`` (and therefore a
``ValueError``); the command line maps those to exit code 2. Internal
consistency failures raise ``InvariantViolation`` and map to exit code 3.
"""

__all__ = [
    'ToricError',
    'ZeroVector',
    'NotSquare',
    'DependentColumns',
    'RankMismatch',
    'EmptyInput',
    'NotStronglyConvex',
    'NotInCone',
    'NotSimplicial',
    'NotRank2',
    'NonSimplicialFan',
    'InvalidConeSpec',
    'InvariantViolation',
]


class ToricError(ValueError):
    """Base class for invalid input to any operation."""


class ZeroVector(ToricError):
    pass


class NotSquare(ToricError):
    pass


class DependentColumns(ToricError):
    pass


class RankMismatch(ToricError):
    pass


class EmptyInput(ToricError):
    pass


class NotStronglyConvex(ToricError):
    pass


class NotInCone(ToricError):
    pass


class NotSimplicial(ToricError):
    pass


class NotRank2(ToricError):
    pass


class NonSimplicialFan(ToricError):
    pass


class InvalidConeSpec(ToricError):
    """Malformed cone document; ``field`` names the offending entry."""

    def __init__(self, field, message):
        super(InvalidConeSpec, self).__init__('{}: {}'.format(field, message))
        self.field = field


class InvariantViolation(RuntimeError):
    pass
