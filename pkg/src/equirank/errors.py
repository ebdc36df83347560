"""Exception hierarchy.

Every error raised by the library derives from :class:`EquirankError`.
The CLI maps :class:`ValidationError` to exit code 3 and
:class:`BudgetExceeded` to exit code 4.
"""


class EquirankError(Exception):
    pass


class ValidationError(EquirankError):
    """An input violates a law it was promised to satisfy."""


class BudgetExceeded(EquirankError):
    """A brute-force computation would exceed its configured cap."""


class SearchBudgetExceeded(BudgetExceeded):
    pass


# group_core
class MalformedTable(ValidationError):
    pass


class NotLatinSquare(ValidationError):
    pass


class NoIdentity(ValidationError):
    pass


class NotAssociative(ValidationError):
    pass


class MissingInverse(ValidationError):
    pass


class ZeroOrder(ValidationError):
    pass


class TooLarge(ValidationError):
    pass


class ElementOutOfRange(ValidationError):
    pass


class NotASubgroup(ValidationError):
    pass


class ParentMismatch(ValidationError):
    pass


# gset
class IdentityNotFixing(ValidationError):
    pass


class NotCompatible(ValidationError):
    pass


class PointOutOfRange(ValidationError):
    pass


class GroupMismatch(ValidationError):
    pass


# equivariant
class LengthMismatch(ValidationError):
    pass


class BindingMismatch(ValidationError):
    pass


class SameOrbit(ValidationError):
    pass


class StabilizerNotContained(ValidationError):
    pass


class NotInNormalizer(ValidationError):
    pass


class StabilizerMismatch(ValidationError):
    pass


class NotInvariant(ValidationError):
    pass


class NotEquivariantOnSubset(ValidationError):
    pass


class EscapesSubset(ValidationError):
    pass


class NotEquivariant(ValidationError):
    pass


# rank / oracle
class IndexOutOfRange(ValidationError):
    pass


class NotGenerating(ValidationError):
    pass


# cli
class SpecParseError(EquirankError):
    """A group/action/map specifier or input file could not be parsed."""
