"""
Error Hierarchy
===============
Every failure raised by the core carries the offending tuple as a witness,
spelled with canonical element names.
"""

from typing import Sequence, Tuple


class BracoidError(Exception):
    """Root of all errors raised by the bracoid library."""

    def __init__(self, message: str, witness: Sequence[str] = ()):
        super().__init__(message)
        self.witness: Tuple[str, ...] = tuple(str(w) for w in witness)

    @property
    def kind(self) -> str:
        return type(self).__name__


# ------------------------------------------------------------------
# Groups
# ------------------------------------------------------------------

class GroupError(BracoidError):
    pass


class NotLatinSquare(GroupError):
    pass


class NotAssociative(GroupError):
    pass


class NoIdentity(GroupError):
    pass


class NoInverse(GroupError):
    pass


class InvalidParameter(GroupError):
    pass


class OrderCapExceeded(GroupError):
    pass


# ------------------------------------------------------------------
# Actions
# ------------------------------------------------------------------

class ActionError(BracoidError):
    pass


class ShapeError(ActionError):
    pass


class IdentityLawViolated(ActionError):
    pass


class CompatibilityViolated(ActionError):
    pass


# ------------------------------------------------------------------
# Bracoid and brace axioms
# ------------------------------------------------------------------

class BracoidAxiomError(BracoidError):
    pass


class NotTransitive(BracoidAxiomError):
    pass


class NotRegular(BracoidAxiomError):
    pass


class Eq1Violated(BracoidAxiomError):
    pass


class Eq2Violated(BracoidAxiomError):
    pass


class Eq4Violated(BracoidAxiomError):
    pass


class Eq6Violated(BracoidAxiomError):
    pass


class SharedNMismatch(BracoidAxiomError):
    pass


class NotTwoSidedBrace(BracoidAxiomError):
    pass


# ------------------------------------------------------------------
# Example family, I/O, enumeration
# ------------------------------------------------------------------

class ExampleError(BracoidError):
    pass


class DivisibilityViolated(ExampleError):
    pass


class WellDefinednessViolated(ExampleError):
    pass


class StructureFormatError(BracoidError):
    pass


class SignatureMismatch(BracoidError):
    pass
