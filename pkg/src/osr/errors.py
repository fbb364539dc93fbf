"""Exception hierarchy.

Input errors (bad labels, bad tables, failed axioms, size guardrails) are
expected at the API boundary.  The *bug signal* errors at the bottom are
raised when an exhaustive verification of a theorem fails; they indicate a
defect in this library, never a legitimate input.
"""

from __future__ import annotations


class OsrError(Exception):
    """Base class for all errors raised by this package."""


class LabelError(OsrError):
    """An element label is missing, duplicated, or a table is malformed."""


class SizeLimit(OsrError):
    """A carrier or search space exceeds the desk-scale guardrail."""


class AxiomViolation(OsrError):
    """One or more ordered-semiring axioms failed on the given tables.

    ``violations`` lists every failed law as ``(axiom_name, witness)`` with
    one witness (a tuple of element labels) per law.  ``axiom`` / ``witness``
    expose the first entry.
    """

    def __init__(self, violations):
        self.violations = tuple(violations)
        self.axiom, self.witness = self.violations[0]
        lines = ", ".join(f"{a} at {w}" for a, w in self.violations)
        super().__init__(f"axioms failed: {lines}")


class NotAPartialOrder(OsrError):
    """The input relation is not antisymmetric after closure."""


class NotALattice(OsrError):
    """Some pair of elements lacks a least upper or greatest lower bound."""


class NotAQuantale(OsrError):
    """The multiplication table violates the quantale laws."""


class NotIntegral(OsrError):
    """The quantale unit is not the top element."""


class NotSubadditive(OsrError):
    """A morphism required to be subadditive is not."""


class EndpointMismatch(OsrError):
    """Composition of morphisms with incompatible endpoints."""


class OwnerMismatch(OsrError):
    """Ideals from different semirings were mixed in one operation."""


class ParseError(OsrError):
    """Syntax error in an ``.osr`` document."""

    def __init__(self, line: int, column: int, message: str):
        self.line = line
        self.column = column
        self.message = message
        super().__init__(f"line {line}, column {column}: {message}")


class DuplicateLabel(ParseError):
    """The same element label appears twice."""


class MissingSection(ParseError):
    """A required ``.osr`` section is absent or out of order."""


# --- bug signals: an exhaustively checked theorem failed ---------------------


class VerificationFailure(OsrError):
    """Base class for failures of exhaustively verified theorems."""


class InternalMismatch(VerificationFailure):
    """Two routes that must agree (formula vs. fixed point, etc.) differ."""


class ForcedHomomorphismFailure(VerificationFailure):
    """A subadditive morphism failed to be a homomorphism although one of
    the sufficient conditions held."""


class UniversalityFailure(VerificationFailure):
    """A universal-property bijection or triangle identity failed."""


class PresentationViolation(VerificationFailure):
    """The distributive reflection violated a presentation relation."""


class CrossCheckFailure(VerificationFailure):
    """Two independent enumerations of the same set disagree."""


class LemmaViolation(VerificationFailure):
    """A maximal ideal failed to be prime."""


class EquivalenceViolation(VerificationFailure):
    """The degeneracy conditions did not agree with each other."""


class CorrespondenceFailure(VerificationFailure):
    """Prime ideals and prime quantale elements disagree."""


class HomeoFailure(VerificationFailure):
    """The canonical point bijection is not a homeomorphism."""


class IsoFailure(VerificationFailure):
    """An explicitly constructed isomorphism failed to verify."""


class NotSober(VerificationFailure):
    """A spectrum space failed the sobriety check."""
