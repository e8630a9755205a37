"""Exception types shared across the library.

Every mathematically meaningful failure gets its own class so callers (and the
CLI exit-code logic) can tell "the input violates a hypothesis" apart from
"the implementation or a theorem is broken".
"""

from __future__ import annotations


class SemigroupError(Exception):
    """Base class for all errors raised by this library."""


# --- table validation ---------------------------------------------------


class NonSquare(SemigroupError):
    """The raw multiplication table is not a nonempty square array."""


class OutOfRange(SemigroupError):
    """A table entry falls outside 0..n-1."""

    def __init__(self, row: int, col: int, value: object):
        self.row, self.col, self.value = row, col, value
        super().__init__(f"entry [{row}][{col}] = {value!r} is not an element index")


class NotAssociative(SemigroupError):
    """Associativity fails; carries the first witness triple in scan order."""

    def __init__(self, witness: tuple[int, int, int]):
        self.witness = witness
        a, b, c = witness
        super().__init__(f"(a*b)*c != a*(b*c) for (a,b,c) = ({a},{b},{c})")


# --- caps and structural guards ------------------------------------------


class OrderCapExceeded(SemigroupError):
    """The input is larger than the configured enumeration cap."""


class NotClosed(SemigroupError):
    """A subset is not closed under multiplication."""

    def __init__(self, a: int, b: int, product: int):
        self.witness = (a, b, product)
        super().__init__(f"{a}*{b} = {product} escapes the subset")


class NotACongruence(SemigroupError):
    """A partition fails left or right compatibility."""

    def __init__(self, witness: tuple[int, int, int, str]):
        self.witness = witness
        a, b, c, side = witness
        super().__init__(f"{a} ~ {b} but {side} translation by {c} separates them")


class NotABand(SemigroupError):
    """An operation requiring a band got a non-idempotent element."""


class NotAMorphism(SemigroupError):
    """A map does not respect multiplication."""

    def __init__(self, witness: tuple[int, int]):
        self.witness = witness
        super().__init__(f"phi({witness[0]}*{witness[1]}) != phi({witness[0]})*phi({witness[1]})")


# --- classification gates -------------------------------------------------


class NotAbundant(SemigroupError):
    """The semigroup has a starred class with no idempotent."""


class NotAdequate(SemigroupError):
    """The semigroup is not adequate (abundant with commuting idempotents)."""


class NotQuasiAdequate(SemigroupError):
    """The semigroup is not quasi-adequate (abundant with a band of idempotents)."""


class NotRegular(SemigroupError):
    """A regular element was required."""


class NoMinimum(SemigroupError):
    """No least element exists among the adequate admissible congruences found."""


# --- transversal verification ----------------------------------------------


class NotAdequateSub(SemigroupError):
    """The candidate subset is not an adequate subsemigroup."""


class NotStarSub(SemigroupError):
    """The candidate subsemigroup does not inherit the starred relations."""


class NoDecomposition(SemigroupError):
    """Some element admits no valid transversal factorisation."""

    def __init__(self, x: int):
        self.element = x
        super().__init__(f"element {x} has no factorisation e*s*f through the candidate")


class AmbiguousDecomposition(SemigroupError):
    """Some element admits more than one valid transversal factorisation."""

    def __init__(self, x: int, triples: tuple[tuple[int, int, int], ...]):
        self.element = x
        self.triples = triples
        super().__init__(f"element {x} has {len(triples)} factorisations: {triples}")


class NotAdmissible(SemigroupError):
    """The transversal does not satisfy bar(xy) = bar(x)bar(y)."""


class NotQuasiIdeal(SemigroupError):
    """The transversal is not a quasi-ideal."""


class NotLeftAdequate(SemigroupError):
    """A left adequate semigroup was required."""


class NotRightAdequate(SemigroupError):
    """A right adequate semigroup was required."""


class NotLeftAmple(SemigroupError):
    """A left ample semigroup was required."""


# --- builders ---------------------------------------------------------------


class AxiomViolation(SemigroupError):
    """Structure data failed validation; carries the full report."""

    def __init__(self, report):
        self.report = report
        failed = [e.name for e in report.entries if e.applicable and not e.passed]
        super().__init__(f"structure data rejected: {', '.join(failed) or 'unknown'}")


class PostconditionFailed(SemigroupError):
    """A builder's guaranteed postcondition failed; this signals a bug."""


class BandNotNormal(SemigroupError):
    """A left/right normal band was required."""


class TransversalInvalid(SemigroupError):
    """Band plus embedded semilattice do not form a valid transversal pair."""


class TransversalMismatch(SemigroupError):
    """The identification between two transversal copies is not an isomorphism."""


class ActionLawViolation(SemigroupError):
    """A semigroup action law fails."""

    def __init__(self, law: str, witness):
        self.law = law
        self.witness = witness
        super().__init__(f"action law {law} fails at {witness}")


class ConditionViolation(SemigroupError):
    """A numbered hypothesis of a construction fails."""

    def __init__(self, number: int, witness):
        self.number = number
        self.witness = witness
        super().__init__(f"condition ({number}) fails at {witness}")


class IsoFailed(SemigroupError):
    """A guaranteed isomorphism check failed."""

    def __init__(self, witness):
        self.witness = witness
        super().__init__(f"isomorphism check failed: {witness}")


class InvariantBroken(SemigroupError):
    """A proved consequence failed to hold; this signals a bug or a false premise."""


# --- files and catalog -------------------------------------------------------


class SchemaError(SemigroupError):
    """An input file does not match the expected JSON schema."""

    def __init__(self, path, detail: str):
        self.path = path
        self.detail = detail
        super().__init__(f"{path}: {detail}")


class UnknownKey(SemigroupError):
    """No catalog family with this name."""


class ParamOutOfRange(SemigroupError):
    """Catalog family parameters outside the documented range."""
