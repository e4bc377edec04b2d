"""Words in the five genus-2 twist generators and the two-sided word problem.

The closed genus-2 surface double covers the sphere, branched over six
points; the covering projection sends the i-th standard twist generator
to the i-th sphere half twist, letterwise on words.  The kernel of the
induced map on mapping class groups has order two, generated by the
hyperelliptic involution, whose homology action is minus the identity.
A twist word is therefore trivial exactly when its projection is
trivial on the sphere and its integral homology action is the identity;
the homology side separates the identity from the involution.

The involution is represented by the standard palindromic word
D1 D2 D3 D4 D5 D5 D4 D3 D2 D1.  The word itself is never trusted: both
defining properties (trivial projection, homology action -I) are
machine-checked the first time it is used.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from . import homology
from .braid import BraidWord, BrunnianReport, brunnian_check, is_trivial_sphere
from .budget import LetterBudget
from .certificate import (
    Certificate,
    JUSTIFY_CHARPOLY,
    JUSTIFY_GENUS2_BRUNNIAN,
    JUSTIFY_NONE,
    STATUS_PSEUDO_ANOSOV,
    STATUS_TRIVIAL,
    STATUS_UNDETERMINED,
    render_letters,
)
from .errors import LetterBudgetExceeded, PreconditionError
from .freegroup import Letters, _invert, _reduce

GENERATOR_COUNT = 5


@dataclass(frozen=True)
class TwistWord:
    """Freely reduced word in the five standard genus-2 twist generators."""

    letters: Letters = ()

    def __post_init__(self):
        letters = tuple(self.letters)
        object.__setattr__(self, "letters", letters)
        prev = 0
        for a in letters:
            if not 1 <= abs(a) <= GENERATOR_COUNT:
                raise PreconditionError(f"twist generator {a} out of range")
            if a == -prev:
                raise ValueError(
                    "word is not freely reduced; use TwistWord.from_letters")
            prev = a

    @classmethod
    def from_letters(cls, letters: Iterable[int]) -> "TwistWord":
        letters = tuple(letters)
        for a in letters:
            if not isinstance(a, int) or not 1 <= abs(a) <= GENERATOR_COUNT:
                raise PreconditionError(f"twist generator {a} out of range")
        return cls(_reduce(letters))

    @classmethod
    def identity(cls) -> "TwistWord":
        return cls(())

    def concat(self, other: "TwistWord") -> "TwistWord":
        return TwistWord.from_letters(self.letters + other.letters)

    __mul__ = concat

    def invert(self) -> "TwistWord":
        return TwistWord(_invert(self.letters))

    def power(self, k: int) -> "TwistWord":
        base = self if k >= 0 else self.invert()
        out = TwistWord.identity()
        for _ in range(abs(k)):
            out = out * base
        return out

    def __len__(self) -> int:
        return len(self.letters)


def commutator(u: TwistWord, v: TwistWord) -> TwistWord:
    return u * v * u.invert() * v.invert()


def project(word: TwistWord) -> BraidWord:
    """Letterwise image on the six-strand sphere braid generators."""
    return BraidWord(6, word.letters)


_INVOLUTION_LETTERS = (1, 2, 3, 4, 5, 5, 4, 3, 2, 1)
_involution: TwistWord | None = None


def involution_word() -> TwistWord:
    """The hyperelliptic involution word, verified before first use.

    Checks that the projection is trivial on the sphere and that the
    integral homology action is minus the identity; either failure
    would mean the twist conventions are inconsistent, so it is treated
    as an internal error rather than a user-facing one.
    """
    global _involution
    if _involution is None:
        word = TwistWord(_INVOLUTION_LETTERS)
        if not homology.rho(word).is_neg_identity:
            raise AssertionError("involution word must act as -I on homology")
        if not is_trivial_sphere(project(word)):
            raise AssertionError("involution word must project to a trivial class")
        _involution = word
    return _involution


def is_trivial_genus2(word: TwistWord,
                      budget: LetterBudget | None = None) -> bool:
    """Exact triviality in the genus-2 mapping class group.

    True exactly when the projection is trivial on the six-punctured
    sphere and the integral homology action is the identity.  The
    homology side is evaluated first: it is cheap and already rules out
    the involution coset.
    """
    if budget is None:
        budget = LetterBudget()
    if not homology.rho(word).is_identity:
        return False
    return is_trivial_sphere(project(word), budget)


def brunnian_genus2(word: TwistWord,
                    budget: LetterBudget | None = None) -> BrunnianReport:
    """Brunnian membership of the projection (the genus-2 Brunnian subgroup
    is the full preimage of the sphere one, so no lift-side check is needed)."""
    return brunnian_check(project(word), budget)


@dataclass(frozen=True)
class MembershipReport:
    """Verdicts for membership in the Brunnian-and-mod-3-kernel subgroup."""

    brunnian: BrunnianReport
    rho_mod3_identity: bool
    member: Optional[bool]
    trivial: Optional[bool]


def membership_theorem12(word: TwistWord,
                         budget: LetterBudget | None = None) -> MembershipReport:
    """Membership in the intersection of the Brunnian subgroup with the
    kernel of the mod-3 homology representation.

    Member exactly when the projection passes every strand check and
    the mod-3 homology action is the identity.  Budget aborts leave the
    affected verdicts None.
    """
    if budget is None:
        budget = LetterBudget()
    report = brunnian_genus2(word, budget)
    rho3_identity = homology.rho_mod(word, 3).is_identity
    if not rho3_identity or report.brunnian is False:
        member: Optional[bool] = False
    elif report.brunnian is None:
        member = None
    else:
        member = True
    if not homology.rho(word).is_identity:
        trivial: Optional[bool] = False
    else:
        # Homology is the identity, so triviality is the projection's.
        trivial = report.trivial
    return MembershipReport(report, rho3_identity, member, trivial)


def certify_pa_genus2(word: TwistWord,
                      budget: LetterBudget | None = None,
                      input_text: str | None = None) -> Certificate:
    """Certificate for a genus-2 twist word.

    Nontrivial members of the Brunnian-and-mod-3-kernel subgroup are
    pseudo-Anosov; failing that, an irreducible non-cyclotomic
    characteristic polynomial of the integral homology action still
    certifies (the homological criterion), and anything else is
    undetermined.
    """
    if budget is None:
        budget = LetterBudget()
    membership = membership_theorem12(word, budget)
    action = homology.rho(word)
    poly = homology.charpoly(action)
    criterion = homology.casson_bleiler(poly)
    if membership.trivial is True:
        status, justification = STATUS_TRIVIAL, JUSTIFY_NONE
    elif membership.member is True and membership.trivial is False:
        status, justification = STATUS_PSEUDO_ANOSOV, JUSTIFY_GENUS2_BRUNNIAN
    elif criterion == "pa_certified":
        status, justification = STATUS_PSEUDO_ANOSOV, JUSTIFY_CHARPOLY
    else:
        status, justification = STATUS_UNDETERMINED, JUSTIFY_NONE
    projection = project(word)
    perm = projection.permutation()
    report = membership.brunnian
    checks = {
        "pure": perm.is_identity(),
        "trivial": membership.trivial,
        "brunnian_per_strand": list(report.per_strand),
        "brunnian": report.brunnian,
        "rho_mod3_identity": membership.rho_mod3_identity,
        "rho_integral": [[str(x) for x in row] for row in action.rows],
        "charpoly": [str(c) for c in poly.coefficients],
        "casson_bleiler": criterion,
    }
    word_text = render_letters("d", word.letters)
    return Certificate(
        surface=("genus2",),
        input_text=word_text if input_text is None else input_text,
        word_text=word_text,
        length=len(word.letters),
        permutation=perm.images,
        checks=checks,
        status=status,
        justification=justification,
        letters_used=budget.used,
        letter_cap=budget.cap,
        aborted=budget.exhausted,
    )
