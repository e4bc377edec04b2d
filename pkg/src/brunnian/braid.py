"""Sphere braid words and the exact word problem for the punctured sphere.

A braid word on n strands is a freely reduced sequence of signed
generator indices: ``+i`` is the half twist swapping punctures i and
i+1, ``-i`` its inverse (indices 1..n-1).

Word problem
------------
The fundamental group of the n-punctured sphere is free of rank n-1 on
loops x_1..x_{n-1} around the first n-1 punctures; the loop around the
last puncture is eliminated through x_n = (x_1...x_{n-1})^-1.  Each
generator acts by the Artin rule (x_i -> x_i x_{i+1} x_i^-1,
x_{i+1} -> x_i), with the eliminated generator substituted when the
last half twist is applied.  The action composes along the word as
action(uv) = action(u) after action(v).

A puncture-fixing mapping class of the sphere with n >= 4 punctures is
trivial exactly when its permutation is trivial and its action on the
fundamental group is an inner automorphism; innerness is decided
exactly by freegroup inner detection.  For six punctures a nontrivial
integral homology action of the letterwise lift to the genus-2 twist
generators already forces nontriviality (the lift kernel contains only
the identity and the hyperelliptic involution, whose homology actions
are +-identity), which the triviality test uses as a cheap negative
screen before falling back to the free-group engine.

Brunnian membership
-------------------
Forgetting a strand is realised on words by a left-to-right sweep that
tracks the geometric position of the forgotten strand, drops every
crossing adjacent to it and shifts higher indices down.  A word is
Brunnian when every single-strand removal yields a trivial mapping
class.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from . import homology
from .budget import LetterBudget
from .certificate import (
    Certificate,
    JUSTIFY_NONE,
    JUSTIFY_SPHERE_BRUNNIAN,
    STATUS_PSEUDO_ANOSOV,
    STATUS_TRIVIAL,
    STATUS_UNDETERMINED,
    render_letters,
)
from .errors import LetterBudgetExceeded, PreconditionError
from .freegroup import (
    FreeAutomorphism,
    FreeWord,
    Letters,
    _apply,
    _inner_conjugator,
    _invert,
    _reduce,
)


@dataclass(frozen=True)
class Permutation:
    """Bijection of {1..n} stored as its image table."""

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(self.images)
        object.__setattr__(self, "images", images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise PreconditionError("image table is not a bijection of 1..n")

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def is_identity(self) -> bool:
        return all(v == i + 1 for i, v in enumerate(self.images))

    def fixes(self, i: int) -> bool:
        return self.images[i - 1] == i


@dataclass(frozen=True)
class BraidWord:
    """Freely reduced word in the sphere braid generators on n strands."""

    n: int
    letters: Letters = ()

    def __post_init__(self):
        if self.n < 2:
            raise PreconditionError("a braid needs at least two strands")
        letters = tuple(self.letters)
        object.__setattr__(self, "letters", letters)
        prev = 0
        for a in letters:
            if not 1 <= abs(a) <= self.n - 1:
                raise PreconditionError(
                    f"generator {a} out of range for {self.n} strands")
            if a == -prev:
                raise ValueError(
                    "word is not freely reduced; use BraidWord.from_letters")
            prev = a

    @classmethod
    def from_letters(cls, n: int, letters: Iterable[int]) -> "BraidWord":
        """Build a word from raw letters, cancelling adjacent inverse pairs.

        Reduction does not change the mapping class the word represents.
        """
        letters = tuple(letters)
        for a in letters:
            if not isinstance(a, int) or not 1 <= abs(a) <= n - 1:
                raise PreconditionError(
                    f"generator {a} out of range for {n} strands")
        return cls(n, _reduce(letters))

    @classmethod
    def identity(cls, n: int) -> "BraidWord":
        return cls(n, ())

    def concat(self, other: "BraidWord") -> "BraidWord":
        if self.n != other.n:
            raise PreconditionError("strand count mismatch")
        return BraidWord.from_letters(self.n, self.letters + other.letters)

    __mul__ = concat

    def invert(self) -> "BraidWord":
        return BraidWord(self.n, _invert(self.letters))

    def power(self, k: int) -> "BraidWord":
        base = self if k >= 0 else self.invert()
        out = BraidWord.identity(self.n)
        for _ in range(abs(k)):
            out = out * base
        return out

    def __len__(self) -> int:
        return len(self.letters)

    def permutation(self) -> Permutation:
        """Puncture permutation induced by the word (start strand -> end position)."""
        at = list(range(self.n + 1))  # at[pos] = strand currently at pos
        for a in self.letters:
            i = abs(a)
            at[i], at[i + 1] = at[i + 1], at[i]
        out = [0] * (self.n + 1)
        for pos in range(1, self.n + 1):
            out[at[pos]] = pos
        return Permutation(tuple(out[1:]))

    def remove_strand(self, i: int) -> "BraidWord":
        """Forget strand i, realising the strand-removal homomorphism on words.

        Requires permutation(self) to fix i.  The sweep keeps the
        current position of the forgotten strand, drops the crossings
        that involve it and renumbers crossings to its right.
        """
        if not 1 <= i <= self.n:
            raise PreconditionError(f"strand {i} out of range")
        if not self.permutation().fixes(i):
            raise PreconditionError(
                f"strand {i} is not fixed by the word's permutation")
        pos = i
        out: list[int] = []
        for a in self.letters:
            j = abs(a)
            if j == pos:
                pos += 1
            elif j == pos - 1:
                pos -= 1
            elif j > pos:
                out.append(j - 1 if a > 0 else -(j - 1))
            else:
                out.append(a)
        assert pos == i, "strand tracking must return to its start"
        return BraidWord.from_letters(self.n - 1, out)


def commutator(u: BraidWord, v: BraidWord) -> BraidWord:
    return u * v * u.invert() * v.invert()


# ---------------------------------------------------------------------------
# the action on the fundamental group of the punctured sphere
# ---------------------------------------------------------------------------

def _letter_images(n: int, a: int) -> dict[int, Letters]:
    """Images of the generators moved by one braid letter (rank n-1 table)."""
    i = abs(a)
    r = n - 1
    if i < r:
        if a > 0:
            return {i: (i, i + 1, -i), i + 1: (i,)}
        return {i: (i + 1,), i + 1: (-(i + 1), i, i + 1)}
    # Last half twist: the eliminated loop substitutes in.
    if a > 0:
        return {r: tuple([-j for j in range(r - 1, 0, -1)] + [-r])}
    return {r: tuple([-r] + [-j for j in range(r - 1, 0, -1)])}


def _action_table(n: int, letters: Iterable[int],
                  budget: LetterBudget) -> list[Letters]:
    """Generator images of the composed action, letters applied left to right."""
    r = n - 1
    images: list[Letters] = [(i,) for i in range(1, r + 1)]
    for a in letters:
        moved = _letter_images(n, a)
        inv_cache: dict[int, Letters] = {}
        updated = list(images)
        for g, word in moved.items():
            if len(word) == 1 and word[0] > 0:
                updated[g - 1] = images[word[0] - 1]
            else:
                updated[g - 1] = _apply(images, word, budget, inv_cache)
        images = updated
    return images


def sphere_action(word: BraidWord,
                  budget: LetterBudget | None = None) -> FreeAutomorphism:
    """Action of the word on the rank n-1 fundamental group of the sphere.

    Homomorphic orientation: sphere_action(u * v) equals
    sphere_action(u).compose(sphere_action(v)).
    """
    if word.n < 3:
        raise PreconditionError("the action needs at least three punctures")
    if budget is None:
        budget = LetterBudget()
    table = _action_table(word.n, word.letters, budget)
    rank = word.n - 1
    return FreeAutomorphism([FreeWord(rank, t) for t in table])


def is_trivial_sphere(word: BraidWord,
                      budget: LetterBudget | None = None) -> bool:
    """Exact triviality in the mapping class group of the n-punctured sphere.

    True exactly when the puncture permutation is trivial and the
    action on the fundamental group is inner.  Needs n >= 4 (with three
    punctures the group is finite and out of scope here).  May raise
    LetterBudgetExceeded if the action outgrows the budget.
    """
    if word.n < 4:
        raise PreconditionError("triviality testing needs at least four punctures")
    if budget is None:
        budget = LetterBudget()
    if not word.permutation().is_identity():
        return False
    if word.n == 6:
        # Cheap negative screen through the genus-2 double cover: the
        # letterwise lift of a trivial word has homology action +-I.
        lift = homology.rho(word.letters)
        if not (lift.is_identity or lift.is_neg_identity):
            return False
    table = _action_table(word.n, word.letters, budget)
    return _inner_conjugator(word.n - 1, table) is not None


# ---------------------------------------------------------------------------
# Brunnian membership and certification
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BrunnianReport:
    """Outcome of the strand-removal checks for one word.

    Verdict values: True/False are decided; None means the verdict was
    not reached (letter-budget abort, or a strand not fixed so never
    evaluated).  ``brunnian`` is the conjunction of the per-strand
    verdicts; ``trivial`` is the triviality verdict of the word itself.
    """

    n: int
    per_strand: tuple[Optional[bool], ...]
    brunnian: Optional[bool]
    trivial: Optional[bool]

    def __post_init__(self):
        if len(self.per_strand) != self.n:
            raise PreconditionError("need one verdict per strand")
        if self.brunnian != _fold_verdicts(self.per_strand):
            raise PreconditionError(
                "overall verdict must be the conjunction of the strand verdicts")


def _fold_verdicts(verdicts: Iterable[Optional[bool]]) -> Optional[bool]:
    result: Optional[bool] = True
    for v in verdicts:
        if v is False:
            return False
        if v is None:
            result = None
    return result


def brunnian_check(word: BraidWord,
                   budget: LetterBudget | None = None) -> BrunnianReport:
    """Evaluate every forget-strand kernel condition plus own triviality.

    Accepts n >= 4; certification (see certify_pa_sphere) additionally
    requires n >= 5.  A word with a nontrivial permutation is immediately
    not Brunnian: moved strands report False, fixed strands stay
    unevaluated.  With four strands the removed words live on the
    three-punctured sphere, whose puncture-fixing mapping class group is
    trivial, so purity alone decides those strands.
    """
    n = word.n
    if n < 4:
        raise PreconditionError("Brunnian checks need at least four strands")
    if budget is None:
        budget = LetterBudget()
    perm = word.permutation()
    if not perm.is_identity():
        per = tuple(None if perm.fixes(i) else False for i in range(1, n + 1))
        return BrunnianReport(n, per, brunnian=False, trivial=False)
    per_strand: list[Optional[bool]] = []
    for i in range(1, n + 1):
        removed = word.remove_strand(i)
        if n - 1 == 3:
            per_strand.append(True)
            continue
        try:
            per_strand.append(is_trivial_sphere(removed, budget))
        except LetterBudgetExceeded:
            per_strand.append(None)
    try:
        trivial: Optional[bool] = is_trivial_sphere(word, budget)
    except LetterBudgetExceeded:
        trivial = None
    return BrunnianReport(n, tuple(per_strand),
                          brunnian=_fold_verdicts(per_strand), trivial=trivial)


def certify_pa_sphere(word: BraidWord,
                      budget: LetterBudget | None = None,
                      input_text: str | None = None) -> Certificate:
    """Certificate for a sphere word: every nontrivial Brunnian mapping
    class of the sphere with n >= 5 punctures is pseudo-Anosov.

    Verdicts that the budget prevented stay null and the conclusion is
    undetermined; aborts are recorded in-band, never raised.
    """
    if word.n < 5:
        raise PreconditionError("certification needs at least five punctures")
    if budget is None:
        budget = LetterBudget()
    report = brunnian_check(word, budget)
    if report.trivial is True:
        status, justification = STATUS_TRIVIAL, JUSTIFY_NONE
    elif report.brunnian is True and report.trivial is False:
        status, justification = STATUS_PSEUDO_ANOSOV, JUSTIFY_SPHERE_BRUNNIAN
    else:
        status, justification = STATUS_UNDETERMINED, JUSTIFY_NONE
    perm = word.permutation()
    checks = {
        "pure": perm.is_identity(),
        "trivial": report.trivial,
        "brunnian_per_strand": list(report.per_strand),
        "brunnian": report.brunnian,
    }
    word_text = render_letters("s", word.letters)
    return Certificate(
        surface=("sphere", word.n),
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


def brunnian_example(n: int) -> BraidWord:
    """Nested commutator of sixth powers, Brunnian on n >= 5 strands.

    [s1^6, [s2^6, [... [s_{n-2}^6, s_{n-1}^6] ...]]], fully expanded and
    word-level reduced.  Forgetting any strand collapses it to the
    identity word; sixth powers are used so the homology action of the
    genus-2 lift (n = 6) dies mod 3.
    """
    if n < 5:
        raise PreconditionError("the example family starts at five strands")
    word = BraidWord(n, (n - 1,) * 6)
    for i in range(n - 2, 0, -1):
        word = commutator(BraidWord(n, (i,) * 6), word)
    return word
