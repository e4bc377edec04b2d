"""Exact arithmetic in finite-rank free groups.

Words are tuples of nonzero signed integers: ``+i`` denotes the i-th
generator (1-based), ``-i`` its inverse.  Every stored word is freely
reduced, i.e. contains no adjacent pair ``a, -a``.  Free reduction of a
raw letter sequence is done with a single stack pass, so all word
operations here are linear in their input size.

Automorphisms are generator-image tables.  Composition follows the
function convention ``(phi.compose(psi))(w) == phi.apply(psi.apply(w))``.

The inner-automorphism detector is the triviality oracle behind the
mapping-class word problem: for rank at least two a free group has
trivial center, so an inner automorphism is conjugation by exactly one
element, and that element is recovered exactly or ruled out.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .budget import LetterBudget
from .errors import PreconditionError

Letters = tuple[int, ...]


# ---------------------------------------------------------------------------
# raw-tuple primitives
#
# These operate on plain tuples so the braid engine can run its hot loops
# without re-validating intermediate words. Public classes wrap them.
# ---------------------------------------------------------------------------

def _reduce(letters: Iterable[int]) -> Letters:
    out: list[int] = []
    for a in letters:
        if out and out[-1] == -a:
            out.pop()
        else:
            out.append(a)
    return tuple(out)


def _invert(letters: Sequence[int]) -> Letters:
    return tuple(-a for a in reversed(letters))


def _concat(u: Sequence[int], v: Sequence[int]) -> Letters:
    # Both inputs reduced: cancellation can only happen at the seam.
    out = list(u)
    i = 0
    n = len(v)
    while out and i < n and out[-1] == -v[i]:
        out.pop()
        i += 1
    out.extend(v[i:])
    return tuple(out)


def _cyclic_split(letters: Sequence[int]) -> tuple[Letters, Letters]:
    """Split a reduced word as p * core * p^-1 with core cyclically reduced."""
    i, j = 0, len(letters) - 1
    while i < j and letters[i] == -letters[j]:
        i += 1
        j -= 1
    return tuple(letters[:i]), tuple(letters[i:j + 1])


def _apply(images: Sequence[Letters], letters: Sequence[int],
           budget: LetterBudget | None = None,
           inv_cache: dict[int, Letters] | None = None) -> Letters:
    """Substitute ``images[i-1]`` for letter ``i`` and freely reduce.

    Charges the budget with the length of every substituted image, i.e.
    the pre-cancellation output size; this is the quantity that blows up
    on adversarial inputs.
    """
    if inv_cache is None:
        inv_cache = {}
    out: list[int] = []
    for a in letters:
        if a > 0:
            img = images[a - 1]
        else:
            img = inv_cache.get(a)
            if img is None:
                img = _invert(images[-a - 1])
                inv_cache[a] = img
        if budget is not None:
            budget.charge(len(img))
        i = 0
        n = len(img)
        while out and i < n and out[-1] == -img[i]:
            out.pop()
            i += 1
        out.extend(img[i:])
    return tuple(out)


def _inner_conjugator(rank: int, images: Sequence[Letters]) -> Optional[Letters]:
    """Conjugator w with images[i-1] == w x_i w^-1 for all i, or None.

    Strategy: cyclically reduce the image of x_1; its core must be x_1
    itself, which pins the conjugator to p * x_1^k.  The exponent k is
    read off the image of x_2 by prefix matching, then the candidate is
    verified against every generator.  No unbounded search happens.
    """
    if rank < 2:
        raise PreconditionError("inner detection requires rank >= 2")
    p, core = _cyclic_split(images[0])
    if core != (1,):
        return None
    u = _concat(_concat(_invert(p), images[1]), p)
    # u must have the shape x_1^k x_2 x_1^-k, which is already reduced.
    if u == (2,):
        k = 0
    else:
        if not u or abs(u[0]) != 1:
            return None
        step = 1 if u[0] > 0 else -1
        run = 0
        while run < len(u) and u[run] == step:
            run += 1
        if u != tuple([step] * run + [2] + [-step] * run):
            return None
        k = step * run
    w = _concat(p, (1,) * k if k >= 0 else (-1,) * (-k))
    w_inv = _invert(w)
    for g in range(1, rank + 1):
        if images[g - 1] != _concat(_concat(w, (g,)), w_inv):
            return None
    return w


# ---------------------------------------------------------------------------
# public value types
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FreeWord:
    """A freely reduced word in the free group of the given rank."""

    rank: int
    letters: Letters = ()

    def __post_init__(self):
        if self.rank < 1:
            raise PreconditionError("rank must be a positive integer")
        letters = tuple(self.letters)
        object.__setattr__(self, "letters", letters)
        prev = 0
        for a in letters:
            if not 1 <= abs(a) <= self.rank:
                raise PreconditionError(
                    f"letter {a} out of range for rank {self.rank}")
            if a == -prev:
                raise ValueError("word is not freely reduced; use FreeWord.reduce")
            prev = a

    @classmethod
    def reduce(cls, rank: int, letters: Iterable[int]) -> "FreeWord":
        """Freely reduce a raw letter sequence. Idempotent."""
        letters = tuple(letters)
        for a in letters:
            if not isinstance(a, int) or not 1 <= abs(a) <= rank:
                raise PreconditionError(f"letter {a} out of range for rank {rank}")
        return cls(rank, _reduce(letters))

    @classmethod
    def identity(cls, rank: int) -> "FreeWord":
        return cls(rank, ())

    @classmethod
    def generator(cls, rank: int, index: int, sign: int = 1) -> "FreeWord":
        if sign not in (1, -1):
            raise PreconditionError("sign must be +1 or -1")
        return cls(rank, (sign * index,))

    def concat(self, other: "FreeWord") -> "FreeWord":
        if self.rank != other.rank:
            raise PreconditionError("rank mismatch")
        return FreeWord(self.rank, _concat(self.letters, other.letters))

    __mul__ = concat

    def invert(self) -> "FreeWord":
        return FreeWord(self.rank, _invert(self.letters))

    def power(self, k: int) -> "FreeWord":
        base = self if k >= 0 else self.invert()
        out: Letters = ()
        for _ in range(abs(k)):
            out = _concat(out, base.letters)
        return FreeWord(self.rank, out)

    def cyclic_reduce(self) -> tuple["FreeWord", "FreeWord"]:
        """Return (p, core) with self == p * core * p^-1, core cyclically reduced."""
        p, core = _cyclic_split(self.letters)
        return FreeWord(self.rank, p), FreeWord(self.rank, core)

    def __len__(self) -> int:
        return len(self.letters)

    def __bool__(self) -> bool:
        return bool(self.letters)

    def __repr__(self) -> str:
        return f"FreeWord(rank={self.rank}, letters={self.letters})"


class FreeAutomorphism:
    """Automorphism of a free group given by its generator images.

    If ``inverse_images`` is supplied the table is verified to compose
    to the identity on both sides, and the automorphism carries its
    verified inverse.
    """

    __slots__ = ("rank", "images", "_raw", "_inv_cache", "_inverse")

    def __init__(self, images: Sequence[FreeWord],
                 inverse_images: Sequence[FreeWord] | None = None):
        images = tuple(images)
        if not images:
            raise PreconditionError("automorphism needs at least one generator image")
        rank = len(images)
        for im in images:
            if im.rank != rank:
                raise PreconditionError("all images must share the table rank")
        self.rank = rank
        self.images = images
        self._raw = tuple(im.letters for im in images)
        self._inv_cache: dict[int, Letters] = {}
        self._inverse: "FreeAutomorphism | None" = None
        if inverse_images is not None:
            inverse = FreeAutomorphism(inverse_images)
            if not (self.compose(inverse).is_identity()
                    and inverse.compose(self).is_identity()):
                raise PreconditionError("inverse table does not compose to identity")
            self._inverse = inverse
            inverse._inverse = self

    @classmethod
    def identity(cls, rank: int) -> "FreeAutomorphism":
        gens = [FreeWord.generator(rank, i) for i in range(1, rank + 1)]
        aut = cls(gens)
        aut._inverse = aut
        return aut

    @classmethod
    def conjugation(cls, w: FreeWord) -> "FreeAutomorphism":
        """The inner automorphism x -> w x w^-1."""
        rank = w.rank
        if rank < 1:
            raise PreconditionError("rank must be positive")
        w_inv = w.invert()
        images = [w * FreeWord.generator(rank, i) * w_inv
                  for i in range(1, rank + 1)]
        aut = cls(images)
        inv = cls([w_inv * FreeWord.generator(rank, i) * w
                   for i in range(1, rank + 1)])
        aut._inverse = inv
        inv._inverse = aut
        return aut

    @property
    def verified_invertible(self) -> bool:
        return self._inverse is not None

    @property
    def inverse(self) -> "FreeAutomorphism | None":
        return self._inverse

    def apply(self, word: FreeWord, budget: LetterBudget | None = None) -> FreeWord:
        if word.rank != self.rank:
            raise PreconditionError("rank mismatch")
        if budget is None:
            budget = LetterBudget()
        return FreeWord(self.rank,
                        _apply(self._raw, word.letters, budget, self._inv_cache))

    def compose(self, other: "FreeAutomorphism",
                budget: LetterBudget | None = None) -> "FreeAutomorphism":
        """Return self after other: (self.compose(other))(w) = self(other(w))."""
        if other.rank != self.rank:
            raise PreconditionError("rank mismatch")
        if budget is None:
            budget = LetterBudget()
        images = [FreeWord(self.rank,
                           _apply(self._raw, im, budget, self._inv_cache))
                  for im in other._raw]
        return FreeAutomorphism(images)

    def inner_conjugator(self) -> Optional[FreeWord]:
        """The unique w with self == conjugation(w), or None if not inner."""
        found = _inner_conjugator(self.rank, self._raw)
        if found is None:
            return None
        return FreeWord(self.rank, found)

    def is_identity(self) -> bool:
        return all(im == (i + 1,) for i, im in enumerate(self._raw))

    def __eq__(self, other) -> bool:
        if not isinstance(other, FreeAutomorphism):
            return NotImplemented
        return self.rank == other.rank and self._raw == other._raw

    __hash__ = None  # mutable caches; equality is by table

    def __repr__(self) -> str:
        body = ", ".join(f"x{i + 1}->{im}" for i, im in enumerate(self._raw))
        return f"FreeAutomorphism({body})"
