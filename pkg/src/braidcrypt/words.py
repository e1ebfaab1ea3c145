"""Words over the Artin generators of the braid group B_n.

A letter is a nonzero signed integer: ``i`` stands for the generator a_i and
``-i`` for its inverse. Words are plain values; concatenation never rewrites,
and deciding equality is left to :mod:`braidcrypt.garside`.

Permutations follow a single convention throughout the package: ``perm[i-1]``
is the final position of the strand that starts at position ``i``, and the
transpositions of a word act left to right.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import BadParameter, MalformedWord, NotPositive, NotSimple, StrandMismatch


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.strands < 2:
            raise BadParameter(f"need at least 2 strands, got {self.strands}")
        letters = tuple(int(x) for x in self.letters)
        for x in letters:
            if x == 0 or abs(x) >= self.strands:
                raise MalformedWord(f"letter {x} out of range for B_{self.strands}")
        object.__setattr__(self, "letters", letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __mul__(self, other: BraidWord) -> BraidWord:
        return multiply(self, other)

    def __pow__(self, exponent: int) -> BraidWord:
        if exponent < 0:
            return invert(self) ** -exponent
        return BraidWord(self.strands, self.letters * exponent)

    def __str__(self) -> str:
        return format_word(self)

    @property
    def is_positive(self) -> bool:
        return all(x > 0 for x in self.letters)


@dataclass(frozen=True)
class SimpleBraid:
    """A positive left divisor of Delta, stored as its permutation."""

    strands: int
    perm: tuple[int, ...]

    def __post_init__(self):
        perm = tuple(int(x) for x in self.perm)
        if len(perm) != self.strands or sorted(perm) != list(range(1, self.strands + 1)):
            raise BadParameter(f"{perm} is not a permutation of 1..{self.strands}")
        object.__setattr__(self, "perm", perm)

    @classmethod
    def identity(cls, n: int) -> SimpleBraid:
        return cls(n, tuple(range(1, n + 1)))

    @classmethod
    def delta(cls, n: int) -> SimpleBraid:
        return cls(n, tuple(range(n, 0, -1)))

    @property
    def is_identity(self) -> bool:
        return self.perm == tuple(range(1, self.strands + 1))

    @property
    def is_delta(self) -> bool:
        return self.perm == tuple(range(self.strands, 0, -1))

    def length(self) -> int:
        """Number of crossings, i.e. inversions of the permutation."""
        p = self.perm
        return sum(1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j])


def parse_word(text: str, n: int) -> BraidWord:
    """Parse whitespace-separated signed generator indices, e.g. ``"1 -2 3"``."""
    try:
        letters = tuple(int(tok) for tok in text.split())
    except ValueError as exc:
        raise MalformedWord(f"cannot parse word {text!r}") from exc
    return BraidWord(n, letters)


def format_word(w: BraidWord) -> str:
    return " ".join(str(x) for x in w.letters)


def identity(n: int) -> BraidWord:
    return BraidWord(n, ())


def generator(n: int, i: int) -> BraidWord:
    return BraidWord(n, (i,))


def multiply(w1: BraidWord, w2: BraidWord) -> BraidWord:
    if w1.strands != w2.strands:
        raise StrandMismatch(f"B_{w1.strands} word times B_{w2.strands} word")
    return BraidWord(w1.strands, w1.letters + w2.letters)


def product(words, n: int) -> BraidWord:
    letters: list[int] = []
    for w in words:
        if w.strands != n:
            raise StrandMismatch(f"expected B_{n}, got B_{w.strands}")
        letters.extend(w.letters)
    return BraidWord(n, tuple(letters))


def invert(w: BraidWord) -> BraidWord:
    return BraidWord(w.strands, tuple(-x for x in reversed(w.letters)))


def fundamental_braid(n: int) -> BraidWord:
    """Delta_n built by the recursion Delta_n = Delta_{n-1} a_{n-1} ... a_1."""
    if n < 2:
        raise BadParameter(f"need at least 2 strands, got {n}")
    letters: list[int] = []
    for j in range(2, n + 1):
        letters.extend(range(j - 1, 0, -1))
    return BraidWord(n, tuple(letters))


def tau(w: BraidWord) -> BraidWord:
    """Conjugation by Delta: a_i^{+-1} -> a_{n-i}^{+-1}."""
    n = w.strands
    return BraidWord(n, tuple((n - abs(x)) * (1 if x > 0 else -1) for x in w.letters))


def require_positive(w: BraidWord) -> BraidWord:
    if not w.is_positive:
        raise NotPositive(f"word {format_word(w)!r} contains inverse letters")
    return w


def word_to_simple(w: BraidWord) -> SimpleBraid:
    """Permutation of a positive word that crosses each pair of strands at most once."""
    require_positive(w)
    n = w.strands
    # strand_at[p] is the starting position of the strand now at position p
    strand_at = list(range(n))
    for i in w.letters:
        a, b = strand_at[i - 1], strand_at[i]
        if a > b:
            raise NotSimple(f"word {format_word(w)!r} crosses strands {b + 1},{a + 1} twice")
        strand_at[i - 1], strand_at[i] = b, a
    perm = [0] * n
    for pos, start in enumerate(strand_at):
        perm[start] = pos + 1
    return SimpleBraid(n, tuple(perm))


def simple_to_word(a: SimpleBraid) -> BraidWord:
    """Canonical positive word: a product of descending runs R_2 R_3 ... R_n.

    R_j = a_{j-1} a_{j-2} ... a_{j-c} carries the strand starting at ``j`` down to
    its final place among the first ``j`` positions. Delta gets exactly the word
    of :func:`fundamental_braid`.
    """
    n = a.strands
    perm = [p - 1 for p in a.perm]
    runs: list[list[int]] = []
    for j in range(n - 1, 0, -1):
        # perm currently fixes every position > j; peel the run that moves strand j.
        target = perm[j]
        c = j - target
        runs.append(list(range(j, j - c, -1)))
        # undo the run: positions target..j-1 shift down, j -> target is reversed
        perm = [(p - 1 if target < p <= j else j if p == target else p) for p in perm]
    letters = [x for run in reversed(runs) for x in run]
    return BraidWord(n, tuple(letters))


def random_word(n: int, length: int, rng: random.Random, positive: bool = False) -> BraidWord:
    letters = []
    for _ in range(length):
        i = rng.randint(1, n - 1)
        if not positive and rng.random() < 0.5:
            i = -i
        letters.append(i)
    return BraidWord(n, tuple(letters))
