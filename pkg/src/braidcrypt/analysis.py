"""Exchange-decomposition and conjugacy-search instances, brute-force solvers,
and the two reductions between the problems.

The solvers are exact at desk scale and serve as oracles in tests. They
enumerate braid *elements* (deduplicated by normal form) rather than words,
breadth-first by word length.

An exchange-decomposition instance asks for ``s, t`` with ``s t = U`` and
``t s = V``. Given ``s`` the cofactor is forced, ``t = s^{-1} U``, so the
search only ranges over ``s``. Conjugacy search asks for ``s`` with
``y = s x s^{-1}``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable

from .errors import BadParameter, ReductionFailed, StrandMismatch
from .garside import (
    NormalForm,
    left_normal_form,
    nf_identity,
    nf_inverse,
    nf_multiply,
    nf_to_word,
    words_equal,
)
from .words import BraidWord, invert, multiply, random_word


@dataclass(frozen=True)
class EdpInstance:
    U: BraidWord
    V: BraidWord
    planted: tuple[BraidWord, BraidWord] | None = None

    def __post_init__(self):
        if self.U.strands != self.V.strands:
            raise StrandMismatch("U and V live in different braid groups")
        if self.planted is not None:
            s, t = self.planted
            if not (words_equal(multiply(s, t), self.U) and words_equal(multiply(t, s), self.V)):
                raise BadParameter("planted pair does not satisfy s t = U, t s = V")

    @property
    def n(self) -> int:
        return self.U.strands


@dataclass(frozen=True)
class CspInstance:
    x: BraidWord
    y: BraidWord
    planted: BraidWord | None = None

    def __post_init__(self):
        if self.x.strands != self.y.strands:
            raise StrandMismatch("x and y live in different braid groups")
        if self.planted is not None:
            s = self.planted
            if not words_equal(self.y, multiply(multiply(s, self.x), invert(s))):
                raise BadParameter("planted conjugator does not satisfy y = s x s^-1")

    @property
    def n(self) -> int:
        return self.x.strands


def _letter_nfs(n: int, positive: bool) -> list[NormalForm]:
    letters = list(range(1, n))
    if not positive:
        letters += [-i for i in range(1, n)]
    return [left_normal_form(BraidWord(n, (x,))) for x in letters]


def elements_by_length(n: int, maxlen: int, positive: bool = True):
    """Yield every braid of word length <= maxlen exactly once, shortest first.

    In the positive monoid the letter count is an invariant, so the layers
    are disjoint. In the group the layer of an element is its geodesic length.
    """
    gens = _letter_nfs(n, positive)
    seen = {nf_identity(n)}
    layer = [nf_identity(n)]
    yield 0, nf_identity(n)
    for length in range(1, maxlen + 1):
        nxt = []
        for x in layer:
            for g in gens:
                y = nf_multiply(x, g)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
                    yield length, y
        layer = nxt


def _canonical_key(x: NormalForm) -> tuple:
    w = nf_to_word(x).letters
    return (len(w), w)


def edp_bruteforce(inst: EdpInstance, maxlen: int, monoid: bool = True) -> list[tuple[BraidWord, BraidWord]]:
    """All (s, t) with s t = U and t s = V, |s| <= maxlen, up to equality.

    With ``monoid`` (the default) both factors must be positive braids and the
    instance must be positive. With ``monoid=False`` s ranges over all words
    of length <= maxlen in the generators and their inverses and t is any braid.
    Pairs come back as canonical words, sorted lexicographically.
    """
    n = inst.n
    U, V = left_normal_form(inst.U), left_normal_form(inst.V)
    if monoid:
        if not (inst.U.is_positive and inst.V.is_positive) or len(inst.U) != len(inst.V):
            return []
        maxlen = min(maxlen, len(inst.U))
    found = {}
    for _, s in elements_by_length(n, maxlen, positive=monoid):
        t = nf_multiply(nf_inverse(s), U)
        if monoid and not t.is_positive:
            continue
        if nf_multiply(t, s) == V:
            found[(s, t)] = None
    pairs = sorted(found, key=lambda st: (_canonical_key(st[0]), _canonical_key(st[1])))
    return [(nf_to_word(s), nf_to_word(t)) for s, t in pairs]


def csp_bruteforce(inst: CspInstance, maxlen: int) -> list[BraidWord]:
    """All conjugators s (up to equality) of word length <= maxlen with y = s x s^{-1}."""
    x, y = left_normal_form(inst.x), left_normal_form(inst.y)
    out = []
    for _, s in elements_by_length(inst.n, maxlen, positive=False):
        if nf_multiply(nf_multiply(s, x), nf_inverse(s)) == y:
            out.append(s)
    out.sort(key=_canonical_key)
    return [nf_to_word(s) for s in out]


def csp_to_edp(inst: CspInstance, edp_solver: Callable[[EdpInstance], list]) -> BraidWord:
    """Solve conjugacy search with an exchange-decomposition solver.

    With c = x s^{-1} we have y = s c and x = c s, so any decomposition of
    (U, V) = (y, x) yields a conjugator. The cofactor c is rarely positive,
    so ``edp_solver`` has to work in the whole group.
    """
    edp = EdpInstance(inst.y, inst.x)
    for s, c in edp_solver(edp):
        if words_equal(multiply(s, c), inst.y) and words_equal(multiply(c, s), inst.x):
            return s
    raise ReductionFailed("decomposition solver returned no valid answer")


def edp_to_csp(
    inst: EdpInstance, csp_solver: Callable[[CspInstance], list]
) -> tuple[BraidWord, BraidWord]:
    """Solve exchange decomposition with a conjugacy-search solver.

    From s t = U and t s = V follows V = t U t^{-1}; a conjugator t of U to V
    then gives s = U t^{-1}.
    """
    answers = csp_solver(CspInstance(inst.U, inst.V))
    if not answers:
        raise ReductionFailed("conjugacy solver found no conjugator")
    for t in answers:
        s = multiply(inst.U, invert(t))
        if words_equal(multiply(s, t), inst.U) and words_equal(multiply(t, s), inst.V):
            return s, t
    raise ReductionFailed("no returned conjugator verifies")


def generate_planted_edp(n: int, len_s: int, len_t: int, seed) -> EdpInstance:
    rng = random.Random(seed)
    s = random_word(n, len_s, rng, positive=True)
    t = random_word(n, len_t, rng, positive=True)
    return EdpInstance(multiply(s, t), multiply(t, s), planted=(s, t))


def generate_planted_csp(n: int, len_x: int, len_s: int, seed) -> CspInstance:
    """Random positive x and a random conjugator s over generators and inverses."""
    rng = random.Random(seed)
    x = random_word(n, len_x, rng, positive=True)
    s = random_word(n, len_s, rng)
    return CspInstance(x, multiply(multiply(s, x), invert(s)), planted=s)
