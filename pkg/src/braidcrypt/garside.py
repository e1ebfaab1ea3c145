"""Left normal form in B_n and the arithmetic built on it.

Every braid has a unique expression Delta^k s_1 ... s_r with each s_i a simple
braid other than e and Delta, and every adjacent pair left-weighted: the
starting set of s_{i+1} is contained in the finishing set of s_i. Two words
are equal in B_n exactly when their normal forms coincide.

Internally a simple braid is a tuple ``p`` of 0-based images (``p[i]`` is the
final position of the strand starting at ``i``); :class:`SimpleBraid` carries
the 1-based table at the API boundary. The product ``A.B`` of simple braids
(A first) has images ``B[A[i]]``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import ComplementTooSmall, OddShiftUnsupported, StrandMismatch
from .words import (
    BraidWord,
    SimpleBraid,
    fundamental_braid,
    invert,
    require_positive,
    simple_to_word,
)

Perm = tuple[int, ...]


def _to_perm(a: SimpleBraid) -> Perm:
    return tuple(p - 1 for p in a.perm)


def _from_perm(p: Perm) -> SimpleBraid:
    return SimpleBraid(len(p), tuple(x + 1 for x in p))


def _inverse(p: Perm) -> Perm:
    inv = [0] * len(p)
    for i, x in enumerate(p):
        inv[x] = i
    return tuple(inv)


def _compose(a: Perm, b: Perm) -> Perm:
    """Images of the product a.b (a acts first)."""
    return tuple(b[x] for x in a)


def _tau_perm(p: Perm) -> Perm:
    n = len(p)
    return tuple(n - 1 - p[n - 1 - i] for i in range(n))


def _right_complement(p: Perm) -> Perm:
    """A* with A.A* = Delta."""
    n = len(p)
    inv = _inverse(p)
    return tuple(n - 1 - inv[i] for i in range(n))


def _left_complement(p: Perm) -> Perm:
    """*A with *A.A = Delta."""
    n = len(p)
    inv = _inverse(p)
    return tuple(inv[n - 1 - i] for i in range(n))


def starting_set(a: SimpleBraid) -> frozenset[int]:
    """Generators a_i that left-divide ``a`` (1-based indices)."""
    p = _to_perm(a)
    return frozenset(i + 1 for i in range(len(p) - 1) if p[i] > p[i + 1])


def finishing_set(a: SimpleBraid) -> frozenset[int]:
    """Generators a_i that right-divide ``a`` (1-based indices)."""
    inv = _inverse(_to_perm(a))
    return frozenset(i + 1 for i in range(len(inv) - 1) if inv[i] > inv[i + 1])


def _is_left_weighted(a: Perm, b: Perm) -> bool:
    inv_a = _inverse(a)
    for i in range(len(b) - 1):
        if b[i] > b[i + 1] and not inv_a[i] > inv_a[i + 1]:
            return False
    return True


def _meet_with_quotients(a: Perm, b: Perm) -> tuple[list[int], list[int], list[int]]:
    """Greedy meet: returns (generators of a^b, a-remainder, b-remainder).

    A generator a_i left-divides a simple braid with images ``p`` iff
    ``p[i] > p[i+1]`` (0-based); dividing it off swaps those two entries.
    Only descents at i-1, i, i+1 change after a swap at i, so the scan backs up
    by one position instead of restarting.
    """
    x, y = list(a), list(b)
    gens: list[int] = []
    n = len(x)
    i = 0
    while i < n - 1:
        if x[i] > x[i + 1] and y[i] > y[i + 1]:
            x[i], x[i + 1] = x[i + 1], x[i]
            y[i], y[i + 1] = y[i + 1], y[i]
            gens.append(i)
            i = max(i - 1, 0)
        else:
            i += 1
    return gens, x, y


def _gens_perm(n: int, gens: list[int]) -> Perm:
    strand_at = list(range(n))
    for i in gens:
        strand_at[i], strand_at[i + 1] = strand_at[i + 1], strand_at[i]
    return _inverse(tuple(strand_at))


def _meet(a: Perm, b: Perm) -> Perm:
    gens, _, _ = _meet_with_quotients(a, b)
    return _gens_perm(len(a), gens)


def simple_meet(a: SimpleBraid, b: SimpleBraid) -> SimpleBraid:
    """Greatest simple braid left-dividing both ``a`` and ``b``."""
    if a.strands != b.strands:
        raise StrandMismatch(f"B_{a.strands} vs B_{b.strands}")
    return _from_perm(_meet(_to_perm(a), _to_perm(b)))


def _left_weight(a: Perm, b: Perm) -> tuple[Perm, Perm] | None:
    """Slide the common prefix of a* and b into a; None if (a, b) is already left-weighted."""
    gens, _, b_rest = _meet_with_quotients(_right_complement(a), b)
    if not gens:
        return None
    c = _gens_perm(len(a), gens)
    return _compose(a, c), tuple(b_rest)


class _Builder:
    """Mutable left normal form used while multiplying on the right."""

    __slots__ = ("n", "inf", "factors", "identity", "delta")

    def __init__(self, n: int, inf: int = 0, factors=()):
        self.n = n
        self.inf = inf
        self.factors: list[Perm] = list(factors)
        self.identity = tuple(range(n))
        self.delta = tuple(range(n - 1, -1, -1))

    def push(self, b: Perm) -> None:
        """Right-multiply by a simple braid, restoring left-weightedness."""
        if b == self.identity:
            return
        if b == self.delta:
            self.push_delta(1)
            return
        fs = self.factors
        fs.append(b)
        j = len(fs) - 1
        while j > 0:
            fixed = _left_weight(fs[j - 1], fs[j])
            if fixed is None:
                break
            fs[j - 1], fs[j] = fixed
            j -= 1
        lead = 0
        while lead < len(fs) and fs[lead] == self.delta:
            lead += 1
        if lead:
            self.inf += lead
            del fs[:lead]
        while fs and fs[-1] == self.identity:
            fs.pop()

    def push_delta(self, e: int) -> None:
        """Right-multiply by Delta^e, moving it to the front through tau."""
        if e % 2:
            self.factors = [_tau_perm(p) for p in self.factors]
        self.inf += e

    def push_letter(self, x: int) -> None:
        i = abs(x) - 1
        if x > 0:
            p = list(self.identity)
            p[i], p[i + 1] = p[i + 1], p[i]
            self.push(tuple(p))
        else:
            # a_i^{-1} = Delta^{-1} . (*a_i), with *a_i a_i = Delta
            g = list(self.identity)
            g[i], g[i + 1] = g[i + 1], g[i]
            self.push_delta(-1)
            self.push(_left_complement(tuple(g)))

    def result(self) -> NormalForm:
        return NormalForm._make(self.n, self.inf, tuple(self.factors))


@dataclass(frozen=True)
class NormalForm:
    """Delta^inf . factors[0] ... factors[-1], in left normal form."""

    strands: int
    inf: int
    factors: tuple[SimpleBraid, ...] = ()

    @classmethod
    def _make(cls, n: int, inf: int, perms: tuple[Perm, ...]) -> NormalForm:
        nf = cls(n, inf, tuple(_from_perm(p) for p in perms))
        object.__setattr__(nf, "_perms", perms)
        return nf

    @property
    def perms(self) -> tuple[Perm, ...]:
        try:
            return self._perms
        except AttributeError:
            perms = tuple(_to_perm(a) for a in self.factors)
            object.__setattr__(self, "_perms", perms)
            return perms

    @property
    def canonical_length(self) -> int:
        return len(self.factors)

    @property
    def sup(self) -> int:
        return self.inf + len(self.factors)

    @property
    def is_positive(self) -> bool:
        return self.inf >= 0

    def __mul__(self, other: NormalForm) -> NormalForm:
        return nf_multiply(self, other)

    def __str__(self) -> str:
        return format_nf(self)


def nf_identity(n: int) -> NormalForm:
    return NormalForm._make(n, 0, ())


def nf_delta_power(n: int, e: int) -> NormalForm:
    return NormalForm._make(n, e, ())


def left_normal_form(w: BraidWord) -> NormalForm:
    return _left_normal_form_cached(w)


@lru_cache(maxsize=4096)
def _left_normal_form_cached(w: BraidWord) -> NormalForm:
    b = _Builder(w.strands)
    for x in w.letters:
        b.push_letter(x)
    return b.result()


def is_left_weighted_form(nf: NormalForm) -> bool:
    """Check the NormalForm type invariants (used by decoders)."""
    n = nf.strands
    identity = tuple(range(n))
    delta = tuple(range(n - 1, -1, -1))
    perms = nf.perms
    if any(p == identity or p == delta for p in perms):
        return False
    return all(_is_left_weighted(perms[i], perms[i + 1]) for i in range(len(perms) - 1))


def words_equal(w1: BraidWord, w2: BraidWord) -> bool:
    if w1.strands != w2.strands:
        raise StrandMismatch(f"B_{w1.strands} vs B_{w2.strands}")
    return left_normal_form(w1) == left_normal_form(w2)


def nf_multiply(x: NormalForm, y: NormalForm) -> NormalForm:
    if x.strands != y.strands:
        raise StrandMismatch(f"B_{x.strands} vs B_{y.strands}")
    perms = x.perms
    if y.inf % 2:
        perms = tuple(_tau_perm(p) for p in perms)
    b = _Builder(x.strands, x.inf + y.inf, perms)
    for p in y.perms:
        b.push(p)
    return b.result()


def nf_product(forms, n: int) -> NormalForm:
    out = nf_identity(n)
    for f in forms:
        out = nf_multiply(out, f)
    return out


def nf_inverse(x: NormalForm) -> NormalForm:
    """x^{-1} = Delta^{-(inf+r)} tau^{inf+r}(s_r*) ... tau^{inf+1}(s_1*)."""
    r = len(x.factors)
    perms = x.perms
    out = []
    for j in range(r, 0, -1):
        q = _right_complement(perms[j - 1])
        if (j + x.inf) % 2:
            q = _tau_perm(q)
        out.append(q)
    b = _Builder(x.strands, -(x.inf + r))
    for q in out:
        b.push(q)
    return b.result()


def shift_delta(x: NormalForm, e: int) -> NormalForm:
    """Multiply by the central element Delta^e (e even)."""
    if e % 2:
        raise OddShiftUnsupported(f"Delta^{e} is not central")
    return NormalForm._make(x.strands, x.inf + e, x.perms)


def inf_sup(x: NormalForm) -> tuple[int, int, int]:
    return x.inf, x.sup, len(x.factors)


def complement_nf(x: NormalForm, m: int) -> NormalForm:
    """The positive y with x.y = Delta^m, computed as x^{-1} Delta^m."""
    if not x.is_positive:
        raise ComplementTooSmall("complements are defined for positive braids only")
    if m < x.sup:
        raise ComplementTooSmall(f"Delta^{m} is below sup = {x.sup}")
    inv = nf_inverse(x)
    perms = inv.perms
    if m % 2:
        perms = tuple(_tau_perm(p) for p in perms)
    return NormalForm._make(x.strands, inv.inf + m, perms)


def complement(x: BraidWord, m: int) -> BraidWord:
    require_positive(x)
    return nf_to_word(complement_nf(left_normal_form(x), m))


def nf_to_word(x: NormalForm) -> BraidWord:
    """Canonical word: Delta^inf as the recursive product, then each factor's word."""
    n = x.strands
    delta = fundamental_braid(n)
    if x.inf < 0:
        delta = invert(delta)
    letters = list(delta.letters) * abs(x.inf)
    for a in x.factors:
        letters.extend(simple_to_word(a).letters)
    return BraidWord(n, tuple(letters))


def format_nf(x: NormalForm) -> str:
    parts = [f"D^{x.inf}"]
    parts.extend(" ".join(str(i) for i in simple_to_word(a).letters) for a in x.factors)
    return " | ".join(parts)


def simple_nf(a: SimpleBraid) -> NormalForm:
    b = _Builder(a.strands)
    b.push(_to_perm(a))
    return b.result()
