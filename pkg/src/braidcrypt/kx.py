"""Two-party key exchange over the positive braid monoid.

Alice and Bob each hold a secret positive braid built as an ordered product of
public braids: Alice's ``s`` is a product of the ``p`` tuple, Bob's ``r`` a
product of the ``q`` tuple. Each also computes a cosecret so that
``s s1 = Delta^{2k}`` and ``r r1 = Delta^{2h}``. Alice publishes
``s q_j s1`` and Bob publishes ``r1 p_i r``. Both sides end with
``r1 s r s1``: in Bob's product of Alice's braids every interior ``s1 s``
collapses to the central ``Delta^{2k}``, and symmetrically for Alice, so each
side strips ``Delta^{2k(L_B-1)}`` resp. ``Delta^{2h(L_A-1)}`` where ``L`` is
that side's own secret length.
"""

from __future__ import annotations

import enum
import hashlib
import json
from dataclasses import dataclass, field

from .errors import BadParameter, ExponentTooSmall, ProtocolCorrupt, StrandMismatch, WrongRole
from .garside import (
    NormalForm,
    complement_nf,
    left_normal_form,
    nf_multiply,
    nf_product,
    nf_to_word,
    shift_delta,
)
from .rng import SeedStream
from .wire import encode_nf
from .words import BraidWord, format_word, parse_word, product, require_positive


class Role(enum.Enum):
    ALICE = "alice"
    BOB = "bob"


@dataclass(frozen=True)
class KxParams:
    n: int
    p: tuple[BraidWord, ...]
    q: tuple[BraidWord, ...]
    k: int
    h: int
    L_min: int = 4
    L_max: int = 16

    def __post_init__(self):
        object.__setattr__(self, "p", tuple(self.p))
        object.__setattr__(self, "q", tuple(self.q))
        if not self.p or not self.q:
            raise BadParameter("both public tuples must be nonempty")
        for w in self.p + self.q:
            if w.strands != self.n:
                raise StrandMismatch(f"public braid in B_{w.strands}, expected B_{self.n}")
            require_positive(w)
        if self.k < 1 or self.h < 1:
            raise BadParameter("k and h must be positive")
        if not 1 <= self.L_min <= self.L_max:
            raise BadParameter("need 1 <= L_min <= L_max")

    def public(self, role: Role) -> tuple[BraidWord, ...]:
        """The tuple a role's secret is built from."""
        return self.p if role is Role.ALICE else self.q

    def exponent(self, role: Role) -> int:
        return self.k if role is Role.ALICE else self.h

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "p": [format_word(w) for w in self.p],
            "q": [format_word(w) for w in self.q],
            "k": self.k,
            "h": self.h,
            "L_min": self.L_min,
            "L_max": self.L_max,
        }

    @classmethod
    def from_json(cls, doc: dict) -> KxParams:
        try:
            n = int(doc["n"])
            return cls(
                n=n,
                p=tuple(parse_word(t, n) for t in doc["p"]),
                q=tuple(parse_word(t, n) for t in doc["q"]),
                k=int(doc.get("k", 1)),
                h=int(doc.get("h", 1)),
                L_min=int(doc.get("L_min", 4)),
                L_max=int(doc.get("L_max", 16)),
            )
        except (KeyError, TypeError) as exc:
            raise BadParameter(f"bad params document: {exc}") from exc

    @classmethod
    def load(cls, path) -> KxParams:
        with open(path, encoding="utf-8") as fh:
            return cls.from_json(json.load(fh))


def minimal_exponent(secret: NormalForm) -> int:
    """Smallest e with 2e >= sup(secret)."""
    return max(1, -(-secret.sup // 2))


def feasible_exponent(public, L_max: int) -> int:
    """An exponent half that works for every secret of at most ``L_max`` factors."""
    worst = max(left_normal_form(w).sup for w in public)
    return max(1, -(-(L_max * worst) // 2))


@dataclass(frozen=True)
class KxPrivate:
    role: Role
    seq: tuple[int, ...]
    secret: BraidWord
    cosecret: BraidWord
    secret_nf: NormalForm = field(repr=False, compare=False)
    cosecret_nf: NormalForm = field(repr=False, compare=False)

    def to_json(self) -> dict:
        return {
            "role": self.role.value,
            "seq": list(self.seq),
            "secret": format_word(self.secret),
            "cosecret": format_word(self.cosecret),
        }


@dataclass(frozen=True)
class KxMessage:
    transformed: tuple[NormalForm, ...]

    def __post_init__(self):
        object.__setattr__(self, "transformed", tuple(self.transformed))
        if any(not x.is_positive for x in self.transformed):
            raise ProtocolCorrupt("message contains a non-positive braid")


def derive_session_key(value: NormalForm) -> bytes:
    return hashlib.sha256(encode_nf(value)).digest()


@dataclass(frozen=True)
class SharedSecret:
    value: NormalForm
    key: bytes

    @classmethod
    def from_value(cls, value: NormalForm) -> SharedSecret:
        return cls(value, derive_session_key(value))


def kx_private_from_seq(params: KxParams, role: Role, seq) -> KxPrivate:
    """Build a private key from an explicit index sequence (1-based)."""
    role = Role(role)
    seq = tuple(int(i) for i in seq)
    public = params.public(role)
    if not seq or any(not 1 <= i <= len(public) for i in seq):
        raise BadParameter(f"index sequence {seq} out of range 1..{len(public)}")
    secret = product((public[i - 1] for i in seq), params.n)
    secret_nf = nf_product((left_normal_form(public[i - 1]) for i in seq), params.n)
    e = params.exponent(role)
    if 2 * e < secret_nf.sup:
        need = minimal_exponent(secret_nf)
        raise ExponentTooSmall(
            f"Delta^{2 * e} cannot absorb a secret of sup {secret_nf.sup}; need exponent >= {need}",
            need,
        )
    cosecret_nf = complement_nf(secret_nf, 2 * e)
    return KxPrivate(role, seq, secret, nf_to_word(cosecret_nf), secret_nf, cosecret_nf)


def sample_sequence(stream: SeedStream, size: int, L_min: int, L_max: int) -> tuple[int, ...]:
    length = stream.randint(L_min, L_max)
    return tuple(1 + stream.randbelow(size) for _ in range(length))


def kx_keygen(params: KxParams, role: Role, seed: bytes) -> KxPrivate:
    role = Role(role)
    stream = SeedStream(seed)
    seq = sample_sequence(stream, len(params.public(role)), params.L_min, params.L_max)
    return kx_private_from_seq(params, role, seq)


def private_from_json(params: KxParams, doc: dict) -> KxPrivate:
    priv = kx_private_from_seq(params, Role(doc["role"]), doc["seq"])
    if "secret" in doc and parse_word(doc["secret"], params.n) != priv.secret:
        raise ProtocolCorrupt("stored secret does not match its index sequence")
    return priv


def _require(priv: KxPrivate, role: Role) -> None:
    if priv.role is not role:
        raise WrongRole(f"expected a {role.value} key, got {priv.role.value}")


def alice_message(priv: KxPrivate, params: KxParams) -> KxMessage:
    _require(priv, Role.ALICE)
    s, s1 = priv.secret_nf, priv.cosecret_nf
    return KxMessage(tuple(nf_product((s, left_normal_form(q), s1), params.n) for q in params.q))


def bob_message(priv: KxPrivate, params: KxParams) -> KxMessage:
    _require(priv, Role.BOB)
    r, r1 = priv.secret_nf, priv.cosecret_nf
    return KxMessage(tuple(nf_product((r1, left_normal_form(p), r), params.n) for p in params.p))


def _check_message(msg: KxMessage, expected: int, n: int) -> None:
    if len(msg.transformed) != expected:
        raise ProtocolCorrupt(f"expected {expected} braids, got {len(msg.transformed)}")
    if any(x.strands != n for x in msg.transformed):
        raise ProtocolCorrupt("message braid has the wrong strand count")


def _strip(value: NormalForm, e: int) -> NormalForm:
    out = shift_delta(value, -e)
    if not out.is_positive:
        raise ProtocolCorrupt("shared value left the positive monoid; message inconsistent with params")
    return out


def alice_shared(priv: KxPrivate, msg: KxMessage, params: KxParams) -> SharedSecret:
    _require(priv, Role.ALICE)
    _check_message(msg, len(params.p), params.n)
    u = nf_product((msg.transformed[i - 1] for i in priv.seq), params.n)
    value = nf_multiply(u, priv.cosecret_nf)
    return SharedSecret.from_value(_strip(value, 2 * params.h * (len(priv.seq) - 1)))


def bob_shared(priv: KxPrivate, msg: KxMessage, params: KxParams) -> SharedSecret:
    _require(priv, Role.BOB)
    _check_message(msg, len(params.q), params.n)
    v = nf_product((msg.transformed[j - 1] for j in priv.seq), params.n)
    value = nf_multiply(priv.cosecret_nf, v)
    return SharedSecret.from_value(_strip(value, 2 * params.k * (len(priv.seq) - 1)))
