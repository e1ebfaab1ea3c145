"""Hybrid public-key encryption derived from the key exchange.

The key holder plays Alice once, at key generation, and publishes ``s q_j s1``.
Each encryption plays a fresh Bob with exponent half ``t``, sends the
transformed ``p`` tuple ``Y`` together with ``t``, and hashes ``(Y, Z)`` into a
keystream, where ``Z = r1 s r s1`` is the exchanged braid.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field

from .errors import BadParameter, CiphertextCorrupt, ExponentTooSmall, StrandMismatch
from .garside import (
    NormalForm,
    complement_nf,
    left_normal_form,
    nf_multiply,
    nf_product,
    nf_to_word,
    shift_delta,
)
from .kx import KxParams, minimal_exponent, sample_sequence
from .rng import SeedStream
from .wire import decode_ciphertext, decode_nf, encode_ciphertext, encode_nf
from .words import BraidWord, format_word, parse_word, product

#: upper end of the random slack added to the encryptor's minimal exponent
T_MARGIN = 2


@dataclass(frozen=True)
class PkePublicKey:
    n: int
    p: tuple[BraidWord, ...]
    q: tuple[BraidWord, ...]
    d: int
    qprime: tuple[NormalForm, ...]
    L_min: int = 4
    L_max: int = 16

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "p": [format_word(w) for w in self.p],
            "q": [format_word(w) for w in self.q],
            "d": self.d,
            "qprime": [encode_nf(x).hex() for x in self.qprime],
            "L_min": self.L_min,
            "L_max": self.L_max,
        }

    @classmethod
    def from_json(cls, doc: dict) -> PkePublicKey:
        try:
            n = int(doc["n"])
            pk = cls(
                n=n,
                p=tuple(parse_word(t, n) for t in doc["p"]),
                q=tuple(parse_word(t, n) for t in doc["q"]),
                d=int(doc["d"]),
                qprime=tuple(decode_nf(bytes.fromhex(h)) for h in doc["qprime"]),
                L_min=int(doc.get("L_min", 4)),
                L_max=int(doc.get("L_max", 16)),
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise BadParameter(f"bad public key document: {exc}") from exc
        if len(pk.qprime) != len(pk.q) or any(x.strands != n or not x.is_positive for x in pk.qprime):
            raise BadParameter("qprime must hold one positive braid per q entry")
        return pk


@dataclass(frozen=True)
class PkeSecretKey:
    seq: tuple[int, ...]
    s: BraidWord
    s_1: BraidWord
    s_nf: NormalForm = field(repr=False, compare=False)
    s_1_nf: NormalForm = field(repr=False, compare=False)

    def to_json(self) -> dict:
        return {"seq": list(self.seq), "s": format_word(self.s), "s_1": format_word(self.s_1)}

    @classmethod
    def from_json(cls, doc: dict, pk: PkePublicKey) -> PkeSecretKey:
        seq = tuple(int(i) for i in doc["seq"])
        return _secret_from_seq(pk.n, pk.p, pk.d, seq)


@dataclass(frozen=True)
class Ciphertext:
    t: int
    Y: tuple[NormalForm, ...]
    c: bytes

    def encode(self) -> bytes:
        return encode_ciphertext(self.t, self.Y, self.c)

    @classmethod
    def decode(cls, data: bytes) -> Ciphertext:
        t, y, c = decode_ciphertext(data)
        return cls(t, tuple(y), c)


def kdf_and_keystream(Y, Z: NormalForm, length: int) -> tuple[bytes, bytes]:
    """key = SHA-256(enc(Y_1) ... enc(Y_l) enc(Z)); block j = SHA-256(key || j)."""
    h = hashlib.sha256()
    for y in Y:
        h.update(encode_nf(y))
    h.update(encode_nf(Z))
    key = h.digest()
    blocks = []
    for j in range(-(-length // 32)):
        blocks.append(hashlib.sha256(key + j.to_bytes(8, "big")).digest())
    return key, b"".join(blocks)[:length]


def _xor(data: bytes, stream: bytes) -> bytes:
    return bytes(a ^ b for a, b in zip(data, stream))


def _secret_from_seq(n: int, p, d: int, seq) -> PkeSecretKey:
    if not seq or any(not 1 <= i <= len(p) for i in seq):
        raise BadParameter(f"index sequence {seq} out of range 1..{len(p)}")
    s_nf = nf_product((left_normal_form(p[i - 1]) for i in seq), n)
    if 2 * d < s_nf.sup:
        need = minimal_exponent(s_nf)
        raise ExponentTooSmall(f"d = {d} too small for a secret of sup {s_nf.sup}; need d >= {need}", need)
    s_1_nf = complement_nf(s_nf, 2 * d)
    s = product((p[i - 1] for i in seq), n)
    return PkeSecretKey(tuple(seq), s, nf_to_word(s_1_nf), s_nf, s_1_nf)


def pke_keygen_from_seq(params: KxParams, d: int, seq) -> tuple[PkePublicKey, PkeSecretKey]:
    if d < 1:
        raise BadParameter("d must be positive")
    sk = _secret_from_seq(params.n, params.p, d, tuple(seq))
    qprime = tuple(nf_product((sk.s_nf, left_normal_form(q), sk.s_1_nf), params.n) for q in params.q)
    pk = PkePublicKey(params.n, params.p, params.q, d, qprime, params.L_min, params.L_max)
    return pk, sk


def pke_keygen(params: KxParams, d: int, seed: bytes) -> tuple[PkePublicKey, PkeSecretKey]:
    stream = SeedStream(seed)
    seq = sample_sequence(stream, len(params.p), params.L_min, params.L_max)
    return pke_keygen_from_seq(params, d, seq)


@dataclass(frozen=True)
class Encapsulation:
    ciphertext: Ciphertext
    Z: NormalForm
    key: bytes


def encapsulate(pk: PkePublicKey, msg: bytes, seed: bytes) -> Encapsulation:
    """Encrypt and also return the exchanged braid Z and the derived key."""
    stream = SeedStream(seed)
    seq = sample_sequence(stream, len(pk.q), pk.L_min, pk.L_max)
    r = nf_product((left_normal_form(pk.q[j - 1]) for j in seq), pk.n)
    t = minimal_exponent(r) + stream.randint(0, T_MARGIN)
    r1 = complement_nf(r, 2 * t)
    Y = tuple(nf_product((r1, left_normal_form(p), r), pk.n) for p in pk.p)
    v = nf_product((pk.qprime[j - 1] for j in seq), pk.n)
    Z = shift_delta(nf_multiply(r1, v), -2 * pk.d * (len(seq) - 1))
    key, keystream = kdf_and_keystream(Y, Z, len(msg))
    return Encapsulation(Ciphertext(t, Y, _xor(msg, keystream)), Z, key)


def pke_encrypt(pk: PkePublicKey, msg: bytes, seed: bytes) -> Ciphertext:
    return encapsulate(pk, bytes(msg), seed).ciphertext


def recover_z(sk: PkeSecretKey, pk: PkePublicKey, ct: Ciphertext) -> NormalForm:
    if len(ct.Y) != len(pk.p):
        raise CiphertextCorrupt(f"expected {len(pk.p)} braids in Y, got {len(ct.Y)}")
    if any(y.strands != pk.n for y in ct.Y):
        raise StrandMismatch("ciphertext braid has the wrong strand count")
    if any(not y.is_positive for y in ct.Y):
        raise CiphertextCorrupt("ciphertext contains a non-positive braid")
    u = nf_product((ct.Y[i - 1] for i in sk.seq), pk.n)
    Z = shift_delta(nf_multiply(u, sk.s_1_nf), -2 * ct.t * (len(sk.seq) - 1))
    if not Z.is_positive:
        raise CiphertextCorrupt("recovered braid is not positive")
    return Z


def pke_decrypt(sk: PkeSecretKey, pk: PkePublicKey, ct: Ciphertext) -> bytes:
    Z = recover_z(sk, pk, ct)
    _, keystream = kdf_and_keystream(ct.Y, Z, len(ct.c))
    return _xor(ct.c, keystream)


def load_public(path) -> PkePublicKey:
    with open(path, encoding="utf-8") as fh:
        return PkePublicKey.from_json(json.load(fh))
