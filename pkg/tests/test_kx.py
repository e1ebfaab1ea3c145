import json
import random

import pytest

from braidcrypt.errors import BadParameter, ExponentTooSmall, NotPositive, ProtocolCorrupt, WrongRole
from braidcrypt.garside import (
    left_normal_form,
    nf_delta_power,
    nf_identity,
    nf_multiply,
    nf_product,
    nf_to_word,
    shift_delta,
    words_equal,
)
from braidcrypt.kx import (
    KxMessage,
    KxParams,
    Role,
    SharedSecret,
    alice_message,
    alice_shared,
    bob_message,
    bob_shared,
    derive_session_key,
    feasible_exponent,
    kx_keygen,
    kx_private_from_seq,
    private_from_json,
)
from braidcrypt.words import BraidWord, fundamental_braid, parse_word, random_word


def words(texts, n):
    return tuple(parse_word(t, n) for t in texts)


def small_params(k=3, h=3, L_min=1, L_max=4):
    return KxParams(4, words(["1", "2 3"], 4), words(["3", "1 2"], 4), k, h, L_min, L_max)


def expected_secret(alice, bob):
    """r1 s r s1 computed straight from both private keys."""
    return nf_product([bob.cosecret_nf, alice.secret_nf, bob.secret_nf, alice.cosecret_nf], alice.secret.strands)


def random_params(rng):
    n = rng.randint(3, 10)
    p = tuple(random_word(n, rng.randint(1, 8), rng, positive=True) for _ in range(rng.randint(1, 4)))
    q = tuple(random_word(n, rng.randint(1, 8), rng, positive=True) for _ in range(rng.randint(1, 4)))
    L_min = rng.randint(1, 8)
    L_max = rng.randint(L_min, 8)
    k = feasible_exponent(p, L_max) + rng.randint(0, 2)
    h = feasible_exponent(q, L_max) + rng.randint(0, 2)
    return KxParams(n, p, q, k, h, L_min, L_max)


def test_params_validation():
    with pytest.raises(NotPositive):
        KxParams(3, words(["1 -2"], 3), words(["1"], 3), 1, 1)
    with pytest.raises(BadParameter):
        KxParams(3, words(["1"], 3), words(["1"], 3), 0, 1)
    with pytest.raises(BadParameter):
        KxParams(3, words(["1"], 3), words(["1"], 3), 1, 1, L_min=3, L_max=2)


def test_params_json_roundtrip():
    params = small_params()
    doc = json.loads(json.dumps(params.to_json()))
    assert KxParams.from_json(doc) == params


def test_keygen_single_generator():
    params = KxParams(3, words(["1"], 3), words(["2"], 3), k=1, h=1, L_min=1, L_max=1)
    priv = kx_private_from_seq(params, Role.ALICE, (1,))
    assert priv.secret == parse_word("1", 3)
    assert words_equal(priv.secret * priv.cosecret, fundamental_braid(3) ** 2)
    assert words_equal(priv.cosecret, parse_word("-1", 3) * fundamental_braid(3) ** 2)


def test_keygen_exponent_too_small():
    params = KxParams(3, words(["1 2 1 1"], 3), words(["2"], 3), k=1, h=1, L_min=1, L_max=4)
    with pytest.raises(ExponentTooSmall) as info:
        kx_private_from_seq(params, Role.ALICE, (1, 1, 1))
    sup = left_normal_form(parse_word("1 2 1 1 " * 3, 3)).sup
    assert info.value.minimal == -(-sup // 2)


def test_keygen_deterministic():
    params = small_params()
    a = kx_keygen(params, Role.ALICE, b"seed")
    assert kx_keygen(params, Role.ALICE, b"seed") == a
    assert params.L_min <= len(a.seq) <= params.L_max
    with pytest.raises(ValueError):
        kx_keygen(params, Role.ALICE, b"")


def test_keygen_invariants():
    params = small_params()
    for seed in range(20):
        for role in Role:
            priv = kx_keygen(params, role, bytes([seed]))
            public = params.public(role)
            assert words_equal(priv.secret, BraidWord(4, sum((public[i - 1].letters for i in priv.seq), ())))
            e = params.exponent(role)
            assert words_equal(priv.secret * priv.cosecret, fundamental_braid(4) ** (2 * e))


def test_messages_identity_cases():
    params = KxParams(3, words(["", "1"], 3), words(["", "2"], 3), k=2, h=2, L_min=1, L_max=1)
    alice = kx_private_from_seq(params, Role.ALICE, (1,))
    msg = alice_message(alice, params)
    assert msg.transformed[0] == nf_delta_power(3, 4)
    assert msg.transformed[1] == left_normal_form(parse_word("2", 3) * fundamental_braid(3) ** 4)
    bob = kx_private_from_seq(params, Role.BOB, (1,))
    msg = bob_message(bob, params)
    assert msg.transformed[0] == nf_delta_power(3, 4)
    assert msg.transformed[1] == shift_delta(left_normal_form(parse_word("1", 3)), 4)


def test_messages_match_direct_products():
    params = small_params()
    alice = kx_keygen(params, Role.ALICE, b"a")
    bob = kx_keygen(params, Role.BOB, b"b")
    for q, qp in zip(params.q, alice_message(alice, params).transformed):
        assert words_equal(alice.secret * q * alice.cosecret, nf_to_word(qp))
    for p, pp in zip(params.p, bob_message(bob, params).transformed):
        assert words_equal(bob.cosecret * p * bob.secret, nf_to_word(pp))


def test_wrong_role():
    params = small_params()
    alice = kx_keygen(params, Role.ALICE, b"a")
    bob = kx_keygen(params, Role.BOB, b"b")
    with pytest.raises(WrongRole):
        bob_message(alice, params)
    with pytest.raises(WrongRole):
        alice_message(bob, params)
    with pytest.raises(WrongRole):
        bob_shared(alice, alice_message(alice, params), params)


def test_full_session_fixed_seeds():
    params = small_params()
    alice = kx_keygen(params, Role.ALICE, b"\x01")
    bob = kx_keygen(params, Role.BOB, b"\x02")
    s = alice_shared(alice, bob_message(bob, params), params)
    t = bob_shared(bob, alice_message(alice, params), params)
    assert s.value == t.value == expected_secret(alice, bob)
    assert s.key == t.key
    assert len(s.key) == 32


def test_single_factor_needs_no_correction():
    params = small_params(L_min=1, L_max=1)
    alice = kx_keygen(params, Role.ALICE, b"x")
    bob = kx_keygen(params, Role.BOB, b"y")
    pmsg = bob_message(bob, params)
    assert alice_shared(alice, pmsg, params).value == nf_multiply(pmsg.transformed[alice.seq[0] - 1], alice.cosecret_nf)


def test_central_factor_bookkeeping():
    rng = random.Random(4)
    for _ in range(50):
        params = random_params(rng)
        alice = kx_keygen(params, Role.ALICE, rng.randbytes(8))
        bob = kx_keygen(params, Role.BOB, rng.randbytes(8))
        pmsg = bob_message(bob, params)
        u = nf_product((pmsg.transformed[i - 1] for i in alice.seq), params.n)
        r1sr = nf_product([bob.cosecret_nf, alice.secret_nf, bob.secret_nf], params.n)
        assert u == shift_delta(r1sr, 2 * params.h * (len(alice.seq) - 1))


def test_tampered_message_detected():
    params = small_params(L_min=3, L_max=4)
    alice = kx_keygen(params, Role.ALICE, b"\x01")
    bob = kx_keygen(params, Role.BOB, b"\x02")
    honest = alice_shared(alice, bob_message(bob, params), params)
    pmsg = bob_message(bob, params).transformed
    used = alice.seq[0] - 1
    tampered = KxMessage(pmsg[:used] + (nf_identity(4),) + pmsg[used + 1:])
    try:
        result = alice_shared(alice, tampered, params)
    except ProtocolCorrupt:
        return
    assert result.value != honest.value


def test_wrong_message_length():
    params = small_params()
    alice = kx_keygen(params, Role.ALICE, b"\x01")
    with pytest.raises(ProtocolCorrupt):
        alice_shared(alice, KxMessage(()), params)
    with pytest.raises(ProtocolCorrupt):
        KxMessage((left_normal_form(parse_word("-1", 4)),))


def test_uncorrected_exponents_break_when_k_differs_from_h():
    params = KxParams(4, words(["1", "2 3"], 4), words(["3", "1 2"], 4), k=4, h=5, L_min=2, L_max=4)
    alice = kx_keygen(params, Role.ALICE, b"\x03")
    bob = kx_keygen(params, Role.BOB, b"\x04")
    assert len(alice.seq) > 1 and len(bob.seq) > 1
    u = nf_product((bob_message(bob, params).transformed[i - 1] for i in alice.seq), params.n)
    v = nf_product((alice_message(alice, params).transformed[j - 1] for j in bob.seq), params.n)
    # exponents as printed: Alice strips her own k, Bob his own h
    s_naive = shift_delta(nf_multiply(u, alice.cosecret_nf), -2 * params.k * (len(alice.seq) - 1))
    t_naive = shift_delta(nf_multiply(bob.cosecret_nf, v), -2 * params.h * (len(bob.seq) - 1))
    assert s_naive != expected_secret(alice, bob)
    assert t_naive != expected_secret(alice, bob)
    assert s_naive != t_naive


def test_derive_session_key():
    a = left_normal_form(parse_word("1 2 2", 3))
    b = left_normal_form(parse_word("1 2 1", 3))
    assert derive_session_key(a) == derive_session_key(left_normal_form(parse_word("1 2 2", 3)))
    assert derive_session_key(a) != derive_session_key(b)
    assert len(derive_session_key(a)) == 32
    assert SharedSecret.from_value(a).key == derive_session_key(a)


def test_private_json_roundtrip():
    params = small_params()
    priv = kx_keygen(params, Role.BOB, b"json")
    assert private_from_json(params, json.loads(json.dumps(priv.to_json()))) == priv


def test_random_sessions():
    rng = random.Random(12)
    for _ in range(100):
        params = random_params(rng)
        alice = kx_keygen(params, Role.ALICE, rng.randbytes(16))
        bob = kx_keygen(params, Role.BOB, rng.randbytes(16))
        amsg, bmsg = alice_message(alice, params), bob_message(bob, params)
        assert all(x.is_positive for x in amsg.transformed + bmsg.transformed)
        s = alice_shared(alice, bmsg, params)
        t = bob_shared(bob, amsg, params)
        assert s.value == t.value == expected_secret(alice, bob)
