"""Command-line front end.

Exit status is 0 on success, 2 for malformed input and 3 when a protocol or
verification step fails.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import demo
from .analysis import EdpInstance, edp_bruteforce
from .errors import BraidError, ComplementTooSmall, ExponentTooSmall, MalformedInput
from .garside import format_nf, left_normal_form
from .kx import (
    KxParams,
    Role,
    alice_message,
    alice_shared,
    bob_message,
    bob_shared,
    kx_keygen,
    private_from_json,
)
from .pke import Ciphertext, PkePublicKey, PkeSecretKey, pke_decrypt, pke_encrypt, pke_keygen
from .wire import CIPHERTEXT_MAGIC, FRAME_ALICE, FRAME_BOB, armor, decode_frame, unarmor
from .words import format_word, parse_word

EXIT_MALFORMED = 2
EXIT_FAILURE = 3


def _seed(text: str) -> bytes:
    try:
        seed = bytes.fromhex(text)
    except ValueError as exc:
        raise MalformedInput(f"seed {text!r} is not hex") from exc
    if not seed:
        raise MalformedInput("seed must be nonempty")
    return seed


def _read_json(path):
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


def _write_json(path, doc) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(doc, fh, indent=2)
        fh.write("\n")


def cmd_nf(args) -> int:
    word = parse_word(" ".join(args.word), args.n)
    print(format_nf(left_normal_form(word)))
    return 0


def cmd_kx_keygen(args) -> int:
    params = KxParams.load(args.params)
    priv = kx_keygen(params, Role(args.role), _seed(args.seed))
    _write_json(args.out, {"params": params.to_json(), "private": priv.to_json()})
    return 0


def _load_priv(path):
    doc = _read_json(path)
    params = KxParams.from_json(doc["params"])
    return params, private_from_json(params, doc["private"])


def cmd_kx_message(args) -> int:
    params, priv = _load_priv(args.priv)
    if priv.role is Role.ALICE:
        frame = demo.message_frame(alice_message(priv, params), FRAME_ALICE)
    else:
        frame = demo.message_frame(bob_message(priv, params), FRAME_BOB)
    with open(args.out, "wb") as fh:
        fh.write(frame.encode())
    return 0


def cmd_kx_finish(args) -> int:
    params, priv = _load_priv(args.priv)
    with open(args.msg, "rb") as fh:
        frame = decode_frame(fh.read())
    if priv.role is Role.ALICE:
        shared = alice_shared(priv, demo.frame_message(frame, FRAME_BOB), params)
    else:
        shared = bob_shared(priv, demo.frame_message(frame, FRAME_ALICE), params)
    print(shared.key.hex())
    return 0


def cmd_pke_keygen(args) -> int:
    params = KxParams.load(args.params)
    pk, sk = pke_keygen(params, args.d, _seed(args.seed))
    _write_json(args.pub, pk.to_json())
    _write_json(args.sec, sk.to_json())
    return 0


def cmd_pke_encrypt(args) -> int:
    pk = PkePublicKey.from_json(_read_json(args.pub))
    with open(args.infile, "rb") as fh:
        msg = fh.read()
    ct = pke_encrypt(pk, msg, _seed(args.seed))
    with open(args.out, "w", encoding="ascii") as fh:
        fh.write(armor(ct.encode()) + "\n")
    return 0


def cmd_pke_decrypt(args) -> int:
    pk = PkePublicKey.from_json(_read_json(args.pub))
    sk = PkeSecretKey.from_json(_read_json(args.sec), pk)
    with open(args.infile, "rb") as fh:
        data = fh.read()
    if not data.startswith(CIPHERTEXT_MAGIC):
        try:
            data = unarmor(data)
        except ValueError as exc:
            raise MalformedInput("ciphertext is neither binary nor base64") from exc
    plain = pke_decrypt(sk, pk, Ciphertext.decode(data))
    with open(args.out, "wb") as fh:
        fh.write(plain)
    return 0


def cmd_attack_edp(args) -> int:
    doc = _read_json(args.instance)
    try:
        n = int(doc["n"])
        inst = EdpInstance(parse_word(doc["U"], n), parse_word(doc["V"], n))
    except (KeyError, TypeError) as exc:
        raise MalformedInput(f"bad instance document: {exc}") from exc
    solutions = edp_bruteforce(inst, args.maxlen, monoid=doc.get("monoid", True))
    for s, t in solutions:
        print(f"[{format_word(s)}] [{format_word(t)}]")
    return 0 if solutions else EXIT_FAILURE


def cmd_demo_serve(args) -> int:
    params = KxParams.load(args.params)
    ok = demo.serve(args.host, args.port, params, _seed(args.seed), once=args.once)
    return 0 if ok else EXIT_FAILURE


def cmd_demo_connect(args) -> int:
    params = KxParams.load(args.params)
    key = demo.connect(args.host, args.port, params, _seed(args.seed))
    print(key.hex())
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="braidcrypt", description="Positive-braid cryptography toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("nf", help="print the left normal form of a word")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("word", nargs="*")
    p.set_defaults(func=cmd_nf)

    kx = sub.add_parser("kx", help="key exchange").add_subparsers(dest="kx_command", required=True)
    p = kx.add_parser("keygen")
    p.add_argument("--params", required=True)
    p.add_argument("--role", choices=["alice", "bob"], required=True)
    p.add_argument("--seed", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_kx_keygen)
    p = kx.add_parser("message")
    p.add_argument("--priv", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_kx_message)
    p = kx.add_parser("finish")
    p.add_argument("--priv", required=True)
    p.add_argument("--msg", required=True)
    p.set_defaults(func=cmd_kx_finish)

    pke = sub.add_parser("pke", help="public-key encryption").add_subparsers(dest="pke_command", required=True)
    p = pke.add_parser("keygen")
    p.add_argument("--params", required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--seed", required=True)
    p.add_argument("--pub", required=True)
    p.add_argument("--sec", required=True)
    p.set_defaults(func=cmd_pke_keygen)
    p = pke.add_parser("encrypt")
    p.add_argument("--pub", required=True)
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--seed", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_pke_encrypt)
    p = pke.add_parser("decrypt")
    p.add_argument("--sec", required=True)
    p.add_argument("--pub", required=True)
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_pke_decrypt)

    attack = sub.add_parser("attack", help="brute-force solvers").add_subparsers(dest="attack_command", required=True)
    p = attack.add_parser("edp-brute")
    p.add_argument("--instance", required=True)
    p.add_argument("--maxlen", type=int, required=True)
    p.set_defaults(func=cmd_attack_edp)

    dem = sub.add_parser("demo", help="TCP handshake demo").add_subparsers(dest="demo_command", required=True)
    p = dem.add_parser("serve")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, required=True)
    p.add_argument("--params", required=True)
    p.add_argument("--seed", required=True)
    p.add_argument("--once", action="store_true", help="exit after one session")
    p.set_defaults(func=cmd_demo_serve)
    p = dem.add_parser("connect")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, required=True)
    p.add_argument("--params", required=True)
    p.add_argument("--seed", required=True)
    p.set_defaults(func=cmd_demo_connect)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (MalformedInput, ExponentTooSmall, ComplementTooSmall) as exc:
        # an exponent too small for the sampled key is a bad user parameter
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MALFORMED
    except (OSError, json.JSONDecodeError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MALFORMED
    except BraidError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
