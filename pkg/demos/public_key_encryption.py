"""
Hybrid public-key encryption
============================

The key holder runs Alice's half once and publishes the result. An encryptor
runs a fresh Bob, hashes the exchanged braid into a keystream and XORs the
message with it.
"""

from braidcrypt.garside import format_nf
from braidcrypt.kx import KxParams, feasible_exponent
from braidcrypt.pke import Ciphertext, encapsulate, pke_decrypt, pke_keygen, recover_z
from braidcrypt.wire import armor
from braidcrypt.words import parse_word

n = 6
p = tuple(parse_word(t, n) for t in ("1 2", "3", "4 5 4"))
q = tuple(parse_word(t, n) for t in ("5 4", "2 1", "3 2"))
params = KxParams(n, p, q, k=1, h=1, L_min=2, L_max=5)  # k and h are not used here
d = feasible_exponent(p, params.L_max)

pk, sk = pke_keygen(params, d, b"keygen seed")
print("secret index sequence:", sk.seq, " d =", d)

message = "Braids are a fine place to hide a key.".encode()
enc = encapsulate(pk, message, b"encryption seed")
ct = enc.ciphertext
print("encryptor exponent t =", ct.t)
print("ciphertext (armored):", armor(ct.encode())[:72], "...")

# decryption works from the serialized bytes alone
received = Ciphertext.decode(ct.encode())
print("\nencryptor Z:", format_nf(enc.Z)[:60], "...")
print("decryptor Z matches:", recover_z(sk, pk, received) == enc.Z)
print("plaintext:", pke_decrypt(sk, pk, received).decode())
