"""
A seeded key exchange between Alice and Bob
===========================================

Both parties share public tuples p and q. Alice's secret is a product of p
entries and Bob's a product of q entries; each also holds a positive
complement that fills the secret up to an even power of Delta.
"""

from braidcrypt.garside import format_nf
from braidcrypt.kx import (
    KxParams,
    Role,
    alice_message,
    alice_shared,
    bob_message,
    bob_shared,
    feasible_exponent,
    kx_keygen,
)
from braidcrypt.words import parse_word

n = 8
p = tuple(parse_word(t, n) for t in ("1 2", "3 4 3", "5 6", "2 7"))
q = tuple(parse_word(t, n) for t in ("7 6", "4", "1 3 2", "6 5 4"))
L_max = 6

# the exponents must cover the worst secret either side can draw
k = feasible_exponent(p, L_max)
h = feasible_exponent(q, L_max)
params = KxParams(n, p, q, k, h, L_min=3, L_max=L_max)
print(f"B_{n}, k = {k}, h = {h}")

alice = kx_keygen(params, Role.ALICE, b"alice's seed")
bob = kx_keygen(params, Role.BOB, b"bob's seed")
print("Alice picks p indices", alice.seq)
print("Bob picks q indices  ", bob.seq)

# what goes over the wire
to_bob = alice_message(alice, params)
to_alice = bob_message(bob, params)
print("\nfirst entry Alice sends:", format_nf(to_bob.transformed[0]))

a = alice_shared(alice, to_alice, params)
b = bob_shared(bob, to_bob, params)
print("\nshared braid (Alice):", format_nf(a.value)[:70], "...")
print("identical normal forms:", a.value == b.value)
print("session key:", a.key.hex())
