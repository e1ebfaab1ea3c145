"""Braid-group cryptography on the positive braid monoid.

Words and permutation braids live in :mod:`braidcrypt.words`, the left normal
form and its arithmetic in :mod:`braidcrypt.garside`. On top of those sit the
key exchange (:mod:`braidcrypt.kx`), the hybrid encryption scheme
(:mod:`braidcrypt.pke`), the hard problems with their brute-force solvers and
reductions (:mod:`braidcrypt.analysis`), and the canonical byte encodings
(:mod:`braidcrypt.wire`).
"""

from .garside import (
    NormalForm,
    complement,
    complement_nf,
    format_nf,
    inf_sup,
    left_normal_form,
    nf_inverse,
    nf_multiply,
    nf_to_word,
    shift_delta,
    simple_meet,
    words_equal,
)
from .kx import KxParams, Role, alice_message, alice_shared, bob_message, bob_shared, kx_keygen
from .pke import pke_decrypt, pke_encrypt, pke_keygen
from .words import (
    BraidWord,
    SimpleBraid,
    fundamental_braid,
    invert,
    multiply,
    parse_word,
    simple_to_word,
    tau,
    word_to_simple,
)

__version__ = "0.1.0"
