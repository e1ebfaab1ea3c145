"""
Braid words and the left normal form
====================================

Build a few braids, put them into left normal form, and watch equal braids
collapse onto the same canonical data.
"""

from braidcrypt import garside, words

# a_1 a_2 a_1 and a_2 a_1 a_2 are two spellings of the half twist in B_3
x = words.parse_word("1 2 1", 3)
y = words.parse_word("2 1 2", 3)
print("x =", x, "  y =", y)
print("NF(x) =", garside.format_nf(garside.left_normal_form(x)))
print("equal:", garside.words_equal(x, y))

# A longer mixed-sign word in B_5. The normal form is Delta^inf followed by
# permutation braids, each left-weighted against its successor.
w = words.parse_word("1 -3 2 2 4 -1 3 3 2", 5)
nf = garside.left_normal_form(w)
print("\nw =", w)
print("NF(w) =", garside.format_nf(nf))
print("inf, sup, canonical length =", garside.inf_sup(nf))

# the factors are stored as permutation tables
for f in nf.factors:
    print("  factor", f.perm, "starting set", sorted(garside.starting_set(f)),
          "finishing set", sorted(garside.finishing_set(f)))

# Delta^2 commutes with everything
d2 = words.fundamental_braid(5) ** 2
print("\nDelta^2 w == w Delta^2:", garside.words_equal(d2 * w, w * d2))

# tau is conjugation by Delta: x Delta = Delta tau(x)
d = words.fundamental_braid(5)
print("w Delta == Delta tau(w):", garside.words_equal(w * d, d * words.tau(w)))

# For a positive braid, complement(x, m) fills it up to Delta^m provided m >= sup
p = words.parse_word("1 2 2 3 1", 4)
sup = garside.left_normal_form(p).sup
c = garside.complement(p, sup)
print("\np =", p, " sup =", sup)
print("complement(p, sup) =", c)
print("p * complement == Delta^sup:", garside.words_equal(p * c, words.fundamental_braid(4) ** sup))
try:
    garside.complement(p, sup - 1)
except Exception as exc:
    print("one less fails:", type(exc).__name__)
