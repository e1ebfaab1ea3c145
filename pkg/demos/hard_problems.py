"""
Conjugacy search and exchange decomposition at toy scale
========================================================

Brute-force solvers for both problems, and the two reductions that turn a
solver for one into a solver for the other.
"""

from braidcrypt.analysis import (
    CspInstance,
    EdpInstance,
    csp_bruteforce,
    csp_to_edp,
    edp_bruteforce,
    edp_to_csp,
    generate_planted_csp,
    generate_planted_edp,
)
from braidcrypt.garside import words_equal
from braidcrypt.words import BraidWord, fundamental_braid, parse_word


def show(pairs):
    return ", ".join(f"({s}, {t})" for s, t in pairs)


# decomposing U = a_1 a_2, V = a_2 a_1
inst = EdpInstance(parse_word("1 2", 3), parse_word("2 1", 3))
print("EDP a_1a_2 / a_2a_1:", show(edp_bruteforce(inst, 2)))

# Delta only splits trivially
d = fundamental_braid(3)
print("EDP Delta / Delta:  ", show(edp_bruteforce(EdpInstance(d, d), 3)))

# every conjugator of a_1 to a_2 up to length 2
conj = csp_bruteforce(CspInstance(parse_word("1", 3), parse_word("2", 3)), 2)
print("CSP a_1 -> a_2:     ", ", ".join(str(s) for s in conj))

# A planted conjugacy instance, solved through a group-level decomposition
# search. The cofactor x s^-1 is usually not positive.
csp = generate_planted_csp(3, 4, 3, seed=7)
s = csp_to_edp(csp, lambda e: edp_bruteforce(e, 3, monoid=False))
print("\nplanted conjugator:", csp.planted, " recovered:", s)
print("recovered one conjugates x to y:", words_equal(csp.y, s * csp.x * s ** -1))

# the other direction: a conjugator t of U to V gives s = U t^-1
edp = generate_planted_edp(3, 2, 3, seed=11)
s, t = edp_to_csp(edp, lambda c: csp_bruteforce(c, 3))
print("\nplanted (s, t):", show([edp.planted]), " recovered:", show([(s, t)]))
print("s t == U and t s == V:", words_equal(s * t, edp.U) and words_equal(t * s, edp.V))
print("U = V = e:", show(edp_bruteforce(EdpInstance(BraidWord(3), BraidWord(3)), 0)))
