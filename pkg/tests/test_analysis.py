import pytest

from braidcrypt.analysis import (
    CspInstance,
    EdpInstance,
    csp_bruteforce,
    csp_to_edp,
    edp_bruteforce,
    edp_to_csp,
    elements_by_length,
    generate_planted_csp,
    generate_planted_edp,
)
from braidcrypt.errors import ReductionFailed
from braidcrypt.garside import left_normal_form, words_equal
from braidcrypt.words import BraidWord, fundamental_braid, invert, parse_word


def W(text, n):
    return parse_word(text, n)


def conjugates(s, x, y):
    return words_equal(y, s * x * invert(s))


def test_elements_by_length_counts():
    # positive B_3 elements by letter count: 1, 2, 4, 7 (the monoid growth series)
    counts = {}
    for length, _ in elements_by_length(3, 3, positive=True):
        counts[length] = counts.get(length, 0) + 1
    assert counts == {0: 1, 1: 2, 2: 4, 3: 7}
    group = list(elements_by_length(3, 1, positive=False))
    assert len(group) == 5


def test_edp_examples():
    pairs = edp_bruteforce(EdpInstance(W("1 2", 3), W("2 1", 3)), 2)
    assert (W("1", 3), W("2", 3)) in pairs
    for s, t in pairs:
        assert words_equal(s * t, W("1 2", 3)) and words_equal(t * s, W("2 1", 3))

    d = fundamental_braid(3)
    pairs = edp_bruteforce(EdpInstance(d, d), 3)
    assert len(pairs) == 2
    assert {(left_normal_form(s), left_normal_form(t)) for s, t in pairs} == {
        (left_normal_form(BraidWord(3)), left_normal_form(d)),
        (left_normal_form(d), left_normal_form(BraidWord(3))),
    }
    assert edp_bruteforce(EdpInstance(BraidWord(3), BraidWord(3)), 3) == [(BraidWord(3), BraidWord(3))]


def test_edp_output_is_sorted_and_unique():
    inst = EdpInstance(W("1 2 1 2", 3), W("2 1 2 1", 3))
    pairs = edp_bruteforce(inst, 4)
    keys = [(len(s), s.letters, len(t), t.letters) for s, t in pairs]
    assert len(set(keys)) == len(keys)
    assert pairs == edp_bruteforce(inst, 4)


def test_edp_monoid_rejects_nonpositive_instance():
    assert edp_bruteforce(EdpInstance(W("1 -2", 3), W("-2 1", 3)), 2) == []
    group = edp_bruteforce(EdpInstance(W("1 -2", 3), W("-2 1", 3)), 1, monoid=False)
    assert any(words_equal(s, W("1", 3)) for s, _ in group)


def test_planted_edp_found():
    for seed in range(20):
        inst = generate_planted_edp(4, 2, 2, seed)
        s, t = inst.planted
        pairs = edp_bruteforce(inst, 2)
        assert any(words_equal(a, s) and words_equal(b, t) for a, b in pairs)


def test_planted_generators():
    inst = generate_planted_edp(3, 0, 0, 1)
    assert inst.U == BraidWord(3) and inst.V == BraidWord(3)
    assert generate_planted_edp(4, 3, 2, "x") == generate_planted_edp(4, 3, 2, "x")
    csp = generate_planted_csp(3, 4, 3, 7)
    assert conjugates(csp.planted, csp.x, csp.y)
    assert generate_planted_csp(3, 4, 3, 7) == csp


def test_instance_invariants_checked():
    with pytest.raises(ValueError):
        EdpInstance(W("1", 3), W("2", 3), planted=(W("1", 3), W("1", 3)))
    with pytest.raises(ValueError):
        CspInstance(W("1", 3), W("2", 3), planted=BraidWord(3))


def test_csp_examples():
    x, y = W("1", 3), W("2", 3)
    found = csp_bruteforce(CspInstance(x, y), 2)
    assert found and all(conjugates(s, x, y) for s in found)
    assert any(words_equal(s, W("1 2", 3)) for s in found)
    # the reverse order conjugates a_1 to a_1^{-1} a_2 a_1, which is not a_2
    assert not conjugates(W("2 1", 3), x, y)
    assert not any(words_equal(s, W("2 1", 3)) for s in found)

    same = csp_bruteforce(CspInstance(W("1 2", 3), W("1 2", 3)), 1)
    assert any(words_equal(s, BraidWord(3)) for s in same)
    assert csp_bruteforce(CspInstance(W("1", 3), W("1 1", 3)), 3) == []


def group_edp(inst):
    return edp_bruteforce(inst, 3, monoid=False)


def test_csp_to_edp_examples():
    x, s = W("1", 3), W("2", 3)
    y = s * x * invert(s)
    c = W("1 -2", 3)
    assert words_equal(s * c, y) and words_equal(c * s, x)
    got = csp_to_edp(CspInstance(x, y), group_edp)
    assert conjugates(got, x, y)

    x = W("1 2", 3)
    got = csp_to_edp(CspInstance(x, x), group_edp)
    assert conjugates(got, x, x)


def test_csp_to_edp_failure():
    with pytest.raises(ReductionFailed):
        csp_to_edp(CspInstance(W("1", 3), W("1 1", 3)), group_edp)
    with pytest.raises(ReductionFailed):
        csp_to_edp(CspInstance(W("1", 3), W("2", 3)), lambda inst: [(BraidWord(3), BraidWord(3))])


def test_edp_to_csp_examples():
    U, V = W("1 2", 3), W("2 1", 3)
    assert conjugates(W("2", 3), U, V)
    s, t = edp_to_csp(EdpInstance(U, V), lambda inst: csp_bruteforce(inst, 2))
    assert words_equal(s * t, U) and words_equal(t * s, V)

    s, t = edp_to_csp(EdpInstance(U, U), lambda inst: [BraidWord(3)])
    assert words_equal(s, U) and t == BraidWord(3)


def test_edp_to_csp_failure():
    with pytest.raises(ReductionFailed):
        edp_to_csp(EdpInstance(W("1", 3), W("1 1", 3)), lambda inst: [])
    with pytest.raises(ReductionFailed):
        edp_to_csp(EdpInstance(W("1 2", 3), W("2 1", 3)), lambda inst: [W("1", 3)])


def test_planted_reductions_small_batch():
    for seed in range(10):
        csp = generate_planted_csp(3, 3, 2, seed)
        assert conjugates(csp_to_edp(csp, group_edp), csp.x, csp.y)
        edp = generate_planted_edp(3, 2, 2, seed)
        s, t = edp_to_csp(edp, lambda inst: csp_bruteforce(inst, 2))
        assert words_equal(s * t, edp.U) and words_equal(t * s, edp.V)
