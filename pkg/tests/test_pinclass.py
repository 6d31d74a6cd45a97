from itertools import permutations
from math import comb

from hypothesis import given, strategies as st

from conftest import symmetries
from pinperm.decomp import decompose, leaf, minus, plus
from pinperm.oracle import enumerate_pin_words
from pinperm.perm import apply_symmetry, is_simple, standardize
from pinperm.pinclass import (
    ShapeTag, active_knights, classify_H, condition_C, describe_perm, expand, is_pin_perm,
    is_pin_permutation, oscillation, p1_words, pin_words, q_x, quasi_oscillations, recognize_oscillation,
    shuffle, symmetry_word, tree_of,
)
from pinperm.pinword import classify, is_strict, phi

PIN6 = [p for n in range(1, 7) for p in permutations(range(1, n + 1)) if is_pin_perm(p)]


def test_oscillation_formulas():
    assert oscillation("increasing", 9) == (2, 4, 1, 6, 3, 8, 5, 9, 7)
    assert {oscillation("increasing", 3, v) for v in (0, 1)} == {(2, 3, 1), (3, 1, 2)}
    assert (8, 10, 6, 9, 4, 7, 2, 5, 1, 3) in {oscillation("decreasing", 10, v) for v in (0, 1)}


def test_recognize_oscillation():
    assert {i.direction for i in recognize_oscillation((2, 4, 1, 3))} == {"increasing", "decreasing"}
    assert [i.direction for i in recognize_oscillation((2, 1))] == ["increasing"]
    assert recognize_oscillation((4, 7, 2, 6, 3, 1, 5)) == ()


def _inversion_graph_is_path(p):
    n = len(p)
    adj = {i: [j for j in range(n) if (i < j) == (p[i] > p[j]) and i != j] for i in range(n)}
    if n == 1:
        return True
    degs = sorted(len(v) for v in adj.values())
    if degs != [1, 1] + [2] * (n - 2):
        return False
    seen, stack = {0}, [0]
    while stack:
        for j in adj[stack.pop()]:
            if j not in seen:
                seen.add(j)
                stack.append(j)
    return len(seen) == n


def test_increasing_oscillations_are_inversion_paths():
    for n in range(1, 9):
        for p in permutations(range(1, n + 1)):
            inc = any(i.direction == "increasing" for i in recognize_oscillation(p))
            assert inc == _inversion_graph_is_path(p), p


def test_quasi_oscillations():
    four = {a: info for a, info in quasi_oscillations(4)}
    assert set(four) == {(2, 4, 1, 3), (3, 1, 4, 2)}
    assert all(len(info.choices) == 2 for _, info in quasi_oscillations(4))
    assert {a for a, _ in quasi_oscillations(5)} == {(2, 5, 3, 1, 4), (4, 1, 3, 5, 2)}
    assert (4, 1, 6, 3, 8, 5, 9, 7, 10, 2) in {a for a, _ in quasi_oscillations(10)}


def test_auxiliary_point_knights():
    for n in range(4, 9):
        for alpha, info in quasi_oscillations(n):
            knights = {frozenset(k) for k in active_knights(alpha)}
            for aux, _ in info.choices:
                assert sum(aux in k for k in knights) == (2 if n == 4 else 1)
                assert len(q_x(alpha, aux)) == (2 if n == 4 else 1)


def test_qx_empty_on_passive_points():
    assert [len(q_x((2, 4, 1, 6, 3, 5), x)) for x in range(1, 7)] == [1, 0, 1, 1, 0, 1]


def test_shape_examples():
    assert is_pin_permutation(tree_of((1, 2, 3, 4))) is not None
    assert is_pin_permutation(tree_of((4, 7, 2, 6, 3, 1, 5))) is None
    assert is_pin_permutation(tree_of((4, 6, 2, 3, 1, 5))) is not None
    assert isinstance(is_pin_permutation(tree_of((2, 4, 1, 3))), ShapeTag)


def test_small_pin_word_sets():
    assert pin_words((1,)) == frozenset("1234")
    assert len(pin_words((2, 1))) == 16
    assert p1_words((2, 3, 1)) == frozenset({"3DL"})
    assert len(pin_words((2, 4, 1, 3))) == 48


def test_shuffle():
    a = [{"x"}, {"aay"}, {"aa"}]
    b = [{"b"}, {"b", "xy"}]
    out = shuffle(a, b)
    assert len(out) == 20
    assert {"x" "aay" "aa" "b" "b", "b" "xy" "x" "aay" "aa"} <= out
    assert shuffle(a, []) == {"xaayaa"}
    assert len(shuffle([{"a"}] * 3, [{"b"}] * 2)) == comb(5, 2)


def test_description_matches_oracle_small():
    for p in PIN6:
        if len(p) <= 5:
            assert expand(describe_perm(p)) == enumerate_pin_words(p), p


def test_recognition_matches_oracle():
    for n in range(1, 7):
        for p in permutations(range(1, n + 1)):
            assert is_pin_perm(p) == bool(enumerate_pin_words(p)), p


def test_pattern_closure():
    pins = set(PIN6)
    for p in PIN6:
        for i in range(len(p)):
            q = standardize(p[:i] + p[i + 1 :])
            assert not q or q in pins, (p, q)


def test_simple_words_are_proper():
    for p in PIN6:
        if is_simple(p):
            assert all(classify(w) in ("strict", "quasi-strict") for w in pin_words(p))


@given(st.sampled_from(PIN6), symmetries)
def test_pin_words_commute_with_symmetry(p, s):
    assert pin_words(apply_symmetry(p, s)) == {symmetry_word(w, s) for w in pin_words(p)}


@given(st.sampled_from(sorted({w for p in PIN6 for w in pin_words(p) if is_strict(w)})), symmetries)
def test_phi_commutes_with_letter_maps(u, s):
    image = phi(u)
    mapped = phi(symmetry_word(u, s))
    if isinstance(image, frozenset):
        assert mapped == {symmetry_word(v, s) for v in image}
    else:
        assert mapped == symmetry_word(image, s)


def test_h_classification():
    t = plus(minus(leaf(), plus(leaf(), leaf())), leaf())
    assert t.perm() == (3, 1, 2, 4)
    assert classify_H(tree_of(t.perm()))[0] == "1H1"
    # both neighbours of the candidate are non-leaf oscillations
    assert classify_H(tree_of((2, 1, 5, 3, 4, 7, 6))) is None


def test_condition_c():
    assert condition_C(tree_of((2, 5, 1, 3, 4)))
    assert not condition_C(tree_of((2, 5, 1, 4, 3)))  # wrong linear kind at the auxiliary point
    assert not condition_C(tree_of((2, 4, 5, 1, 3)))  # expands a non-auxiliary point
    assert not condition_C(decompose((1, 2, 3)))
