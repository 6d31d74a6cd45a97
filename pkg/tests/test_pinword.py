import random

import pytest
from hypothesis import given, strategies as st

from conftest import GOLDEN
from pinperm.oracle import enumerate_pin_words, member_L_pi, strict_words
from pinperm.perm import contains_pattern, standardize
from pinperm.pinclass import is_pin_perm
from pinperm.pinword import (
    PHI_SINGLE, PHI_TABLE, classify, decode, decode_points, in_L_of, in_L_of_greedy, in_M, is_pin_word,
    is_strict, leq, leq_literal, perm_points, phi, phi_inverse, phi_inverse2, quadrant_of_points, snlf,
    words_of_representation,
)

STRICT6 = [w for w in strict_words(6) if len(w) >= 2]
STRICT8 = sorted(strict_words(8))
strict8 = st.sampled_from(STRICT8)


def test_phi_table_matches_transcription():
    rows = set()
    for k, v in PHI_TABLE.items():
        rows.add(f"{k} {v}")
    for k, vs in PHI_SINGLE.items():
        rows |= {f"{k} {v}" for v in vs}
    assert sorted(rows) == (GOLDEN / "phi_table.txt").read_text().split("\n")[:-1]


def test_decode_examples():
    assert decode("14L2UR") == decode("3DL2UR") == (4, 6, 2, 3, 1, 5)
    assert decode("1") == (1,)
    assert not is_pin_word("1UU") and not is_pin_word("U1")
    with pytest.raises(ValueError):
        decode("R")


def test_classify_and_snlf():
    assert classify("3DL2UR") == "other"
    assert classify("1R") == "strict"
    assert classify("14U") == "quasi-strict"
    assert snlf("14L2UR") == ["1", "4L", "2UR"]
    assert snlf("1") == ["1"]
    assert snlf("1R2U3D") == ["1R", "2U", "3D"]


def test_phi_examples():
    assert phi("1R") == "RUR" and phi("3D") == "DLD"
    assert phi("1") == frozenset({"UR", "RU"})
    assert phi_inverse2("RU") == "1" and phi_inverse2("DL") == "3" and phi_inverse2("UL") == "2"
    assert phi_inverse("RURD") == "1RD"
    with pytest.raises(ValueError):
        phi("14U")


def test_leq_examples():
    assert leq("14L2UR", "2RU4LULURD4L")
    assert leq_literal("14L2UR", "2RU4LULURD4L")
    assert not leq("1R", "3D")
    assert in_L_of("1", "UR") and not in_L_of("1R", "RUL")


def test_words_of_representation_counts():
    pts = decode_points("14L2UR")[1:]
    xs, ys = sorted(q[0] for q in pts), sorted(q[1] for q in pts)
    rep = [(xs.index(x) + 1, ys.index(y) + 1) for x, y in pts]
    words = words_of_representation(rep)
    assert {"14L2UR", "3DL2UR"} <= words
    assert all(decode(w) == (4, 6, 2, 3, 1, 5) for w in words)
    assert len(words_of_representation(perm_points((1, 2), (1, 2)))) == 8
    # third point separating the first two
    assert len(words_of_representation(perm_points((1, 3, 2), (1, 2, 3)))) == 6
    assert len(words_of_representation(perm_points((2, 3, 1), (1, 2, 3)))) == 8


@given(strict8)
def test_phi_bijection_onto_alternating_words(u):
    images = phi(u) if len(u) == 1 else {phi(u)}
    for m in images:
        assert in_M(m) and phi_inverse(m) == u
        assert len(m) == len(u) + 1


def _quadrant(p, box):
    xmin, xmax, ymin, ymax = box
    right, up = p[0] > xmax, p[1] > ymax
    assert right or p[0] < xmin
    assert up or p[1] < ymin
    return {(True, True): "1", (False, True): "2", (False, False): "3", (True, False): "4"}[(right, up)]


@given(st.sampled_from([w for w in STRICT8 if len(w) >= 2]))
def test_local_quadrants_match_geometry(u):
    pts = decode_points(u)
    want = []
    for i in range(2, len(pts)):
        prior = pts[: i - 1]
        xs, ys = [q[0] for q in prior], [q[1] for q in prior]
        want.append(_quadrant(pts[i], (min(xs), max(xs), min(ys), max(ys))))
    assert quadrant_of_points(u) == want


def test_order_is_factor_order_exhaustive():
    for u in STRICT6:
        pu = phi(u)
        for w in STRICT6:
            assert leq(u, w) == (pu in phi(w)), (u, w)


@given(st.sampled_from([w for w in STRICT6 if len(w) <= 4]), st.text("1234UDLR", min_size=1, max_size=7))
def test_two_order_routes_agree(u, w):
    if is_pin_word(w):
        assert leq(u, w) == leq_literal(u, w)


@given(strict8, strict8)
def test_order_implies_containment(u, w):
    if leq(u, w):
        assert contains_pattern(decode(w), decode(u))


@given(st.sampled_from(STRICT8), st.text("UDLR", max_size=12))
def test_greedy_membership_matches_full_search(u, m):
    assert in_L_of(u, m) == in_L_of_greedy(u, m)


def _pin_perms_upto(n):
    from itertools import permutations

    return [p for k in range(1, n + 1) for p in permutations(range(1, k + 1)) if is_pin_perm(p)]


PIN5 = _pin_perms_upto(5)


def _alt(max_len):
    out = []
    frontier = [c for c in "UDLR"]
    while frontier:
        out += frontier
        frontier = [m + c for m in frontier if len(m) < max_len for c in ("UD" if m[-1] in "LR" else "LR")]
    return out


@given(st.sampled_from(PIN5), st.data())
def test_languages_shrink_along_patterns(sigma, data):
    idx = sorted(data.draw(st.sets(st.integers(0, len(sigma) - 1), min_size=1)))
    pi = standardize([sigma[i] for i in idx])
    rng = random.Random(data.draw(st.integers(0, 10**6)))
    words = _alt(9)
    for m in rng.sample(words, 60):
        if member_L_pi(sigma, m):
            assert member_L_pi(pi, m)


PROPER6 = sorted({decode(w) for w in strict_words(6)})


@given(st.sampled_from(PROPER6), st.data())
def test_containment_is_membership_of_phi(sigma, data):
    w = data.draw(st.sampled_from(sorted(u for u in enumerate_pin_words(sigma) if is_strict(u))))
    m = data.draw(st.sampled_from(sorted(phi(w)))) if len(w) == 1 else phi(w)
    for _ in range(4):
        k = data.draw(st.integers(1, len(sigma)))
        pi = data.draw(st.permutations(range(1, k + 1)).map(tuple))
        if is_pin_perm(pi):
            assert contains_pattern(sigma, pi) == member_L_pi(pi, m), (sigma, w, pi)
