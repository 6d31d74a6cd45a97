"""One test per acceptance criterion; each prints a PASS/FAIL line and the
session summary repeats them."""

import random
from itertools import permutations

from conftest import GOLDEN, criterion
from naive import ac_instance, ac_instance_ok, set_operation_mismatches
from pinperm import automata as am
from pinperm.builder import BuildMode, build_A_pi_perm
from pinperm.decide import cross_check, decide, proper_pins_of, build_A_C, random_basis
from pinperm.decomp import decompose
from pinperm.oracle import (
    enumerate_pin_words, enumerate_proper_pins_in_class, enumerate_simples_in_class, member_L_pi,
    reversed_language_mismatch,
)
from pinperm.perm import inflate, is_simple
from pinperm.pinclass import describe_perm, expand, is_pin_perm, pin_words_of_simple
from pinperm.pinword import PHI_SINGLE, PHI_TABLE, classify, decode, leq, phi, snlf

FIG1 = (10, 13, 12, 11, 14, 1, 18, 19, 20, 21, 17, 16, 15, 4, 8, 3, 2, 9, 5, 6, 7)


def _pins(lo, hi):
    return [p for n in range(lo, hi + 1) for p in permutations(range(1, n + 1)) if is_pin_perm(p)]


def test_criterion_1_phi_table():
    with criterion("1", "phi table: 16 entries and 8 length-one pairs", 1):
        want = {}
        for line in (GOLDEN / "phi_table.txt").read_text().splitlines():
            k, v = line.split()
            want.setdefault(k, set()).add(v)
        assert len(want) == 20 and sum(map(len, want.values())) == 24
        for k, vs in want.items():
            if len(k) == 2:
                assert PHI_TABLE[k] == next(iter(vs)) == phi(k)
            else:
                assert PHI_SINGLE[k] == vs == phi(k)
        assert len(PHI_TABLE) == 16 and len(PHI_SINGLE) == 4


def test_criterion_2_worked_examples():
    with criterion("2", "decode, snlf, order, inflate and tree-root examples", 1):
        assert decode("14L2UR") == decode("3DL2UR") == (4, 6, 2, 3, 1, 5)
        assert snlf("14L2UR") == ["1", "4L", "2UR"]
        assert leq("14L2UR", "2RU4LULURD4L")
        assert inflate((1, 3, 2), [(2, 1), (1, 3, 2), (1,)]) == (2, 1, 4, 6, 5, 3)
        assert decompose(FIG1).label == (3, 1, 4, 2)


def test_criterion_3_simple_word_bounds():
    with criterion("3", "simples up to size 7 have at most 48 proper pin words", 120):
        worst = 0
        for n in range(4, 8):
            for p in permutations(range(1, n + 1)):
                if is_simple(p):
                    words = pin_words_of_simple(p)
                    worst = max(worst, len(words))
                    assert len(words) <= 48, p
                    assert all(classify(w) in ("strict", "quasi-strict") for w in words), p
        assert len(pin_words_of_simple((2, 4, 1, 3))) == 48 == worst


def _symbolic_matches_oracle(sizes):
    for p in _pins(*sizes):
        assert expand(describe_perm(p)) == enumerate_pin_words(p), p


def test_criterion_4a_symbolic_words_up_to_6():
    with criterion("4a", "symbolic pin words = brute force, sizes 1..6", 120):
        _symbolic_matches_oracle((1, 6))


def test_criterion_4b_symbolic_words_size_7():
    with criterion("4b", "symbolic pin words = brute force, size 7", 900):
        _symbolic_matches_oracle((7, 7))


def test_criterion_5_automata():
    with criterion("5", "exact automata = oracle at length 9; optimized = exact on M", 600):
        m = am.automaton_M()
        rng = random.Random(2024)
        for p in _pins(1, 6):
            exact = build_A_pi_perm(p, BuildMode.EXACT)
            assert reversed_language_mismatch(p, exact, 9) is None, p
            for _ in range(5):
                w = "".join(rng.choice("UDLR") for _ in range(rng.randint(2, 9)))
                assert am.accepts(exact, w[::-1]) == member_L_pi(p, w), (p, w)
            opt = build_A_pi_perm(p, BuildMode.OPTIMIZED)
            assert am.equivalent(am.intersect(exact, m), am.intersect(opt, m)) is None, p


def test_criterion_6_reference_verdicts():
    with criterion("6", "reference bases decide as expected", 300):
        sep = [(2, 4, 1, 3), (3, 1, 4, 2)]
        assert decide(sep).finite
        assert enumerate_simples_in_class(sep, 8) == []
        v = decide([(1, 2, 3)])
        assert not v.finite and not v.stages["parallel"]
        assert decide([(1, 2, 3), (3, 2, 1)]).finite
        v = decide([(1, 2)])
        assert v.stages["proper_pins"]
        found = proper_pins_of(am.trim(build_A_C([(1, 2)])))
        assert set(enumerate_proper_pins_in_class([(1, 2)], 9)) <= set(found)
        assert all(len(p) > 9 or p in enumerate_proper_pins_in_class([(1, 2)], 9) for p in found)


def test_criterion_7_random_bases():
    with criterion("7", "200 random bases agree with the oracle or pump", 1200):
        rng = random.Random(7)
        finite = 0
        for _ in range(200):
            basis = random_basis(rng, 3, 5)
            assert cross_check(basis, max_len=8) == [], basis
            finite += decide(basis).stages["proper_pins"]
        assert 0 < finite < 200


def test_criterion_8_automata_library():
    with criterion("8", "1000 first-occurrence instances and set operations", 120):
        rng = random.Random(8)
        for _ in range(1000):
            xs, w = ac_instance(rng)
            assert ac_instance_ok(xs, w), (xs, w)
        for _ in range(20):
            assert set_operation_mismatches(rng, max_len=10) == []
