import json
import random

import pytest
from hypothesis import given, strategies as st

from pinperm import automata as am
from pinperm.decide import (
    Verdict, WitnessError, accepted_words, build_A_C, cross_check, decide, proper_pins_of, pump_witness,
    random_basis,
)
from pinperm.oracle import enumerate_proper_pins_in_class
from pinperm.perm import avoids_all
from pinperm.pinclass import tree_of


def test_reference_verdicts():
    v = decide([(2, 4, 1, 3), (3, 1, 4, 2)])
    assert v.finite and v.witness is None
    v = decide([(1, 2, 3)])
    assert not v.finite and not v.stages["parallel"] and v.witness is not None
    assert decide([(1, 2, 3), (3, 2, 1)]).finite
    assert set(decide([(1, 2)]).stages) == {"parallel", "wedge1", "wedge2", "proper_pins"}


def test_basis_normalization_notes():
    v = decide([(1, 2, 3, 4, 5), (1, 2, 3, 4, 5, 6), (4, 7, 2, 6, 3, 1, 5)])
    assert v.stats["basis"] == ["12345", "4726315"]
    assert len(v.stats["notes"]) == 2
    assert not decide([]).finite


def test_A_C_examples():
    assert accepted_words(build_A_C([tree_of((1,))])) == []
    everything = am.trim(build_A_C([]))
    assert am.equivalent(everything, am.automaton_M()) is None
    words = am.language_up_to(am.trim(build_A_C([(2, 1)])), 9)
    assert words
    from pinperm.decide import decode_accepted

    assert all(avoids_all(decode_accepted(w), [(2, 1)]) for w in words)


def test_pump_witness():
    basis = [(2, 4, 1, 3)]
    a_c = am.trim(build_A_C(basis))
    w = pump_witness(a_c, basis, 3)
    sizes = [len(s) if " " not in s else len(s.split()) for s in w.samples]
    assert len(w.samples) == 4 and sizes == sorted(set(sizes))
    assert am.accepts(a_c, w.prefix + w.suffix)
    with pytest.raises(WitnessError):
        pump_witness(a_c, [(1,)], 3)
    with pytest.raises(WitnessError):
        pump_witness(am.trim(build_A_C([(1, 2)])), [(1, 2)])


def test_finite_language_is_stable():
    a_c = am.trim(build_A_C([(1, 2, 3), (3, 2, 1)]))
    words = accepted_words(a_c)
    longest = max(map(len, words))
    assert am.language_up_to(a_c, longest + a_c.n_states) == words
    assert proper_pins_of(a_c) == enumerate_proper_pins_in_class([(1, 2, 3), (3, 2, 1)], 9)


def test_json_roundtrip():
    for basis in ([(1, 2, 3)], [(2, 4, 1, 3), (3, 1, 4, 2)]):
        v = decide(basis)
        back = Verdict.from_dict(json.loads(v.to_json()))
        assert back.to_dict() == v.to_dict()
        assert set(json.loads(v.to_json())) == {"finite", "stages", "witness", "stats"}


@given(st.integers(0, 10**9))
def test_random_bases_are_consistent(seed):
    basis = random_basis(random.Random(seed))
    assert cross_check(basis, max_len=7) == []


def test_exact_mode_agrees():
    rng = random.Random(5)
    for _ in range(15):
        basis = random_basis(rng)
        assert decide(basis, "exact").finite == decide(basis, "optimized").finite
