from itertools import permutations

import pytest
from hypothesis import given, strategies as st

from pinperm.decomp import (
    LEAF, MINUS, PLUS, PRIME, annotate, decompose, leaf, minus, plus, prime, to_dot,
    tree_to_permutation, validate,
)
from pinperm.perm import is_simple, standardize

FIG1 = (10, 13, 12, 11, 14, 1, 18, 19, 20, 21, 17, 16, 15, 4, 8, 3, 2, 9, 5, 6, 7)
SIMPLE_LABELS = [p for n in (4, 5) for p in permutations(range(1, n + 1)) if is_simple(p)]


def test_figure_tree_root():
    t = decompose(FIG1)
    assert t.kind == PRIME and t.label == (3, 1, 4, 2)
    sizes = [c.size for c in t.children]
    assert sizes == [5, 1, 7, 8]
    assert t.children[0].perm() == standardize(FIG1[:5])
    assert t.children[3].perm() == standardize(FIG1[13:])
    assert tree_to_permutation(t) == FIG1


def test_small_trees():
    assert decompose((1, 2, 3)) == plus(leaf(), leaf(), leaf())
    assert decompose((2, 4, 1, 3)) == prime((2, 4, 1, 3), *[leaf()] * 4)
    assert tree_to_permutation(plus(leaf(), minus(leaf(), leaf(), leaf()), leaf())) == (1, 4, 3, 2, 5)
    assert tree_to_permutation(leaf()) == (1,)


def test_validate_rejects_malformed():
    for bad in [
        plus(leaf()),
        plus(plus(leaf(), leaf()), leaf()),
        minus(leaf(), minus(leaf(), leaf())),
        prime((1, 2, 3, 4), *[leaf()] * 4),
        prime((2, 4, 1, 3), leaf()),
    ]:
        with pytest.raises(ValueError):
            validate(bad)


def test_roundtrip_all_small_permutations():
    for n in range(1, 9):
        for p in permutations(range(1, n + 1)):
            assert tree_to_permutation(decompose(p)) == p


def _trees(budget: int):
    """Valid trees with at most ``budget`` leaves."""
    def node(draw, budget, parent):
        if budget < 2 or draw(st.integers(0, 3)) == 0:
            return leaf(), 1
        kinds = [k for k in (PLUS, MINUS) if k != parent]
        if budget >= 4:
            kinds.append(PRIME)
        kind = draw(st.sampled_from(kinds))
        if kind == PRIME:
            label = draw(st.sampled_from([lab for lab in SIMPLE_LABELS if len(lab) <= budget]))
            arity = len(label)
        else:
            arity = draw(st.integers(2, min(budget, 4)))
        kids, used = [], 0
        for i in range(arity):
            room = budget - used - (arity - i - 1)
            child, k = node(draw, room, kind)
            kids.append(child)
            used += k
        if kind == PRIME:
            return prime(label, *kids), used
        return (plus if kind == PLUS else minus)(*kids), used

    return st.composite(lambda draw: node(draw, budget, None)[0])()


@given(_trees(15))
def test_decompose_inverts_tree_to_permutation(t):
    validate(t)
    assert decompose(tree_to_permutation(t)) == t


def _labels(t):
    if t.kind == PRIME:
        yield t.label
    for c in t.children:
        yield from _labels(c)


@given(st.permutations(range(1, 10)))
def test_prime_labels_are_simple(p):
    assert all(is_simple(lab) for lab in _labels(decompose(tuple(p))))


def test_annotate_flags():
    t = annotate(minus(leaf(), plus(leaf(), leaf())))
    assert t.inc_osc and not t.dec_osc
    lf = annotate(leaf())
    assert lf.inc_osc and lf.dec_osc
    q = annotate(decompose((2, 4, 1, 3)))
    assert q.label_inc_osc and q.label_dec_osc and q.quasi


def test_dot_shapes():
    dot = to_dot(decompose((2, 5, 3, 1, 4, 6)))
    assert dot.startswith("digraph T {")
    assert "shape=box" in dot and "shape=point" in dot and "shape=circle" in dot
    assert LEAF == "leaf"
