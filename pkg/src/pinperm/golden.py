"""Derived golden files: each entry is recomputed from the oracle or the
builder and must match the frozen copy under ``tests/golden`` byte for byte."""

from __future__ import annotations

from typing import Callable

from . import automata as am
from .builder import BuildMode, build_A_pi_perm
from .oracle import enumerate_pin_words, enumerate_proper_pins_in_class, golden_lines
from .perm import fmt, parse_perm

PROPER_PIN_BASES = ("2413 3142", "123 321", "123")
PROPER_PIN_LEN = 9


def proper_pin_counts() -> str:
    rows = []
    for text in PROPER_PIN_BASES:
        basis = [parse_perm(t) for t in text.split()]
        n = len(enumerate_proper_pins_in_class(basis, PROPER_PIN_LEN))
        rows.append(f"{text.replace(' ', ',')} L={PROPER_PIN_LEN} {n}")
    return golden_lines(rows)


def pin_words_21() -> str:
    return golden_lines(enumerate_pin_words((2, 1)))


def pin_word_counts() -> str:
    """Number of pin words of each pin-permutation of size 3 and 4."""
    from itertools import permutations

    rows = []
    for n in (3, 4):
        for p in permutations(range(1, n + 1)):
            k = len(enumerate_pin_words(p))
            if k:
                rows.append(f"{fmt(p)} {k}")
    return golden_lines(rows)


def automaton_dot(perm: str, mode: str) -> Callable[[], str]:
    return lambda: am.to_dot(build_A_pi_perm(parse_perm(perm), BuildMode(mode)), "A") + "\n"


DERIVED: dict[str, Callable[[], str]] = {
    "proper_pin_counts.txt": proper_pin_counts,
    "pin_words_21.txt": pin_words_21,
    "pin_word_counts.txt": pin_word_counts,
    "A_2413_exact.dot": automaton_dot("2413", "exact"),
    "A_2413_optimized.dot": automaton_dot("2413", "optimized"),
    "A_25314_exact.dot": automaton_dot("25314", "exact"),
}
