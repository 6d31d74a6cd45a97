"""Word-level references for the automata tests."""

from __future__ import annotations

import itertools
import random

from pinperm import automata as am

A = "UDLR"


def first_end(xs, w: str):
    """End position of the earliest-ending occurrence of a word of ``xs``."""
    ends = [i + len(x) for x in xs for i in range(len(w) - len(x) + 1) if w.startswith(x, i)]
    return min(ends) if ends else None


def scanner_accepts(xs, w: str) -> bool:
    return first_end(xs, w) == len(w)


def all_words(max_len: int):
    for n in range(max_len + 1):
        for t in itertools.product(A, repeat=n):
            yield "".join(t)


def random_word_set(rng: random.Random, k_max: int = 6, len_min: int = 1, len_max: int = 7) -> list[str]:
    k = rng.randint(1, k_max)
    return sorted({"".join(rng.choice(A) for _ in range(rng.randint(len_min, len_max))) for _ in range(k)})


def random_text(rng: random.Random, max_len: int = 14) -> str:
    return "".join(rng.choice(A) for _ in range(rng.randint(0, max_len)))


def ac_instance(rng: random.Random) -> tuple[list[str], str]:
    """Random pattern set and text; half the texts end with a pattern so
    both outcomes are well represented."""
    xs = random_word_set(rng)
    w = random_text(rng)
    if rng.random() < 0.5:
        w = (w + rng.choice(xs))[-14:]
    return xs, w


def ac_instance_ok(xs, w) -> bool:
    return am.accepts(am.ac_first(xs), w) == scanner_accepts(xs, w)


def truncate(lang: set[str]) -> set[str]:
    """Words of ``lang`` with no proper prefix in ``lang``."""
    return {w for w in lang if not any(w[:i] in lang for i in range(len(w)))}


def set_operation_mismatches(rng: random.Random, max_len: int = 10) -> list[str]:
    """Compare product, intersection, complement and trim with set
    operations on the truncated languages of two random first-occurrence
    automata.  Returns a description of each disagreement."""
    x1 = random_word_set(rng, 3, 3, 5)
    x2 = random_word_set(rng, 3, 3, 5)
    d1, d2 = am.ac_first(x1), am.ac_first(x2)
    l1 = set(am.language_up_to(d1, max_len))
    l2 = set(am.language_up_to(d2, max_len))
    bad = []
    if set(am.language_up_to(am.union_product(d1, d2, loop=False), max_len)) != truncate(l1 | l2):
        bad.append(f"union {x1} {x2}")
    if set(am.language_up_to(am.intersect(d1, d2), max_len)) != l1 & l2:
        bad.append(f"intersect {x1} {x2}")
    if set(am.language_up_to(am.trim(d1), max_len)) != l1:
        bad.append(f"trim {x1}")
    looped = am.union_product(d1, d2, loop=True)
    comp = am.complement(am.complete(d1))
    samples = list(all_words(6)) + [random_text(rng, max_len) for _ in range(1500)]
    for w in samples:
        in1 = w in l1 if len(w) <= max_len else am.accepts(d1, w)
        if am.accepts(comp, w) == in1:
            bad.append(f"complement {x1} {w!r}")
            break
        has_prefix = any(w[:i] in l1 or w[:i] in l2 for i in range(len(w) + 1))
        if am.accepts(looped, w) != has_prefix:
            bad.append(f"looped union {x1} {x2} {w!r}")
            break
    return bad
