"""Brute-force ground truth: pin words by exhaustive decoding, simple
permutations and proper pin-permutations of a class by enumeration, and
membership in the union of gap languages of a permutation."""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator

from .config import ORACLE
from .perm import Perm, all_perms, avoids_all, contains_pattern, is_simple
from .pinword import DIRECTIONS, NUMERALS, in_L_of, phi_inverse


class BudgetError(ValueError):
    """Raised when an enumeration request exceeds the configured caps."""


def _candidates(box, pbox, last):
    """Next pins after a prefix, in float coordinates.

    Coordinates are dyadic with at most a handful of halvings, so floats are
    exact here; this is an independent re-derivation of the pin geometry used
    only as ground truth.
    """
    xmin, xmax, ymin, ymax = box
    for c in NUMERALS:
        yield c, (xmax + 1 if c in "14" else xmin - 1, ymax + 1 if c in "12" else ymin - 1)
    if last is None:
        return
    rxmin, rxmax, rymin, rymax = pbox
    px, py = last
    xm = (px + rxmax) / 2 if px > rxmax else (px + rxmin) / 2 if px < rxmin else None
    if xm is not None:
        yield "U", (xm, ymax + 1)
        yield "D", (xm, ymin - 1)
    ym = (py + rymax) / 2 if py > rymax else (py + rymin) / 2 if py < rymin else None
    if ym is not None:
        yield "R", (xmax + 1, ym)
        yield "L", (xmin - 1, ym)


def _perm_of(pts) -> Perm:
    ranks = {y: i for i, y in enumerate(sorted(y for _, y in pts), 1)}
    return tuple(ranks[y] for _, y in sorted(pts))


def _walk(max_len: int, prune=None, only_full: bool = False) -> Iterator[tuple[str, Perm]]:
    """Depth-first walk over valid pin words, yielding ``(word, perm)``.

    ``prune(perm)`` returning True cuts the subtree below a word.  With
    ``only_full`` only words of length ``max_len`` are yielded and inner
    permutations are computed only when pruning needs them.
    """
    origin_box = (0.0, 0.0, 0.0, 0.0)
    stack = [("", [], origin_box, None, None)]
    while stack:
        word, pts, box, pbox, last = stack.pop()
        for c, q in _candidates(box, pbox, last):
            w = word + c
            npts = pts + [q]
            full = len(w) == max_len
            perm = _perm_of(npts) if (full or prune is not None or not only_full) else None
            if prune is not None and prune(perm):
                continue
            if full or not only_full:
                yield w, perm
            if not full:
                nbox = (min(box[0], q[0]), max(box[1], q[0]), min(box[2], q[1]), max(box[3], q[1]))
                stack.append((w, npts, nbox, box, q))


@lru_cache(maxsize=None)
def _words_by_perm(n: int) -> dict[Perm, frozenset[str]]:
    out: dict[Perm, set[str]] = {}
    for w, q in _walk(n, only_full=True):
        out.setdefault(q, set()).add(w)
    return {q: frozenset(ws) for q, ws in out.items()}


_TABLE_LIMIT = 7


@lru_cache(maxsize=4096)
def enumerate_pin_words(p: Perm) -> frozenset[str]:
    """Every pin word decoding to ``p``.

    Up to size 7 all pin words of the length are generated once and grouped;
    beyond that prefixes are pruned as soon as their permutation is not a
    pattern of ``p`` (a prefix of a pin word encodes a pattern of the whole).
    """
    p = tuple(p)
    n = len(p)
    if n > ORACLE.max_pin_word_perm:
        raise BudgetError(f"size {n} exceeds oracle cap {ORACLE.max_pin_word_perm}")
    if n <= _TABLE_LIMIT:
        return _words_by_perm(n).get(p, frozenset())
    return frozenset(
        w for w, q in _walk(n, prune=lambda q: not contains_pattern(p, q), only_full=True) if q == p
    )


def all_pin_words_by_perm(n: int) -> dict[Perm, set[str]]:
    """Every pin word of length ``n`` grouped by the permutation it encodes."""
    if n > _TABLE_LIMIT:
        raise BudgetError(f"size {n} exceeds table cap {_TABLE_LIMIT}")
    return {q: set(ws) for q, ws in _words_by_perm(n).items()}


def is_pin_permutation_oracle(p: Perm) -> bool:
    return bool(enumerate_pin_words(tuple(p)))


def enumerate_simples_in_class(basis: Iterable[Perm], n: int) -> list[Perm]:
    """Simple permutations of size 4..n avoiding the basis."""
    if n > ORACLE.max_simple_size:
        raise BudgetError(f"size {n} exceeds oracle cap {ORACLE.max_simple_size}")
    basis = [tuple(b) for b in basis]
    out = []
    for k in range(4, n + 1):
        for p in all_perms(k):
            if is_simple(p) and avoids_all(p, basis):
                out.append(p)
    return out


def strict_words(max_len: int) -> Iterator[str]:
    """Strict pin words of length 1..max_len, via phi inverse on M."""
    yield from "1234"
    stack = [a + b + c for a in DIRECTIONS for b in DIRECTIONS for c in DIRECTIONS
             if (a in "LR") != (b in "LR") != (c in "LR")]
    while stack:
        m = stack.pop()
        if len(m) - 1 > max_len:
            continue
        yield phi_inverse(m)
        nxt = "UD" if m[-1] in "LR" else "LR"
        stack.extend(m + c for c in nxt)


def enumerate_proper_pins_in_class(basis: Iterable[Perm], max_len: int) -> list[Perm]:
    """Permutations decoded from strict pin words of length <= max_len that
    avoid the basis, deduplicated and sorted by size then value."""
    if max_len > ORACLE.max_word_len:
        raise BudgetError(f"length {max_len} exceeds oracle cap {ORACLE.max_word_len}")
    from .pinword import decode

    basis = [tuple(b) for b in basis]
    seen: set[Perm] = set()
    for w in strict_words(max_len):
        q = decode(w)
        if q not in seen and avoids_all(q, basis):
            seen.add(q)
    return sorted(seen, key=lambda q: (len(q), q))


def member_L_pi(p: Perm, m: str) -> bool:
    """``m`` lies in the union of gap languages of the pin words of ``p``."""
    if len(p) > ORACLE.max_member_perm:
        raise BudgetError(f"size {len(p)} exceeds oracle cap {ORACLE.max_member_perm}")
    return any(in_L_of(u, m) for u in enumerate_pin_words(tuple(p)))


def golden_lines(items: Iterable[str]) -> str:
    """Canonical golden-file body: sorted, newline separated, trailing newline."""
    return "".join(s + "\n" for s in sorted(items))


def _reversed_chains(p: Perm) -> set[tuple[frozenset[str], ...]]:
    """For each pin word of ``p``, the factor images of its gap language in
    reading order of the reversed word."""
    from .pinword import phi_set, snlf

    chains = set()
    for u in enumerate_pin_words(tuple(p)):
        parts = [frozenset(v[::-1] for v in phi_set(f)) for f in snlf(u)]
        chains.add(tuple(reversed(parts)))
    return chains


_ACCEPT = "accept"


@lru_cache(maxsize=None)
def _prefixes(xs: frozenset[str]) -> frozenset[str]:
    return frozenset(x[:i] for x in xs for i in range(1, len(x)))


@lru_cache(maxsize=None)
def _chain_step(rest: tuple[frozenset[str], ...], tail: str, c: str):
    """One letter of the greedy tracker for ``A* X1 A* X2 ... A*``: ``rest``
    is the chain still to match and ``tail`` the longest suffix of the text
    since the last match that is a proper prefix of a word of ``rest[0]``.
    Returns the new ``(rest, tail)`` or ``None`` once the chain is done."""
    xs = rest[0]
    t = tail + c
    if any(t.endswith(x) for x in xs):
        return None if len(rest) == 1 else (rest[1:], "")
    pre = _prefixes(xs)
    for i in range(len(t)):
        if t[i:] in pre:
            return rest, t[i:]
    return rest, ""


def _advance(state, c):
    if state == _ACCEPT:
        return state
    out = set()
    for rest, tail in state:
        nxt = _chain_step(rest, tail, c)
        if nxt is None:
            return _ACCEPT
        out.add(nxt)
    return frozenset(out)


def reversed_language_mismatch(p: Perm, d, max_len: int = ORACLE.max_word_len) -> str | None:
    """Shortest word of length at most ``max_len`` on which the automaton
    ``d`` and the reversed gap language of ``p`` disagree, or ``None``.

    The language side tracks, for every pin word of ``p``, the earliest
    completion of each gapped factor, which is exact for gap languages.
    """
    from collections import deque

    start = frozenset((chain, "") for chain in _reversed_chains(p))
    seen = {(d.initial, start)}
    queue = deque([(d.initial, start, "")])
    while queue:
        q, st, w = queue.popleft()
        if (q in d.finals) != (st == _ACCEPT):
            return w
        if len(w) == max_len or (st == _ACCEPT and d.final_has_full_loop(q)):
            continue
        for c in DIRECTIONS:
            nq = d.step(q, c)
            nst = _advance(st, c)
            if (nq, nst) not in seen:
                seen.add((nq, nst))
                queue.append((nq, nst, w + c))
    return None


def screen_family(kind, n: int) -> Perm:
    """A member of size about ``n`` of the simple family a screen counts,
    extended from one drawn example per kind.  Parallel alternations have
    even size and type-2 wedges odd size, so ``n`` is rounded down."""
    from .screens import ScreenKind

    kind = ScreenKind(kind)
    if kind is ScreenKind.PARALLEL:
        m = n // 2
        return tuple(range(2, 2 * m + 1, 2)) + tuple(range(1, 2 * m, 2))
    if kind is ScreenKind.WEDGE1:
        m = n // 2
        out: list[int] = []
        for i in range(1, m):
            out += [m + i, m - i]
        return tuple(out + [2 * m, m])
    m = (n - 1) // 2
    return tuple(range(2 * m, 3, -2)) + (1,) + tuple(range(3, 2 * m + 2, 2)) + (2,)


def family_avoiders(basis: Iterable[Perm], kind, sizes: Iterable[int]) -> dict[int, list[int]]:
    """For each symmetry, the family sizes whose image avoids the basis."""
    from .perm import apply_symmetry

    basis = [tuple(b) for b in basis]
    out: dict[int, list[int]] = {}
    for s in range(8):
        out[s] = [n for n in sizes if avoids_all(apply_symmetry(screen_family(kind, n), s), basis)]
    return out
