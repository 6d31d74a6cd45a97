"""Oscillations, quasi-oscillations, recognition of pin-permutation trees and
the recursive symbolic description of the pin words of a pin-permutation.

Everything here works on one-line permutations and 1-based positions.  The
case analysis of a permutation (``analyze``) is shared by the symbolic
description (``describe_pin_words``) and by the automaton builder.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from itertools import combinations, product
from typing import Iterable, Optional, Sequence, Union as TUnion

from . import decomp
from .decomp import LEAF, MINUS, PLUS, PRIME, DecompTree, QuasiTag
from .perm import Perm, apply_symmetry, inverse, is_simple, reverse, standardize
from .pinword import DIRECTIONS, NUMERALS, _letter_for, classify, words_of_representation

INCREASING, DECREASING = "increasing", "decreasing"

# ---------------------------------------------------------------------------
# letter maps for the eight symmetries (bits as in perm.apply_symmetry)

_REV = str.maketrans("1234LRUD", "2143RLUD")
_COMP = str.maketrans("1234LRUD", "4321LRDU")
_INV = str.maketrans("1234LRUD", "1432DURL")


def symmetry_word(word: str, s: int) -> str:
    """Image of a pin word under symmetry ``s``: if ``u`` encodes ``p`` then
    ``symmetry_word(u, s)`` encodes ``apply_symmetry(p, s)``."""
    if s & 4:
        word = word.translate(_INV)
    if s & 2:
        word = word.translate(_COMP)
    if s & 1:
        word = word.translate(_REV)
    return word


def mirror(word: str) -> str:
    """Letter relabeling matching the reverse of a permutation."""
    return word.translate(_REV)


# ---------------------------------------------------------------------------
# oscillations


@dataclass(frozen=True)
class OscillationInfo:
    direction: str
    size: int
    knight_type: Optional[tuple[str, str]]
    variant: int


def _increasing_oscillation(n: int, variant: int) -> Perm:
    if n == 1:
        return (1,)
    if n == 2:
        return (2, 1)
    m, odd = divmod(n, 2)
    if variant == 0:
        seq = [2] + [v for k in range(1, m) for v in (2 * k + 2, 2 * k - 1)]
        seq += [2 * m + 1, 2 * m - 1] if odd else [2 * m - 1]
    else:
        seq = [3, 1] + [v for k in range(2, m + odd) for v in (2 * k + 1, 2 * k - 2)]
        seq += [2 * m] if odd else [2 * m, 2 * m - 2]
    return tuple(seq)


def oscillation(direction: str, n: int, variant: int = 0) -> Perm:
    """Explicit oscillation of size ``n``.

    Variant 0 of the increasing family starts ``2 4 1 6 3``; variant 1 is its
    inverse.  Sizes 1 and 2 have a single variant.  Decreasing variant ``v``
    is the reverse of increasing variant ``1 - v``.
    """
    if n < 1:
        raise ValueError("size must be positive")
    if variant not in (0, 1) or (n <= 2 and variant != 0):
        raise ValueError(f"invalid variant {variant} for size {n}")
    if direction not in (INCREASING, DECREASING):
        raise ValueError(f"bad direction {direction!r}")
    if direction == INCREASING:
        return _increasing_oscillation(n, variant)
    return reverse(_increasing_oscillation(n, variant if n <= 2 else 1 - variant))


def knight_type(n: int, variant: int) -> Optional[tuple[str, str]]:
    """Type of the increasing oscillation ``oscillation(INCREASING, n, variant)``."""
    if n < 3:
        return None
    first = "H" if variant == 0 else "V"
    other = "V" if first == "H" else "H"
    return (first, first) if n % 2 == 0 else (first, other)


@lru_cache(maxsize=None)
def recognize_oscillation(p: Perm) -> tuple[OscillationInfo, ...]:
    """All oscillation readings of ``p`` (empty when it is none).  The
    permutations 1, 2413 and 3142 are read in both directions."""
    p = tuple(p)
    n = len(p)
    out = []
    for direction in (INCREASING, DECREASING):
        for v in (0, 1) if n > 2 else (0,):
            if oscillation(direction, n, v) == p:
                src = v if direction == INCREASING or n <= 2 else 1 - v
                out.append(OscillationInfo(direction, n, knight_type(n, src), v))
    return tuple(out)


def is_increasing_oscillation(p: Perm) -> bool:
    return any(i.direction == INCREASING for i in recognize_oscillation(tuple(p)))


def is_decreasing_oscillation(p: Perm) -> bool:
    return any(i.direction == DECREASING for i in recognize_oscillation(tuple(p)))


def increasing_type(p: Perm) -> Optional[tuple[str, str]]:
    for i in recognize_oscillation(tuple(p)):
        if i.direction == INCREASING:
            return i.knight_type
    return None


# ---------------------------------------------------------------------------
# quasi-oscillations


@dataclass(frozen=True)
class QuasiOscInfo:
    direction: str
    size: int
    choices: tuple[tuple[int, int], ...]  # (auxiliary, main) 1-based positions


# the size 4 and 5 increasing quasi-oscillations with their (A, M) pairs
_SMALL_QUASI: dict[Perm, tuple[tuple[int, int], ...]] = {
    (2, 4, 1, 3): ((1, 2), (4, 3)),
    (3, 1, 4, 2): ((3, 1), (2, 4)),
    (2, 5, 3, 1, 4): ((1, 3), (5, 3)),
    (4, 1, 3, 5, 2): ((4, 3), (2, 3)),
}

# Building rule from an increasing oscillation of size n-1:
# (inserted, first3, last3) -> (element moved, becomes, main point)
_QUASI_RULES = {
    ("max", (2, 3, 1), (1, 3, 2)): ("leftmost", "rightmost", "largest"),
    ("max", (2, 3, 1), (3, 1, 2)): ("leftmost", "rightmost", "rightmost"),
    ("max", (2, 1, 3), (1, 3, 2)): ("smallest", "largest", "largest"),
    ("max", (2, 1, 3), (3, 1, 2)): ("smallest", "largest", "rightmost"),
    ("min", (2, 3, 1), (1, 3, 2)): ("largest", "smallest", "leftmost"),
    ("min", (2, 3, 1), (3, 1, 2)): ("rightmost", "leftmost", "leftmost"),
    ("min", (2, 1, 3), (1, 3, 2)): ("largest", "smallest", "smallest"),
    ("min", (2, 1, 3), (3, 1, 2)): ("rightmost", "leftmost", "smallest"),
}


def _extreme(points: dict, which: str):
    key = {
        "leftmost": lambda k: points[k][0],
        "rightmost": lambda k: -points[k][0],
        "smallest": lambda k: points[k][1],
        "largest": lambda k: -points[k][1],
    }[which]
    return min(points, key=key)


def _quasi_from_oscillation(xi: Perm, inserted: str) -> tuple[Perm, int, int]:
    n1 = len(xi)
    rule = _QUASI_RULES[(inserted, standardize(xi[:3]), standardize(xi[-3:]))]
    moved, becomes, main = rule
    points = {k: (k + 1, v) for k, v in enumerate(xi)}
    main_key = _extreme(points, main)
    mv = _extreme(points, moved)
    aux = "aux"
    points[aux] = (n1 + 1, n1 + 1) if inserted == "max" else (0, 0)
    x, y = points[mv]
    if becomes == "rightmost":
        x = n1 + 2
    elif becomes == "leftmost":
        x = -1
    elif becomes == "largest":
        y = n1 + 2
    else:
        y = -1
    points[mv] = (x, y)
    order = sorted(points, key=lambda k: points[k][0])
    perm = standardize([points[k][1] for k in order])
    return perm, order.index(aux) + 1, order.index(main_key) + 1


@lru_cache(maxsize=None)
def _increasing_quasi(n: int) -> tuple[tuple[Perm, tuple[tuple[int, int], ...]], ...]:
    if n in (4, 5):
        return tuple((p, c) for p, c in _SMALL_QUASI.items() if len(p) == n)
    found: dict[Perm, list[tuple[int, int]]] = {}
    for v in (0, 1):
        xi = oscillation(INCREASING, n - 1, v)
        for ins in ("max", "min"):
            perm, a, m = _quasi_from_oscillation(xi, ins)
            found.setdefault(perm, []).append((a, m))
    return tuple((p, tuple(c)) for p, c in sorted(found.items()))


def quasi_oscillations(n: int) -> list[tuple[Perm, QuasiOscInfo]]:
    """Increasing quasi-oscillations of size ``n`` and their reverses, each
    with every legal (auxiliary, main) pair."""
    if n < 4:
        raise ValueError("quasi-oscillations have size at least 4")
    out = []
    for p, choices in _increasing_quasi(n):
        out.append((p, QuasiOscInfo(INCREASING, n, choices)))
    for p, choices in _increasing_quasi(n):
        rc = tuple((n + 1 - a, n + 1 - m) for a, m in choices)
        out.append((reverse(p), QuasiOscInfo(DECREASING, n, rc)))
    return out


@lru_cache(maxsize=None)
def quasi_tags(label: Perm) -> tuple[QuasiTag, ...]:
    """Quasi-oscillation readings of a prime label (empty if none)."""
    label = tuple(label)
    if len(label) < 4:
        return ()
    tags = []
    for p, info in quasi_oscillations(len(label)):
        if p == label:
            tags.extend(QuasiTag(info.direction, a, m) for a, m in info.choices)
    return tuple(tags)


# ---------------------------------------------------------------------------
# pin representations by brute force


Pt = tuple[int, int]


def _points(p: Perm) -> list[Pt]:
    return [(i, v) for i, v in enumerate(p, 1)]


def _chains(prev: list[Pt], remaining: frozenset[Pt]) -> Iterable[tuple[list[Pt], str]]:
    """Every way to read all of ``remaining`` after ``prev`` with separating
    pins only; yields (order, letters)."""
    if not remaining:
        yield [], ""
        return
    for c in sorted(remaining):
        letter = _letter_for(prev, c)
        if letter is None or letter not in DIRECTIONS:
            continue
        for rest, word in _chains(prev + [c], remaining - {c}):
            yield [c] + rest, letter + word


@lru_cache(maxsize=None)
def proper_representations(p: Perm) -> tuple[tuple[int, ...], ...]:
    """Position orders of the proper pin representations of ``p``: any first
    two points, then separating pins only."""
    p = tuple(p)
    pts = _points(p)
    out = []
    if len(p) == 1:
        return ((1,),)
    for a, b in product(pts, repeat=2):
        if a == b:
            continue
        rest = frozenset(pts) - {a, b}
        for order, _ in _chains([a, b], rest):
            out.append(tuple(q[0] for q in [a, b] + order))
    return tuple(sorted(set(out)))


@lru_cache(maxsize=None)
def proper_words(p: Perm) -> frozenset[str]:
    """Strict and quasi-strict pin words of ``p``."""
    p = tuple(p)
    if len(p) == 1:
        return frozenset(NUMERALS)
    out: set[str] = set()
    for order in proper_representations(p):
        for w in words_of_representation([(i, p[i - 1]) for i in order]):
            if classify(w) != "other":
                out.add(w)
    return frozenset(out)


@lru_cache(maxsize=None)
def pin_words_of_simple(alpha: Perm) -> frozenset[str]:
    """All pin words of a simple permutation (they are strict or
    quasi-strict, so proper representations suffice)."""
    alpha = tuple(alpha)
    if not is_simple(alpha):
        raise ValueError(f"not simple: {alpha}")
    return proper_words(alpha)


@lru_cache(maxsize=None)
def active_knights(alpha: Perm) -> frozenset[tuple[int, int]]:
    """Ordered pairs of positions starting a proper representation."""
    return frozenset(o[:2] for o in proper_representations(tuple(alpha)))


@lru_cache(maxsize=None)
def q_x(alpha: Perm, x: int) -> frozenset[str]:
    """Quasi-strict words of ``alpha`` whose first point is ``x`` (1-based),
    with the first letter deleted."""
    alpha = tuple(alpha)
    out = set()
    for order in proper_representations(alpha):
        if order[0] != x:
            continue
        for w in words_of_representation([(i, alpha[i - 1]) for i in order]):
            if classify(w) == "quasi-strict":
                out.add(w[1:])
    return frozenset(out)


# ---------------------------------------------------------------------------
# pin-word sets of oscillations and of their direct sums

Q_MINUS = frozenset({"12", "14", "22", "24", "32", "34", "42", "44"})
S_MINUS_H = frozenset({"1R", "2R", "3L", "4L"})
S_MINUS_V = frozenset({"1U", "2D", "3D", "4U"})
Q_PLUS = frozenset(mirror(w) for w in Q_MINUS)
S_PLUS_H = frozenset(mirror(w) for w in S_MINUS_H)
S_PLUS_V = frozenset(mirror(w) for w in S_MINUS_V)
P_12 = Q_PLUS | S_PLUS_H | S_PLUS_V
P_21 = Q_MINUS | S_MINUS_H | S_MINUS_V
_LOW_MIX_H = frozenset({"13", "23", "33", "43", "1D", "4D"})
_LOW_MIX_V = frozenset({"13", "23", "33", "43", "1L", "2L"})


def _cat(left: Iterable[str], right: Iterable[str]) -> frozenset[str]:
    right = list(right)
    return frozenset(a + b for a in left for b in right)


def _osc_shape(xi: Perm) -> tuple[int, Optional[tuple[str, str]]]:
    xi = tuple(xi)
    if not is_increasing_oscillation(xi):
        raise ValueError(f"not an increasing oscillation: {xi}")
    return len(xi), increasing_type(xi)


@lru_cache(maxsize=None)
def p1_words(xi: Perm) -> frozenset[str]:
    """Words reading an increasing oscillation in one piece from an origin
    placed in its bottom-left quadrant."""
    n, t = _osc_shape(xi)
    if n == 1:
        return frozenset({"3"})
    if n == 2:
        return frozenset({"3D", "3L"})
    if n % 2 == 0:
        k = (n - 2) // 2
        return frozenset({"3L" + "DL" * k if t == ("H", "H") else "3D" + "LD" * k})
    k = (n - 1) // 2
    return frozenset({"3" + ("DL" * k if t == ("H", "V") else "LD" * k)})


@lru_cache(maxsize=None)
def p3_words(xi: Perm) -> frozenset[str]:
    """Same, origin in the top-right quadrant."""
    n, t = _osc_shape(xi)
    if n == 1:
        return frozenset({"1"})
    if n == 2:
        return frozenset({"1R", "1U"})
    if n % 2 == 0:
        k = (n - 2) // 2
        return frozenset({"1R" + "UR" * k if t == ("H", "H") else "1U" + "RU" * k})
    k = (n - 1) // 2
    return frozenset({"1" + ("RU" * k if t == ("H", "V") else "UR" * k)})


@lru_cache(maxsize=None)
def oscillation_words(xi: Perm) -> frozenset[str]:
    """All pin words of an increasing oscillation."""
    xi = tuple(xi)
    n, t = _osc_shape(xi)
    qh, qv = Q_MINUS | S_MINUS_H, Q_MINUS | S_MINUS_V
    if n == 1:
        return frozenset(NUMERALS)
    if n == 2:
        return P_21
    if xi == (2, 3, 1):
        return _cat(qh, ["U"]) | _cat(qv, ["L"]) | _cat(P_12, ["4"])
    if xi == (3, 1, 2):
        return _cat(qh, ["D"]) | _cat(qv, ["R"]) | _cat(P_12, ["2"])
    if xi == (2, 4, 1, 3):
        return _cat(qh, ["UR", "DL"]) | _cat(Q_PLUS | S_PLUS_V, ["RD", "LU"])
    if xi == (3, 1, 4, 2):
        return _cat(Q_PLUS | S_PLUS_H, ["UL", "DR"]) | _cat(qv, ["RU", "LD"])
    if n % 2 == 0:
        k = (n - 2) // 2
        if t == ("H", "H"):
            return _cat(qh, ["DL" * k, "UR" * k])
        return _cat(qv, ["LD" * k, "RU" * k])
    k = (n - 1) // 2
    if t == ("H", "V"):
        return _cat(qv, ["L" + "DL" * (k - 1)]) | _cat(qh, ["U" + "RU" * (k - 1)])
    return _cat(qh, ["D" + "LD" * (k - 1)]) | _cat(qv, ["R" + "UR" * (k - 1)])


def _types_for_mix(xi: Perm) -> tuple[str, ...]:
    """First knight letter(s) of an increasing oscillation; the size-2
    oscillation behaves as both."""
    if len(xi) == 2:
        return ("H", "V")
    return (increasing_type(xi)[0],)


@lru_cache(maxsize=None)
def mix_words(xi: Perm) -> frozenset[str]:
    """Words of ``1 (+) xi`` reading ``xi`` in two pieces (``|xi| >= 2``)."""
    xi = tuple(xi)
    n, t = _osc_shape(xi)
    if n == 1:
        return frozenset()
    if n == 2:
        return _cat(_LOW_MIX_H, ["R"]) | _cat(_LOW_MIX_V, ["U"])
    if xi == (2, 3, 1):
        return _cat(P_12, ["3R"]) | _cat(_LOW_MIX_H, ["RU"])
    if xi == (3, 1, 2):
        return _cat(P_12, ["3U"]) | _cat(_LOW_MIX_V, ["UR"])
    p, q = divmod(n - 1, 2)
    if t[0] == "H":
        return _cat(_LOW_MIX_H, ["RU" * p + "R" * q])
    return _cat(_LOW_MIX_V, ["UR" * p + "U" * q])


@lru_cache(maxsize=None)
def sep_words(xi: Perm) -> frozenset[str]:
    """Words of ``1 (+) xi`` reading the leaf first and then ``xi`` starting
    with a separating pin."""
    xi = tuple(xi)
    n, _ = _osc_shape(xi)
    p, q = divmod(n, 2)
    out: set[str] = set()
    for first in _types_for_mix(xi):
        if first == "H":
            out |= _cat(["2", "3"], ["UR" * p + "U" * q])
        else:
            out |= _cat(["3", "4"], ["RU" * p + "R" * q])
    return frozenset(out)


_RC = 3  # reverse-complement symmetry id


# ---------------------------------------------------------------------------
# symbolic pin-word sets


@dataclass(frozen=True)
class Lit:
    words: frozenset[str]
    name: str = ""


@dataclass(frozen=True)
class Ref:
    perm: Perm


@dataclass(frozen=True)
class Cat:
    parts: tuple["PinWordSpec", ...]


@dataclass(frozen=True)
class Union:
    parts: tuple["PinWordSpec", ...]


@dataclass(frozen=True)
class Shuffle:
    left: tuple["PinWordSpec", ...]
    right: tuple["PinWordSpec", ...]


PinWordSpec = TUnion[Lit, Ref, Cat, Union, Shuffle]


def shuffle(a: Sequence[Iterable[str]], b: Sequence[Iterable[str]]) -> frozenset[str]:
    """Interleavings of the two sequences, one word per set, each sequence
    keeping its order."""
    a = [tuple(s) for s in a]
    b = [tuple(s) for s in b]

    @lru_cache(maxsize=None)
    def rec(i: int, j: int) -> frozenset[str]:
        if i == len(a) and j == len(b):
            return frozenset({""})
        out: set[str] = set()
        if i < len(a):
            tails = rec(i + 1, j)
            out |= {w + t for w in a[i] for t in tails}
        if j < len(b):
            tails = rec(i, j + 1)
            out |= {w + t for w in b[j] for t in tails}
        return frozenset(out)

    return rec(0, 0)


@lru_cache(maxsize=None)
def expand(spec: PinWordSpec) -> frozenset[str]:
    """Finite word set denoted by a spec."""
    if isinstance(spec, Lit):
        return spec.words
    if isinstance(spec, Ref):
        return expand(describe_perm(spec.perm))
    if isinstance(spec, Cat):
        out = frozenset({""})
        for part in spec.parts:
            out = _cat(out, expand(part))
        return out
    if isinstance(spec, Union):
        out: set[str] = set()
        for part in spec.parts:
            out |= expand(part)
        return frozenset(out)
    if isinstance(spec, Shuffle):
        return shuffle([expand(s) for s in spec.left], [expand(s) for s in spec.right])
    raise TypeError(f"not a spec: {spec!r}")


def mirror_spec(spec: PinWordSpec) -> PinWordSpec:
    """Spec of the reversed permutation."""
    if isinstance(spec, Lit):
        return Lit(frozenset(mirror(w) for w in spec.words), spec.name and f"mirror {spec.name}")
    if isinstance(spec, Ref):
        return Ref(reverse(spec.perm))
    if isinstance(spec, Cat):
        return Cat(tuple(mirror_spec(s) for s in spec.parts))
    if isinstance(spec, Union):
        return Union(tuple(mirror_spec(s) for s in spec.parts))
    return Shuffle(tuple(mirror_spec(s) for s in spec.left), tuple(mirror_spec(s) for s in spec.right))


def _lit(words: Iterable[str], name: str = "") -> Lit:
    return Lit(frozenset(words), name)


# ---------------------------------------------------------------------------
# tree shapes


class ShapeTag(Enum):
    LEAF = "leaf"
    PLUS_OSC = "plus-oscillations"
    PLUS_REC = "plus-recursive"
    MINUS_OSC = "minus-oscillations"
    MINUS_REC = "minus-recursive"
    PRIME_SIMPLE = "prime-simple"
    PRIME_ACTIVE = "prime-active-child"
    QUASI_PLUS = "quasi-increasing"
    QUASI_MINUS = "quasi-decreasing"


@lru_cache(maxsize=None)
def tree_of(p: Perm) -> DecompTree:
    return decomp.annotate(decomp.decompose(tuple(p)))


def _children_perms(t: DecompTree) -> tuple[Perm, ...]:
    return tuple(decomp._build(c) for c in t.children)


def is_pin_permutation(t: DecompTree) -> Optional[ShapeTag]:
    """Which shape of the recursive characterization ``t`` matches, if any."""
    return _shape(decomp._build(t))


@lru_cache(maxsize=None)
def _shape(p: Perm) -> Optional[ShapeTag]:
    t = tree_of(p)
    if t.kind == LEAF:
        return ShapeTag.LEAF
    kids = _children_perms(t)
    if t.kind in (PLUS, MINUS):
        osc = is_increasing_oscillation if t.kind == PLUS else is_decreasing_oscillation
        others = [k for k in kids if not osc(k)]
        if not others:
            return ShapeTag.PLUS_OSC if t.kind == PLUS else ShapeTag.MINUS_OSC
        if len(others) == 1 and _shape(others[0]) is not None:
            return ShapeTag.PLUS_REC if t.kind == PLUS else ShapeTag.MINUS_REC
        return None
    alpha = t.label
    big = [i for i, k in enumerate(kids) if len(k) > 1]
    if not proper_representations(alpha):
        return None
    if not big:
        return ShapeTag.PRIME_SIMPLE
    if len(big) == 1:
        i = big[0]
        if q_x(alpha, i + 1) and _shape(kids[i]) is not None:
            return ShapeTag.PRIME_ACTIVE
        return None
    if len(big) == 2:
        for tag in quasi_tags(alpha):
            pair = (2, 1) if tag.direction == DECREASING else (1, 2)
            a, m = tag.aux - 1, tag.main - 1
            if set(big) == {a, m} and kids[a] == pair and _shape(kids[m]) is not None:
                return ShapeTag.QUASI_PLUS if tag.direction == INCREASING else ShapeTag.QUASI_MINUS
    return None


def is_pin_perm(p: Perm) -> bool:
    return _shape(tuple(p)) is not None


# ---------------------------------------------------------------------------
# case analysis shared with the automaton builder


@dataclass(frozen=True)
class LeafCase:
    pass


@dataclass(frozen=True)
class SimpleCase:
    alpha: Perm
    strict: frozenset[str]
    quasi: frozenset[str]


@dataclass(frozen=True)
class MinusCase:
    """Handled through the reverse permutation and the mirror relabeling."""

    mirrored: Perm


@dataclass(frozen=True)
class HTerm:
    """``P(sub) . word`` followed by the shuffle of the remaining
    oscillations; ``side`` is ``x`` (top-right leaf) or ``y``
    (bottom-left leaf)."""

    side: str
    sub: Perm
    word: str


@dataclass(frozen=True)
class PlusCase:
    children: tuple[Perm, ...]
    rho: Optional[int]  # 0-based index of the non-oscillation child
    hterms: tuple[HTerm, ...] = ()


@dataclass(frozen=True)
class Piece:
    """``P(sub) . word``: a sub-permutation read first, then a strict word."""

    sub: Perm
    word: str


@dataclass(frozen=True)
class PrimeOneCase:
    alpha: Perm
    x: int  # 1-based position in alpha expanded by the child
    child: Perm
    qx: frozenset[str]
    pieces: tuple[Piece, ...]
    sqs: frozenset[str]


@dataclass(frozen=True)
class PrimeTwoCase:
    alpha: Perm
    pieces: tuple[Piece, ...]


Case = TUnion[LeafCase, SimpleCase, MinusCase, PlusCase, PrimeOneCase, PrimeTwoCase]


def _blocks(p: Perm, t: DecompTree) -> list[list[Pt]]:
    """Point sets of the children of the root, left to right."""
    out, start = [], 0
    for c in t.children:
        out.append([(i, p[i - 1]) for i in range(start + 1, start + c.size + 1)])
        start += c.size
    return out


def _pattern(points: Iterable[Pt]) -> Perm:
    return standardize([v for _, v in sorted(points)])


def _continuations(read: list[Pt], rest: frozenset[Pt], independent: Optional[Pt]) -> set[str]:
    """Words reading ``independent`` (as a numeral) and then all of ``rest``
    with separating pins, after the points ``read``."""
    lead = _letter_for(read, independent)
    if lead is None or lead not in NUMERALS:
        return set()
    return {lead + w for _, w in _chains(read + [independent], rest)}


def _linear_hterms(p: Perm, t: DecompTree, rho: int) -> tuple[HTerm, ...]:
    blocks = _blocks(p, t)
    rho_pts = blocks[rho]
    terms = set()
    for side, idx in (("x", rho + 1), ("y", rho - 1)):
        if not 0 <= idx < len(blocks) or len(blocks[idx]) != 1:
            continue
        leaf = blocks[idx][0]
        for k in range(1, len(rho_pts) - 1):
            for removed in combinations(rho_pts, k):
                sub = [q for q in rho_pts if q not in removed]
                sub_perm = _pattern(sub)
                if not is_pin_perm(sub_perm):
                    continue
                for w in _continuations(sub, frozenset(removed), leaf):
                    terms.add(HTerm(side, sub_perm, w))
    return tuple(sorted(terms, key=lambda h: (h.side, len(h.sub), h.sub, h.word)))


def _prime_pieces(p: Perm, firsts: Iterable[list[Pt]]) -> tuple[Piece, ...]:
    pts = frozenset(_points(p))
    out = set()
    for first in firsts:
        sub_perm = _pattern(first)
        if len(first) < 2 or not is_pin_perm(sub_perm):
            continue
        rest = pts - set(first)
        for z in sorted(rest):
            for w in _continuations(list(first), rest - {z}, z):
                out.add(Piece(sub_perm, w))
    return tuple(sorted(out, key=lambda pc: (len(pc.sub), pc.sub, pc.word)))


@lru_cache(maxsize=None)
def analyze(p: Perm) -> Case:
    """Case split of a pin-permutation, with every literal word set and the
    sub-permutations referenced recursively."""
    p = tuple(p)
    shape = _shape(p)
    if shape is None:
        raise ValueError(f"not a pin-permutation: {p}")
    t = tree_of(p)
    if shape is ShapeTag.LEAF:
        return LeafCase()
    if t.kind == MINUS:
        return MinusCase(reverse(p))
    kids = _children_perms(t)
    if t.kind == PLUS:
        if shape is ShapeTag.PLUS_OSC:
            return PlusCase(kids, None)
        rho = next(i for i, k in enumerate(kids) if not is_increasing_oscillation(k))
        return PlusCase(kids, rho, _linear_hterms(p, t, rho))
    alpha = t.label
    if shape is ShapeTag.PRIME_SIMPLE:
        words = pin_words_of_simple(alpha)
        return SimpleCase(
            alpha,
            frozenset(w for w in words if classify(w) == "strict"),
            frozenset(w for w in words if classify(w) == "quasi-strict"),
        )
    blocks = _blocks(p, t)
    if shape is ShapeTag.PRIME_ACTIVE:
        i = next(i for i, k in enumerate(kids) if len(k) > 1)
        child_pts = blocks[i]
        firsts = [[q for q in child_pts if q != leaf] for leaf in child_pts]
        return PrimeOneCase(
            alpha,
            i + 1,
            kids[i],
            q_x(alpha, i + 1),
            _prime_pieces(p, firsts),
            proper_words(p),
        )
    big = [blocks[i] for i, k in enumerate(kids) if len(k) > 1]
    return PrimeTwoCase(alpha, _prime_pieces(p, big))


# ---------------------------------------------------------------------------
# symbolic description


def pair_spec(a: Perm, b: Perm) -> PinWordSpec:
    """Pin words of ``a (+) b`` for increasing oscillations ``a``, ``b``."""
    a, b = tuple(a), tuple(b)
    if len(a) == 1 and len(b) == 1:
        return _lit(P_12, "P(12)")
    if len(a) > 1 and len(b) > 1:
        return Union(
            (
                Cat((_lit(oscillation_words(b), "P(xi_j)"), _lit(p1_words(a), "P1(xi_i)"))),
                Cat((_lit(oscillation_words(a), "P(xi_i)"), _lit(p3_words(b), "P3(xi_j)"))),
            )
        )
    if len(a) > 1:
        # reverse-complement maps a (+) 1 onto 1 (+) rc(a)
        inner = expand(pair_spec((1,), apply_symmetry(a, _RC)))
        return _lit((symmetry_word(w, _RC) for w in inner), "P(xi (+) 1)")
    return Union(
        (
            _lit(mix_words(b), "Pmix"),
            Cat((_lit(oscillation_words(b), "P(xi_j)"), _lit({"3"}))),
            Cat((_lit(NUMERALS), _lit(p3_words(b), "P3(xi_j)"))),
            _lit(sep_words(b), "Psep"),
        )
    )


def _f_seq(kids: Sequence[Perm], upto: int) -> tuple[PinWordSpec, ...]:
    """``(P1(xi_upto), ..., P1(xi_1))`` with 1-based ``upto``."""
    return tuple(_lit(p1_words(kids[i - 1]), f"P1(xi_{i})") for i in range(upto, 0, -1))


def _g_seq(kids: Sequence[Perm], start: int) -> tuple[PinWordSpec, ...]:
    """``(P3(xi_start), ..., P3(xi_r))`` with 1-based ``start``."""
    return tuple(
        _lit(p3_words(kids[j - 1]), f"P3(xi_{j})") for j in range(start, len(kids) + 1)
    )


def spec_of_case(case: Case) -> PinWordSpec:
    if isinstance(case, LeafCase):
        return _lit(NUMERALS, "P(1)")
    if isinstance(case, SimpleCase):
        return _lit(case.strict | case.quasi, "P(alpha)")
    if isinstance(case, MinusCase):
        return mirror_spec(describe_perm(case.mirrored))
    if isinstance(case, PlusCase):
        kids = case.children
        r = len(kids)
        if case.rho is None:
            terms = []
            for i in range(1, r):
                pair = pair_spec(kids[i - 1], kids[i])
                terms.append(Cat((pair, Shuffle(_f_seq(kids, i - 1), _g_seq(kids, i + 2)))))
            return Union(tuple(terms))
        ell = case.rho
        terms = [Cat((Ref(kids[ell]), Shuffle(_f_seq(kids, ell), _g_seq(kids, ell + 2))))]
        for h in case.hterms:
            if h.side == "x":
                tail = Shuffle(_f_seq(kids, ell), _g_seq(kids, ell + 3))
            else:
                tail = Shuffle(_f_seq(kids, ell - 1), _g_seq(kids, ell + 2))
            terms.append(Cat((Ref(h.sub), _lit({h.word}), tail)))
        return Union(tuple(terms))
    if isinstance(case, PrimeOneCase):
        terms: list[PinWordSpec] = []
        if case.qx:
            terms.append(Cat((Ref(case.child), _lit(case.qx, "Q_x(alpha)"))))
        terms += [Cat((Ref(pc.sub), _lit({pc.word}))) for pc in case.pieces]
        if case.sqs:
            terms.append(_lit(case.sqs, "P_sqs"))
        return Union(tuple(terms))
    if isinstance(case, PrimeTwoCase):
        return Union(tuple(Cat((Ref(pc.sub), _lit({pc.word}))) for pc in case.pieces))
    raise TypeError(case)


@lru_cache(maxsize=None)
def describe_perm(p: Perm) -> PinWordSpec:
    return spec_of_case(analyze(tuple(p)))


def describe_pin_words(t: DecompTree) -> PinWordSpec:
    """Symbolic description of the pin words of the permutation of ``t``."""
    return describe_perm(decomp._build(t))


def pin_words(p: Perm) -> frozenset[str]:
    return expand(describe_perm(tuple(p)))


# ---------------------------------------------------------------------------
# H-case classification and condition (C)

# reading signatures (side letter, numeral + directions) of each row, in the
# normalized orientation where x is the top-right leaf and y the bottom-left
_H_ROWS = {
    "1H1": {("x", "1L")},
    "1H2*": {("x", "1DL"), ("x", "1D")},
    "1H2": {("x", "1D"), ("x", "1L")},
    "2H1": {("x", "1L"), ("y", "3U")},
    "2H2*": {("x", "1DL"), ("x", "1D"), ("y", "3R")},
    "2H2": {("x", "1D"), ("x", "1L"), ("y", "3R"), ("y", "3U")},
    "2H3": {("x", "1D"), ("x", "1DL"), ("y", "3RU"), ("y", "3R")},
}

# symmetries preserving a (+) root: identity, inverse, reverse-complement
_PLUS_SYMMETRIES = (0, 4, 3, 7)


def _match_rows(sig: set[tuple[str, str]]) -> Optional[tuple[str, int]]:
    for s in _PLUS_SYMMETRIES:
        swap = s & 1  # reverse-complement exchanges the two sides
        norm = {({"x": "y", "y": "x"}[side] if swap else side, symmetry_word(w, s)) for side, w in sig}
        for name, row in _H_ROWS.items():
            if norm == row:
                return name, s
        if len(norm) == 1:
            ((side, w),) = norm
            if side == "x" and w.startswith("1") and len(w) > 2 and w[1] in "DL":
                return "1H1+", s
    return None


def classify_H(t: DecompTree) -> Optional[tuple[str, int]]:
    """Row of the table of two-piece readings matched by ``t`` (a linear root),
    with the symmetry id mapping the normalized diagram onto ``t``.

    The candidate child is the unique non-oscillation child.  When every child
    is an oscillation each child is tried in turn (a child such as 312 can
    still be read in two pieces next to a leaf).  ``None`` when no child
    admits a two-piece reading.
    """
    if t.kind not in (PLUS, MINUS):
        return None
    p = decomp._build(t)
    s0 = 0
    if t.kind == MINUS:
        p, s0 = reverse(p), 1
    if not is_pin_perm(p):
        return None
    tp = tree_of(p)
    kids = _children_perms(tp)
    others = [i for i, k in enumerate(kids) if not is_increasing_oscillation(k)]
    candidates = others if others else [i for i, k in enumerate(kids) if len(k) >= 3]
    for rho in candidates:
        terms = _linear_hterms(p, tp, rho)
        if not terms:
            continue
        found = _match_rows({(h.side, h.word) for h in terms})
        if found is not None:
            return found[0], _compose(found[1], s0)
    return None


# target-state names of each row's extra terms, normalized orientation
_H_NAMES = {
    "1H1": {("x", "1L"): "S"},
    "1H2*": {("x", "1DL"): "S", ("x", "1D"): "S'"},
    "1H2": {("x", "1D"): "T∪a", ("x", "1L"): "T∪b"},
    "2H1": {("x", "1L"): "S", ("y", "3U"): "S"},
    "2H2*": {("x", "1DL"): "S", ("x", "1D"): "S'", ("y", "3R"): "S'"},
    "2H2": {("x", "1D"): "T∪a", ("x", "1L"): "T∪b", ("y", "3R"): "T∪a", ("y", "3U"): "T∪b"},
    "2H3": {("x", "1D"): "S", ("x", "1DL"): "T∪b", ("y", "3RU"): "T∪a", ("y", "3R"): "S"},
}


def hterm_names(p: Perm) -> dict[HTerm, str]:
    """Row-table name (``S``, ``S'``, ``T∪a``, ``T∪b``) of the sub-permutation
    read first in each extra term of a (+)-rooted pin-permutation."""
    case = analyze(tuple(p))
    if not isinstance(case, PlusCase) or not case.hterms:
        return {}
    found = _match_rows({(h.side, h.word) for h in case.hterms})
    if found is None:
        return {}
    row, sym = found
    out = {}
    for h in case.hterms:
        side = {"x": "y", "y": "x"}[h.side] if sym & 1 else h.side
        key = (side, symmetry_word(h.word, sym))
        out[h] = "S" if row == "1H1+" else _H_NAMES[row][key]
    return out


def _compose(s: int, s0: int) -> int:
    from .perm import compose_symmetry

    return compose_symmetry(s0, s)


def condition_C(t: DecompTree) -> bool:
    """The child of a prime root expands an auxiliary point of a
    quasi-oscillation label and has the matching corner-leaf shape."""
    if t.kind != PRIME:
        return False
    big = [i for i, c in enumerate(t.children) if not c.is_leaf]
    if len(big) != 1:
        return False
    x = big[0] + 1
    child = t.children[big[0]]
    k = len(t.label)
    for tag in quasi_tags(t.label):
        if tag.aux != x:
            continue
        kind = PLUS if tag.direction == INCREASING else MINUS
        if child.kind != kind:
            continue
        if x in (k, k - 1) and child.children[-1].is_leaf:
            return True
        if x in (1, 2) and child.children[0].is_leaf:
            return True
    return False


# ---------------------------------------------------------------------------
# the explicit two-piece word of a quasi-oscillation


def w_alpha(alpha: Perm, aux: int) -> str:
    """Explicit strict word read after the first piece when a
    quasi-oscillation is expanded at auxiliary point ``aux`` (1-based),
    without its leading numeral."""
    alpha = tuple(alpha)
    tags = [tg for tg in quasi_tags(alpha) if tg.aux == aux]
    if not tags:
        raise ValueError("not an auxiliary point")
    tag = tags[0]
    if tag.direction == DECREASING:
        return mirror(w_alpha(reverse(alpha), len(alpha) + 1 - aux))
    n = len(alpha)
    a_pt, m_pt = (aux, alpha[aux - 1]), (tag.main, alpha[tag.main - 1])
    horizontal = abs(a_pt[0] - m_pt[0]) == 2
    top_right = a_pt[0] > m_pt[0]
    p = (n + 1) // 2
    if top_right:
        if n % 2 == 0:
            return ("DL" * (p - 2) + "DRU") if horizontal else ("LD" * (p - 2) + "LUR")
        return ("DL" * (p - 2) + "UR") if horizontal else ("LD" * (p - 2) + "RU")
    if n % 2 == 0:
        return ("UR" * (p - 2) + "ULD") if horizontal else ("RU" * (p - 2) + "RDL")
    return ("UR" * (p - 2) + "DL") if horizontal else ("RU" * (p - 2) + "LD")
