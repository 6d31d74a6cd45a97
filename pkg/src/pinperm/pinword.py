"""Pin words over ``1234UDLR``: decoding to point sequences, encoding of a
point sequence, the map phi onto alternating direction words, strong
numeral-led factors, the order on pin words and membership in the
gap languages built from phi.

Words are plain strings.  Geometry uses exact ``Fraction`` coordinates.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Optional, Sequence

from .perm import Perm, standardize

NUMERALS = "1234"
DIRECTIONS = "UDLR"
LETTERS = NUMERALS + DIRECTIONS
HORIZONTAL = "LR"  # letters that move along the x axis
VERTICAL = "UD"

Point = tuple[Fraction, Fraction]

# quadrant numeral -> (sign of x, sign of y)
QUADRANT = {"1": (1, 1), "2": (-1, 1), "3": (-1, -1), "4": (1, -1)}
_SIGN_TO_QUADRANT = {v: k for k, v in QUADRANT.items()}

# length-two strict words -> three-letter alternating words
PHI_TABLE = {
    "1R": "RUR", "2R": "LUR", "3R": "LDR", "4R": "RDR",
    "1L": "RUL", "2L": "LUL", "3L": "LDL", "4L": "RDL",
    "1U": "URU", "2U": "ULU", "3U": "DLU", "4U": "DRU",
    "1D": "URD", "2D": "ULD", "3D": "DLD", "4D": "DRD",
}
PHI_SINGLE = {
    "1": frozenset({"UR", "RU"}),
    "2": frozenset({"UL", "LU"}),
    "3": frozenset({"DL", "LD"}),
    "4": frozenset({"RD", "DR"}),
}
M2 = frozenset(w for ws in PHI_SINGLE.values() for w in ws)


# ---------------------------------------------------------------------------
# decoding


def _box(points: Sequence[Point]) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    xs = [p[0] for p in points]
    ys = [p[1] for p in points]
    return min(xs), max(xs), min(ys), max(ys)


def extend(points: Sequence[Point], letter: str) -> Optional[Point]:
    """Position of the next pin read with ``letter`` after ``points``.

    ``points`` starts with the origin.  Returns ``None`` when the letter
    cannot be realised (first letter a direction, forbidden factors such
    as ``UU``, ...).
    """
    xmin, xmax, ymin, ymax = _box(points)
    if letter in NUMERALS:
        sx, sy = QUADRANT[letter]
        return (xmax + 1 if sx > 0 else xmin - 1, ymax + 1 if sy > 0 else ymin - 1)
    if len(points) < 2:
        return None
    prev = points[-1]
    rxmin, rxmax, rymin, rymax = _box(points[:-1])
    if letter in VERTICAL:
        if prev[0] > rxmax:
            x = (prev[0] + rxmax) / 2
        elif prev[0] < rxmin:
            x = (prev[0] + rxmin) / 2
        else:
            return None
        return (x, ymax + 1 if letter == "U" else ymin - 1)
    if letter in HORIZONTAL:
        if prev[1] > rymax:
            y = (prev[1] + rymax) / 2
        elif prev[1] < rymin:
            y = (prev[1] + rymin) / 2
        else:
            return None
        return (xmax + 1 if letter == "R" else xmin - 1, y)
    raise ValueError(f"bad pin letter {letter!r}")


def decode_points(word: str) -> Optional[list[Point]]:
    """Origin followed by the pins encoded by ``word``; ``None`` if invalid."""
    pts: list[Point] = [(Fraction(0), Fraction(0))]
    for c in word:
        q = extend(pts, c)
        if q is None:
            return None
        pts.append(q)
    return pts


def points_to_perm(points: Sequence[Point]) -> Perm:
    """Permutation of a point set (order of the list is irrelevant)."""
    by_x = sorted(points)
    return standardize([p[1] for p in by_x])


def is_pin_word(word: str) -> bool:
    return bool(word) and all(c in LETTERS for c in word) and decode_points(word) is not None


@lru_cache(maxsize=1 << 16)
def decode(word: str) -> Perm:
    """Permutation encoded by a pin word (origin excluded)."""
    pts = decode_points(word)
    if pts is None or not word:
        raise ValueError(f"not a pin word: {word!r}")
    return points_to_perm(pts[1:])


# ---------------------------------------------------------------------------
# encoding a pin sequence


def _letter_for(prev_pts: Sequence[Point], p: Point) -> Optional[str]:
    xmin, xmax, ymin, ymax = _box(prev_pts)
    out_x = p[0] < xmin or p[0] > xmax
    out_y = p[1] < ymin or p[1] > ymax
    if not (out_x or out_y):
        return None
    if out_x and out_y:
        return _SIGN_TO_QUADRANT[(1 if p[0] > xmax else -1, 1 if p[1] > ymax else -1)]
    if len(prev_pts) < 2:
        return None
    last = prev_pts[-1]
    rest = prev_pts[:-1]
    if out_y:  # above or below: needs an x strictly between last and the rest
        rx = [q[0] for q in rest]
        if not (last[0] < p[0] < min(rx) or max(rx) < p[0] < last[0]):
            return None
        return "U" if p[1] > ymax else "D"
    ry = [q[1] for q in rest]
    if not (last[1] < p[1] < min(ry) or max(ry) < p[1] < last[1]):
        return None
    return "R" if p[0] > xmax else "L"


def encode(points: Sequence[Point]) -> Optional[str]:
    """Pin word of ``points`` (origin first), or ``None`` if not a pin sequence."""
    out = []
    for i in range(1, len(points)):
        c = _letter_for(points[:i], points[i])
        if c is None:
            return None
        out.append(c)
    return "".join(out)


def is_pin_sequence(points: Sequence[Point]) -> bool:
    """Pin-sequence conditions for ``points`` without origin."""
    for i in range(2, len(points)):
        xmin, xmax, ymin, ymax = _box(points[:i])
        p = points[i]
        if xmin <= p[0] <= xmax and ymin <= p[1] <= ymax:
            return False
        last, rest = points[i - 1], points[: i - 1]
        out_x = p[0] < xmin or p[0] > xmax
        out_y = p[1] < ymin or p[1] > ymax
        if out_x and out_y:
            continue  # independent
        if out_y:
            rx = [q[0] for q in rest]
            ok = last[0] < p[0] < min(rx) or max(rx) < p[0] < last[0]
        else:
            ry = [q[1] for q in rest]
            ok = last[1] < p[1] < min(ry) or max(ry) < p[1] < last[1]
        if not ok:
            return False
    return True


def words_of_representation(points: Sequence[tuple[int, int]]) -> set[str]:
    """All pin words encoding the pin sequence ``points`` (no origin).

    The origin is tried in every gap of the coordinate grid; each
    admissible placement yields one word.
    """
    pts = [(Fraction(x), Fraction(y)) for x, y in points]
    if len(pts) < 2 or not is_pin_sequence(pts):
        raise ValueError("not a pin sequence of length >= 2")
    xs = sorted(p[0] for p in pts)
    ys = sorted(p[1] for p in pts)
    gx = [xs[0] - 1] + [(a + b) / 2 for a, b in zip(xs, xs[1:])] + [xs[-1] + 1]
    gy = [ys[0] - 1] + [(a + b) / 2 for a, b in zip(ys, ys[1:])] + [ys[-1] + 1]
    words = set()
    for x in gx:
        for y in gy:
            w = encode([(x, y)] + pts)
            if w is not None:
                words.add(w)
    return words


def perm_points(p: Perm, order: Sequence[int]) -> list[tuple[int, int]]:
    """Points ``(position, value)`` of ``p`` (1-based positions) in ``order``."""
    return [(i, p[i - 1]) for i in order]


# ---------------------------------------------------------------------------
# classification, factors, phi


def classify(word: str) -> str:
    """``'strict'``, ``'quasi-strict'`` or ``'other'``."""
    k = 0
    while k < len(word) and word[k] in NUMERALS:
        k += 1
    if any(c in NUMERALS for c in word[k:]):
        return "other"
    if k == 1:
        return "strict"
    if k == 2:
        return "quasi-strict"
    return "other"


def is_strict(word: str) -> bool:
    return classify(word) == "strict"


def snlf(word: str) -> list[str]:
    """Split into factors each made of one numeral followed by directions."""
    if not word or word[0] not in NUMERALS:
        raise ValueError(f"word must start with a numeral: {word!r}")
    out: list[str] = []
    for c in word:
        if c in NUMERALS:
            out.append(c)
        else:
            out[-1] += c
    return out


def phi(word: str) -> str | frozenset[str]:
    """Alternating direction word of a strict pin word (a 2-set at length 1)."""
    if not is_strict(word):
        raise ValueError(f"phi needs a strict pin word: {word!r}")
    if len(word) == 1:
        return PHI_SINGLE[word]
    return PHI_TABLE[word[:2]] + word[2:]


def phi_set(word: str) -> frozenset[str]:
    """``phi`` as a set in every case."""
    v = phi(word)
    return v if isinstance(v, frozenset) else frozenset({v})


_PHI_INV2 = {w: q for q, ws in PHI_SINGLE.items() for w in ws}
_PHI_INV3 = {v: k for k, v in PHI_TABLE.items()}


def phi_inverse2(v: str) -> str:
    """Quadrant numeral of a two-direction word such as ``RU``."""
    try:
        return _PHI_INV2[v]
    except KeyError:
        raise ValueError(f"not a two-axis direction pair: {v!r}") from None


def in_M(word: str) -> bool:
    """Length at least 2 and alternating between the two axes."""
    if len(word) < 2 or any(c not in DIRECTIONS for c in word):
        return False
    return all((a in HORIZONTAL) != (b in HORIZONTAL) for a, b in zip(word, word[1:]))


def phi_inverse(m: str) -> str:
    """Strict pin word whose image is ``m`` (``m`` in M)."""
    if not in_M(m):
        raise ValueError(f"not in M: {m!r}")
    if len(m) == 2:
        return phi_inverse2(m)
    return _PHI_INV3[m[:3]] + m[3:]


def quadrant_of_points(word: str) -> list[str]:
    """Quadrant numeral of each pin p_i (i >= 2) relative to p_0..p_{i-2},
    computed from adjacent letters only."""
    out = []
    for i in range(1, len(word)):
        a, b = word[i - 1], word[i]
        if b in NUMERALS:
            out.append(b)
        elif a in DIRECTIONS:
            out.append(phi_inverse2(a + b))
        else:
            out.append(phi_inverse2(PHI_TABLE[a + b][1:]))
    return out


# ---------------------------------------------------------------------------
# the order on pin words


def _pin_quadrant(points: Sequence[Point], i: int) -> str:
    """Quadrant of pin ``i`` w.r.t. the origin ``points[0]``."""
    o, p = points[0], points[i]
    return _SIGN_TO_QUADRANT[(1 if p[0] > o[0] else -1, 1 if p[1] > o[1] else -1)]


def leq_literal(u: str, w: str) -> bool:
    """Order test by exhaustive chopping of ``w`` into gaps and pieces."""
    factors = snlf(u)
    wpts = decode_points(w)
    if wpts is None:
        raise ValueError(f"not a pin word: {w!r}")
    n = len(w)

    @lru_cache(maxsize=None)
    def rec(k: int, pos: int) -> bool:
        # k factors matched, w[pos:] remains; the gap v^(k+1) may be empty
        # only if the next piece starts with a numeral
        if k == len(factors):
            return True
        f = factors[k]
        for start in range(pos, n - len(f) + 1):
            piece = w[start : start + len(f)]
            if piece[0] in NUMERALS:
                if piece == f and rec(k + 1, start + len(f)):
                    return True
            else:
                if start == pos:  # gap must be non-empty
                    continue
                if piece[1:] != f[1:]:
                    continue
                if _pin_quadrant(wpts, start + 1) != f[0]:
                    continue
                if rec(k + 1, start + len(f)):
                    return True
        return False

    return rec(0, 0)


def _has_factor_in(text: str, pats: Iterable[str]) -> bool:
    return any(p in text for p in pats)


def _phi_ext(word: str) -> Optional[frozenset[str]]:
    """phi extended to SP and M (identity on M); ``None`` outside both."""
    if in_M(word):
        return frozenset({word})
    if is_strict(word):
        return phi_set(word)
    return None


def leq(u: str, w: str) -> bool:
    """Order test via the piecewise-factor characterisation: ``w`` is cut into
    gaps and pieces, each piece lying in SP or M and its phi image having a
    factor in phi of the matching factor of ``u``."""
    factors = snlf(u)
    targets = [phi_set(f) for f in factors]
    n = len(w)

    @lru_cache(maxsize=None)
    def rec(k: int, pos: int) -> bool:
        if k == len(factors):
            return True
        for start in range(pos, n):
            for end in range(start + 1, n + 1):
                images = _phi_ext(w[start:end])
                if images is None:
                    continue
                hit = any(_has_factor_in(im, targets[k]) for im in images)
                if hit and rec(k + 1, end):
                    return True
        return False

    return rec(0, 0)


# ---------------------------------------------------------------------------
# gap languages


def in_L_of(u: str, m: str) -> bool:
    """``m`` in A* phi(u1) A* phi(u2) ... A* (full search over placements)."""
    targets = [sorted(phi_set(f)) for f in snlf(u)]

    @lru_cache(maxsize=None)
    def rec(k: int, pos: int) -> bool:
        if k == len(targets):
            return True
        for t in targets[k]:
            start = m.find(t, pos)
            while start != -1:
                if rec(k + 1, start + len(t)):
                    return True
                start = m.find(t, start + 1)
        return False

    return rec(0, 0)


def in_L_of_greedy(u: str, m: str) -> bool:
    """Same language, matching each factor at its earliest possible end."""
    pos = 0
    for f in snlf(u):
        best = None
        for t in phi_set(f):
            s = m.find(t, pos)
            if s != -1 and (best is None or s + len(t) < best):
                best = s + len(t)
        if best is None:
            return False
        pos = best
    return True
