"""Permutations in one-line notation, pattern containment, simplicity,
inflation and the eight dihedral symmetries.

A permutation is a plain ``tuple`` of the integers ``1..n``.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations
from typing import Iterable, Sequence

Perm = tuple[int, ...]


def parse_perm(text: str) -> Perm:
    """Parse ``"2 4 1 3"``, ``"2,4,1,3"`` or the compact ``"2413"`` form."""
    text = text.strip()
    if not text:
        raise ValueError("empty permutation")
    if any(c in text for c in " ,\t"):
        vals = tuple(int(t) for t in text.replace(",", " ").split())
    else:
        vals = tuple(int(c) for c in text)
    check_perm(vals)
    return vals


def check_perm(p: Sequence[int]) -> None:
    if sorted(p) != list(range(1, len(p) + 1)):
        raise ValueError(f"not a permutation: {tuple(p)}")


def fmt(p: Perm) -> str:
    """Compact digits when every value is a single digit, else spaced."""
    if len(p) <= 9:
        return "".join(map(str, p))
    return " ".join(map(str, p))


def standardize(seq: Sequence[int]) -> Perm:
    """The permutation order-isomorphic to ``seq``."""
    order = sorted(range(len(seq)), key=seq.__getitem__)
    out = [0] * len(seq)
    for rank, i in enumerate(order, 1):
        out[i] = rank
    return tuple(out)


@lru_cache(maxsize=1 << 18)
def contains_pattern(host: Perm, pattern: Perm) -> bool:
    """True iff some subsequence of ``host`` is order-isomorphic to ``pattern``."""
    k, n = len(pattern), len(host)
    if k == 0:
        return True
    if k > n:
        return False
    if k == 1:
        return True
    # backtracking: choose host positions left to right, checking the
    # relative order against every earlier chosen entry
    chosen: list[int] = []

    def rec(i: int, start: int) -> bool:
        if i == k:
            return True
        pv = pattern[i]
        for j in range(start, n - (k - i) + 1):
            hv = host[j]
            ok = True
            for t, c in enumerate(chosen):
                if (pattern[t] < pv) != (c < hv):
                    ok = False
                    break
            if ok:
                chosen.append(hv)
                if rec(i + 1, j + 1):
                    return True
                chosen.pop()
        return False

    return rec(0, 0)


def avoids_all(host: Perm, basis: Iterable[Perm]) -> bool:
    return not any(contains_pattern(host, b) for b in basis)


def is_interval(p: Perm, i: int, j: int) -> bool:
    seg = p[i : j + 1]
    return max(seg) - min(seg) == j - i


def is_simple(p: Perm) -> bool:
    """Size at least 4 and no block other than singletons and the whole."""
    n = len(p)
    if n < 4:
        return False
    for i in range(n):
        lo = hi = p[i]
        for j in range(i + 1, n):
            v = p[j]
            if v < lo:
                lo = v
            elif v > hi:
                hi = v
            if hi - lo == j - i and not (i == 0 and j == n - 1):
                return False
    return True


def is_simple_bruteforce(p: Perm) -> bool:
    """Reference check over every set of consecutive positions."""
    n = len(p)
    if n < 4:
        return False
    for i, j in combinations(range(n + 1), 2):
        if j - i in (1, n):
            continue
        seg = p[i:j]
        if max(seg) - min(seg) == j - i - 1:
            return False
    return True


def inflate(skeleton: Perm, parts: Sequence[Perm]) -> Perm:
    """The substitution ``skeleton[parts[0], ..., parts[k-1]]``."""
    if len(parts) != len(skeleton):
        raise ValueError(f"inflate: {len(parts)} parts for skeleton of size {len(skeleton)}")
    sizes = [0] * (len(skeleton) + 1)
    for pos, v in enumerate(skeleton):
        sizes[v] = len(parts[pos])
    offset = [0] * (len(skeleton) + 1)
    acc = 0
    for v in range(1, len(skeleton) + 1):
        offset[v] = acc
        acc += sizes[v]
    out: list[int] = []
    for pos, v in enumerate(skeleton):
        out.extend(x + offset[v] for x in parts[pos])
    return tuple(out)


def direct_sum(*ps: Perm) -> Perm:
    return inflate(tuple(range(1, len(ps) + 1)), ps)


def skew_sum(*ps: Perm) -> Perm:
    return inflate(tuple(range(len(ps), 0, -1)), ps)


# symmetries --------------------------------------------------------------
# id bits: 1 = reverse, 2 = complement, 4 = inverse.  Applied in the order
# inverse, complement, reverse.

REVERSE, COMPLEMENT, INVERSE = 1, 2, 4
SYMMETRY_NAMES = {
    0: "id", 1: "r", 2: "c", 3: "rc", 4: "i", 5: "ri", 6: "ci", 7: "rci",
}


def reverse(p: Perm) -> Perm:
    return tuple(reversed(p))


def complement(p: Perm) -> Perm:
    n = len(p)
    return tuple(n + 1 - v for v in p)


def inverse(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, v in enumerate(p, 1):
        out[v - 1] = i
    return tuple(out)


def apply_symmetry(p: Perm, s: int) -> Perm:
    if not 0 <= s <= 7:
        raise ValueError(f"symmetry id out of range: {s}")
    if s & INVERSE:
        p = inverse(p)
    if s & COMPLEMENT:
        p = complement(p)
    if s & REVERSE:
        p = reverse(p)
    return p


def _rigid_probe() -> Perm:
    for p in permutations(range(1, 6)):
        if len({apply_symmetry(p, s) for s in range(8)}) == 8:
            return p
    raise AssertionError("no rigid permutation of size 5")


_PROBE = _rigid_probe()
_IMAGE_TO_ID = {apply_symmetry(_PROBE, s): s for s in range(8)}


def compose_symmetry(s: int, t: int) -> int:
    """Id of ``p -> apply_symmetry(apply_symmetry(p, t), s)``."""
    return _IMAGE_TO_ID[apply_symmetry(apply_symmetry(_PROBE, t), s)]


def inverse_symmetry(s: int) -> int:
    for t in range(8):
        if compose_symmetry(t, s) == 0:
            return t
    raise AssertionError


# bases -------------------------------------------------------------------


def normalize_basis(elements: Iterable[Perm]) -> tuple[tuple[Perm, ...], tuple[Perm, ...]]:
    """Drop duplicates and any element containing another.

    Returns ``(antichain, removed)``, both sorted by size then value.
    """
    uniq = sorted(set(map(tuple, elements)), key=lambda p: (len(p), p))
    keep: list[Perm] = []
    removed: list[Perm] = []
    for p in uniq:
        if any(contains_pattern(p, q) for q in keep):
            removed.append(p)
        else:
            keep.append(p)
    return tuple(keep), tuple(removed)


def all_perms(n: int) -> Iterable[Perm]:
    return permutations(range(1, n + 1))
