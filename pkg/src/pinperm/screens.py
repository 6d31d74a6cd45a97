"""Symmetry-avoidance screens for parallel alternations and the two wedge
families of simple permutations."""

from __future__ import annotations

from enum import Enum
from typing import Iterable

from .perm import Perm, apply_symmetry, avoids_all, parse_perm


def _perms(*texts: str) -> tuple[Perm, ...]:
    return tuple(parse_perm(t) for t in texts)


class ScreenKind(Enum):
    PARALLEL = "parallel"
    WEDGE1 = "wedge1"
    WEDGE2 = "wedge2"

    @property
    def patterns(self) -> tuple[Perm, ...]:
        return PATTERN_SETS[self]


PATTERN_SETS: dict[ScreenKind, tuple[Perm, ...]] = {
    ScreenKind.PARALLEL: _perms("123", "2413", "3412"),
    ScreenKind.WEDGE1: _perms(
        "1243", "1324", "1423", "1432", "2431", "3124", "4123", "4132", "4231", "4312"
    ),
    ScreenKind.WEDGE2: _perms(
        "2134", "2143", "3124", "3142", "3241", "3412", "4123", "4132", "4231", "4312"
    ),
}


def screen(basis: Iterable[Perm], kind: ScreenKind) -> bool:
    """True iff for every symmetry some basis element avoids the whole
    image of the kind's pattern set under that symmetry."""
    basis = [tuple(b) for b in basis]
    for s in range(8):
        images = [apply_symmetry(q, s) for q in kind.patterns]
        if not any(avoids_all(b, images) for b in basis):
            return False
    return True


def run_screens(basis: Iterable[Perm]) -> dict[str, bool]:
    basis = list(basis)
    return {k.value: screen(basis, k) for k in ScreenKind}
