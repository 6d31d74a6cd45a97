"""Substitution decomposition trees."""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Optional

from .perm import Perm, inflate, is_simple, standardize

LEAF, PLUS, MINUS, PRIME = "leaf", "plus", "minus", "prime"


@dataclass(frozen=True)
class QuasiTag:
    """A quasi-oscillation reading of a prime label: direction plus the
    auxiliary point ``aux`` and main substitution point ``main`` (1-based
    positions in the label)."""

    direction: str
    aux: int
    main: int


@dataclass(frozen=True)
class DecompTree:
    kind: str
    children: tuple["DecompTree", ...] = ()
    label: Optional[Perm] = None  # prime nodes only
    # filled by annotate()
    inc_osc: Optional[bool] = None
    dec_osc: Optional[bool] = None
    osc_type: Optional[tuple[str, str]] = None  # knight type of a prime label
    label_inc_osc: bool = False
    label_dec_osc: bool = False
    quasi: tuple[QuasiTag, ...] = field(default=())

    @property
    def size(self) -> int:
        if self.kind == LEAF:
            return 1
        return sum(c.size for c in self.children)

    @property
    def is_leaf(self) -> bool:
        return self.kind == LEAF

    def perm(self) -> Perm:
        return tree_to_permutation(self)

    def __str__(self) -> str:
        if self.kind == LEAF:
            return "1"
        head = {PLUS: "+", MINUS: "-"}.get(self.kind) or "".join(map(str, self.label or ()))
        return f"{head}[{', '.join(map(str, self.children))}]"


LEAF_TREE = DecompTree(LEAF)


def leaf() -> DecompTree:
    return LEAF_TREE


def plus(*children: DecompTree) -> DecompTree:
    return DecompTree(PLUS, tuple(children))


def minus(*children: DecompTree) -> DecompTree:
    return DecompTree(MINUS, tuple(children))


def prime(label: Perm, *children: DecompTree) -> DecompTree:
    return DecompTree(PRIME, tuple(children), tuple(label))


def _sum_cuts(p: Perm, skew: bool) -> list[int]:
    """Positions after which ``p`` splits as a direct (skew) sum."""
    n = len(p)
    cuts = []
    hi, lo = 0, n + 1
    for i, v in enumerate(p[:-1], 1):
        hi, lo = max(hi, v), min(lo, v)
        if (not skew and hi == i) or (skew and lo == n - i + 1):
            cuts.append(i)
    return cuts


def decompose(p: Perm) -> DecompTree:
    """Unique substitution decomposition tree (quadratic interval scan)."""
    p = tuple(p)
    n = len(p)
    if n == 0:
        raise ValueError("cannot decompose the empty permutation")
    if n == 1:
        return LEAF_TREE
    for kind, skew in ((PLUS, False), (MINUS, True)):
        cuts = _sum_cuts(p, skew)
        if cuts:
            bounds = [0, *cuts, n]
            kids = tuple(
                decompose(standardize(p[a:b])) for a, b in zip(bounds, bounds[1:])
            )
            return DecompTree(kind, kids)
    # prime root: maximal proper intervals, found greedily from the left
    blocks: list[tuple[int, int]] = []
    i = 0
    while i < n:
        best = i
        lo = hi = p[i]
        for j in range(i + 1, n):
            lo, hi = min(lo, p[j]), max(hi, p[j])
            if hi - lo == j - i and not (i == 0 and j == n - 1):
                best = j
        blocks.append((i, best))
        i = best + 1
    label = standardize([p[a] for a, _ in blocks])
    kids = tuple(decompose(standardize(p[a : b + 1])) for a, b in blocks)
    return DecompTree(PRIME, kids, label)


def validate(t: DecompTree) -> None:
    """Raise ``ValueError`` on a malformed tree."""
    if t.kind == LEAF:
        if t.children:
            raise ValueError("leaf with children")
        return
    if t.kind in (PLUS, MINUS):
        if len(t.children) < 2:
            raise ValueError("linear node with fewer than two children")
        for c in t.children:
            if c.kind == t.kind:
                raise ValueError("linear node with a child of the same kind")
    elif t.kind == PRIME:
        if t.label is None or not is_simple(t.label):
            raise ValueError(f"prime label not simple: {t.label}")
        if len(t.children) != len(t.label):
            raise ValueError("prime node arity mismatch")
    else:
        raise ValueError(f"unknown node kind {t.kind!r}")
    for c in t.children:
        validate(c)


def tree_to_permutation(t: DecompTree) -> Perm:
    validate(t)
    return _build(t)


def _build(t: DecompTree) -> Perm:
    if t.kind == LEAF:
        return (1,)
    parts = [_build(c) for c in t.children]
    k = len(parts)
    if t.kind == PLUS:
        skel = tuple(range(1, k + 1))
    elif t.kind == MINUS:
        skel = tuple(range(k, 0, -1))
    else:
        skel = t.label
    return inflate(skel, parts)


def annotate(t: DecompTree) -> DecompTree:
    """Post-order pass recording oscillation and quasi-oscillation facts."""
    from . import pinclass

    kids = tuple(annotate(c) for c in t.children)
    node = replace(t, children=kids)
    info = pinclass.recognize_oscillation(_build(node))
    inc = bool(info) and any(i.direction == "increasing" for i in info)
    dec = bool(info) and any(i.direction == "decreasing" for i in info)
    extra: dict = {"inc_osc": inc, "dec_osc": dec}
    if t.kind == PRIME:
        linfo = pinclass.recognize_oscillation(t.label)
        extra["label_inc_osc"] = any(i.direction == "increasing" for i in linfo)
        extra["label_dec_osc"] = any(i.direction == "decreasing" for i in linfo)
        types = {i.knight_type for i in linfo if i.knight_type}
        extra["osc_type"] = sorted(types)[0] if types else None
        extra["quasi"] = pinclass.quasi_tags(t.label)
    return replace(node, **extra)


def to_dot(t: DecompTree, name: str = "T") -> str:
    """Graphviz rendering; node shape encodes the node kind."""
    lines = [f"digraph {name} {{"]
    counter = [0]

    def emit(node: DecompTree) -> str:
        nid = f"n{counter[0]}"
        counter[0] += 1
        if node.kind == LEAF:
            lines.append(f'  {nid} [shape=point];')
        elif node.kind in (PLUS, MINUS):
            sym = "+" if node.kind == PLUS else "-"
            lines.append(f'  {nid} [shape=circle,label="{sym}"];')
        else:
            lab = " ".join(map(str, node.label))
            lines.append(f'  {nid} [shape=box,label="{lab}"];')
        for c in node.children:
            cid = emit(c)
            lines.append(f"  {nid} -> {cid};")
        return nid

    emit(t)
    lines.append("}")
    return "\n".join(lines) + "\n"
