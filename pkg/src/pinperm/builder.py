"""Recursive construction of the automaton ``A_pi`` accepting the reversed
gap language of a pin-permutation.

Every sub-permutation met during the recursion gets one state of a shared
assembler (memoized by value and by the letter relabeling in force), whose
language is the reversed gap language of that sub-permutation.  For a
linear root the sub-permutations are contiguous runs of children: the cell
for children ``a..b`` is the state of ``(+)[xi_a, ..., xi_b]``.
"""

from __future__ import annotations

from enum import Enum
from typing import Iterable, Optional

from . import pinclass as pc
from .automata import Assembler, Dfa
from .decomp import DecompTree, _build
from .perm import Perm, apply_symmetry, compose_symmetry, direct_sum
from .pinword import NUMERALS, classify, phi_set, snlf

REVERSE, RC = 1, 3


class BuildMode(str, Enum):
    EXACT = "exact"
    OPTIMIZED = "optimized"


def rphi(word: str) -> frozenset[str]:
    """Reversed phi images of a strict pin word."""
    return frozenset(v[::-1] for v in phi_set(word))


def rphi_all(words: Iterable[str]) -> frozenset[str]:
    out: set[str] = set()
    for w in words:
        out |= rphi(w)
    return frozenset(out)


_M2_REV = rphi_all(NUMERALS)


class _Construction:
    def __init__(self, mode: BuildMode):
        self.mode = BuildMode(mode)
        self.asm = Assembler(loop_final=True)
        self.F = self.asm.F
        self.memo: dict[tuple[Perm, int], int] = {}
        self.lit_memo: dict[frozenset[str], int] = {}
        self._leaf: Optional[int] = None

    # -- small pieces -----------------------------------------------------

    def leaf(self) -> int:
        """Four states: a vertical or horizontal letter followed by one of
        the other axis reaches the looping final."""
        if self._leaf is None:
            asm = self.asm
            q0, qv, qh = asm.new_state(), asm.new_state(), asm.new_state()
            for c in "UD":
                asm.set(q0, c, qv)
                asm.set(qv, c, qv)
                asm.set(qh, c, self.F)
            for c in "LR":
                asm.set(q0, c, qh)
                asm.set(qh, c, qh)
                asm.set(qv, c, self.F)
            self._leaf = q0
        return self._leaf

    def literal(self, words: frozenset[str]) -> int:
        """Exact union of the gap languages of a finite set of pin words.

        Words are grouped by their last numeral-led factor; words sharing the
        same set of prefixes share one first-occurrence automaton, and the
        groups are combined by the truncated product.
        """
        words = frozenset(words)
        if words == frozenset({""}):
            return self.F
        if words == frozenset(NUMERALS):
            return self.leaf()
        if words in self.lit_memo:
            return self.lit_memo[words]
        by_last: dict[str, set[str]] = {}
        for w in words:
            parts = snlf(w)
            by_last.setdefault(parts[-1], set()).add("".join(parts[:-1]))
        by_prefixes: dict[frozenset[str], set[str]] = {}
        for last, prefixes in by_last.items():
            by_prefixes.setdefault(frozenset(prefixes), set()).add(last)
        states = []
        for prefixes, lasts in sorted(by_prefixes.items(), key=lambda kv: sorted(kv[0])):
            target = self.literal(prefixes)
            states.append(self.asm.first_occurrence([(rphi_all(lasts), target)]))
        q = states[0]
        for other in states[1:]:
            q = self.asm.union(q, other)
        self.lit_memo[words] = q
        return q

    def sqs(self, strict: Iterable[str], quasi: Iterable[str]) -> int:
        """Strict and quasi-strict words.  The optimized form replaces the
        gap before the leading numeral by an adjacent two-letter factor,
        which changes nothing on alternating words."""
        strict, quasi = frozenset(strict), frozenset(quasi)
        if self.mode is BuildMode.EXACT:
            return self.literal(strict | quasi)
        tails: dict[str, set[str]] = {}
        for w in quasi:
            tails.setdefault(w[1:], set()).add(w[0])
        if any(len(firsts) != 4 for firsts in tails.values()):
            return self.literal(strict | quasi)
        xs = set(rphi_all(strict))
        for t in tails:
            xs |= {v + m for v in rphi(t) for m in _M2_REV}
        return self.asm.first_occurrence([(xs, self.F)])

    # -- recursion --------------------------------------------------------

    def state_for(self, p: Perm, s: int = 0) -> int:
        """State accepting the reversed gap language of
        ``apply_symmetry(p, s)``."""
        key = (tuple(p), s)
        if key not in self.memo:
            self.memo[key] = self._build(tuple(p), s)
        return self.memo[key]

    def _map(self, words: Iterable[str], s: int) -> frozenset[str]:
        return frozenset(pc.symmetry_word(w, s) for w in words)

    def _build(self, p: Perm, s: int) -> int:
        case = pc.analyze(p)
        if isinstance(case, pc.LeafCase):
            return self.leaf()
        if isinstance(case, pc.MinusCase):
            return self.state_for(case.mirrored, compose_symmetry(s, REVERSE))
        if isinstance(case, pc.SimpleCase):
            return self.sqs(self._map(case.strict, s), self._map(case.quasi, s))
        if isinstance(case, pc.PlusCase):
            return self._plus(case, s)
        if isinstance(case, pc.PrimeOneCase):
            groups = []
            if case.qx:
                groups.append((rphi_all(self._map(case.qx, s)), self.state_for(case.child, s)))
            groups += self._piece_groups(case.pieces, s)
            q = self.asm.first_occurrence(groups) if groups else None
            if case.sqs:
                strict = {w for w in case.sqs if classify(w) == "strict"}
                quasi = case.sqs - strict
                q2 = self.sqs(self._map(strict, s), self._map(quasi, s))
                q = q2 if q is None else self.asm.union(q, q2)
            return q
        if isinstance(case, pc.PrimeTwoCase):
            return self.asm.first_occurrence(self._piece_groups(case.pieces, s))
        raise TypeError(case)

    def _piece_groups(self, pieces, s: int) -> list[tuple[frozenset[str], int]]:
        by_sub: dict[Perm, set[str]] = {}
        for piece in pieces:
            by_sub.setdefault(piece.sub, set()).add(piece.word)
        return [
            (rphi_all(self._map(ws, s)), self.state_for(sub, s)) for sub, ws in sorted(by_sub.items())
        ]

    def _plus(self, case: pc.PlusCase, s: int) -> int:
        kids = case.children
        r = len(kids)
        if r == 2 and case.rho is None:
            a, b = kids
            if len(a) == 1 and len(b) == 1:
                return self.sqs(self._map(pc.S_PLUS_H | pc.S_PLUS_V, s), self._map(pc.Q_PLUS, s))
            if len(a) > 1 and len(b) == 1:
                # reverse-complement turns xi (+) 1 into 1 (+) rc(xi)
                return self.state_for(direct_sum((1,), apply_symmetry(a, RC)), compose_symmetry(s, RC))
        groups = []
        if case.rho != 0:
            groups.append((rphi_all(self._map(pc.p1_words(kids[0]), s)), self.state_for(direct_sum(*kids[1:]), s)))
        if case.rho != r - 1:
            groups.append((rphi_all(self._map(pc.p3_words(kids[-1]), s)), self.state_for(direct_sum(*kids[:-1]), s)))
        if r == 2 and case.rho is not None:
            by_sub: dict[Perm, set[str]] = {}
            for h in case.hterms:
                by_sub.setdefault(h.sub, set()).add(h.word)
            for sub, ws in sorted(by_sub.items()):
                groups.append((rphi_all(self._map(ws, s)), self.state_for(sub, s)))
        q = self.asm.first_occurrence(groups)
        if r == 2 and case.rho is None and len(kids[0]) == 1:
            extra = self._map(pc.mix_words(kids[1]) | pc.sep_words(kids[1]), s)
            q = self.asm.union(q, self.literal(extra))
        return q

    # -- marks ------------------------------------------------------------

    def named_marks(self, p: Perm) -> tuple[dict[str, int], dict[str, Perm]]:
        """Semantic marks of the top-level case: each maps to a state whose
        language is the reversed gap language of the recorded permutation."""
        s = 0
        case = pc.analyze(p)
        while isinstance(case, pc.MinusCase):
            s = compose_symmetry(s, REVERSE)
            p = case.mirrored
            case = pc.analyze(p)
        marks: dict[str, int] = {}
        perms: dict[str, Perm] = {}

        def put(name: str, sub: Perm) -> None:
            key = (tuple(sub), s)
            if key in self.memo and name not in marks:
                marks[name] = self.memo[key]
                perms[name] = apply_symmetry(tuple(sub), s)

        if isinstance(case, pc.PrimeOneCase):
            put("q_T", case.child)
            if case.pieces and pc.condition_C(pc.tree_of(p)):
                for piece in case.pieces:
                    put("q_{T'}", piece.sub)
        elif isinstance(case, pc.PrimeTwoCase):
            for piece in case.pieces:
                put("q_T", piece.sub)
        elif isinstance(case, pc.PlusCase):
            kids = case.children
            r = len(kids)
            if r >= 2 and case.rho != 0:
                put("q_{2r}", direct_sum(*kids[1:]))
            if r >= 2 and case.rho != r - 1:
                put("q_{1(r-1)}", direct_sum(*kids[:-1]))
            for h, name in pc.hterm_names(p).items():
                put(f"q_{{{name}}}" if len(name) > 1 else f"q_{name}", h.sub)
        return marks, perms


def _check_shape(d: Dfa) -> Dfa:
    if not d.is_complete() or len(d.finals) != 1:
        raise AssertionError("builder produced an automaton that is not complete and single-final")
    (f,) = d.finals
    if not d.final_has_full_loop(f):
        raise AssertionError("final state lacks the full loop")
    return d


def build_A_pi_perm(p: Perm, mode: BuildMode | str = BuildMode.OPTIMIZED) -> Dfa:
    p = tuple(p)
    if not pc.is_pin_perm(p):
        raise ValueError(f"not a pin-permutation: {p}")
    con = _Construction(BuildMode(mode))
    q0 = con.state_for(p)
    marks, perms = con.named_marks(p)
    return _check_shape(con.asm.freeze(q0, marks, perms))


def build_A_pi(t: DecompTree, mode: BuildMode | str = BuildMode.OPTIMIZED) -> Dfa:
    """Complete automaton with a unique looping final accepting the reversed
    gap language of the permutation of ``t`` (exact mode), or a language
    with the same alternating words (optimized mode)."""
    return build_A_pi_perm(_build(t), mode)


def build_sqs(strict: Iterable[str], quasi: Iterable[str], mode: BuildMode | str = BuildMode.OPTIMIZED) -> Dfa:
    con = _Construction(BuildMode(mode))
    return _check_shape(con.asm.freeze(con.sqs(strict, quasi)))


def build_pair_automata(xi_i: Perm, xi_j: Perm) -> Dfa:
    """First occurrence of a reading of ``xi_i`` from its bottom-left
    corner (final ``f1``) or of ``xi_j`` from its top-right corner (final
    ``f2``); the two sets use disjoint letters."""
    from .automata import ac_first_partitioned

    return ac_first_partitioned(rphi_all(pc.p1_words(xi_i)), rphi_all(pc.p3_words(xi_j)))


def build_oplus_pair(xi_i: Perm, xi_j: Perm, mode: BuildMode | str = BuildMode.OPTIMIZED) -> Dfa:
    for xi in (xi_i, xi_j):
        if not pc.is_increasing_oscillation(xi):
            raise ValueError(f"not an increasing oscillation: {xi}")
    return build_A_pi_perm(direct_sum(tuple(xi_i), tuple(xi_j)), mode)
