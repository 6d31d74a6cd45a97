"""Deterministic automata over the four directions U, D, L, R.

States are dense integers and transitions a 4-wide table in letter order
U, D, L, R with -1 for a missing transition.  ``Assembler`` is a mutable
table used to build large automata by sharing sub-automata; ``Dfa`` is the
frozen result on which the generic operations work.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Optional, Sequence

ALPHABET = "UDLR"
IDX = {c: i for i, c in enumerate(ALPHABET)}
MISSING = -1

Row = tuple[int, int, int, int]


@dataclass(frozen=True, eq=False)
class Dfa:
    trans: tuple[Row, ...]
    initial: int
    finals: frozenset[int]
    marks: Mapping[str, int] = field(default_factory=dict)
    # permutation whose reversed gap language is accepted from each mark
    mark_perms: Mapping[str, tuple[int, ...]] = field(default_factory=dict)

    @property
    def n_states(self) -> int:
        return len(self.trans)

    def step(self, q: int, letter: str) -> int:
        return self.trans[q][IDX[letter]] if q >= 0 else MISSING

    def run(self, word: str, start: Optional[int] = None) -> int:
        q = self.initial if start is None else start
        for c in word:
            q = self.step(q, c)
            if q < 0:
                return MISSING
        return q

    def is_complete(self) -> bool:
        return all(t >= 0 for row in self.trans for t in row)

    def is_almost_complete(self) -> bool:
        return all(q in self.finals or all(t >= 0 for t in row) for q, row in enumerate(self.trans))

    def final_has_full_loop(self, f: int) -> bool:
        return all(t == f for t in self.trans[f])

    def is_single_final(self) -> bool:
        """Exactly one final, with no outgoing transitions or only the full loop."""
        if len(self.finals) != 1:
            return False
        (f,) = self.finals
        row = self.trans[f]
        return all(t == MISSING for t in row) or self.final_has_full_loop(f)

    def with_initial(self, q: int) -> "Dfa":
        return Dfa(self.trans, q, self.finals)


def accepts(d: Dfa, word: str, start: Optional[int] = None) -> bool:
    return d.run(word, start) in d.finals


def _coaccessible(d: Dfa) -> list[int]:
    """Distance from each state to a final (-1 when none is reachable)."""
    rev: list[list[int]] = [[] for _ in d.trans]
    for q, row in enumerate(d.trans):
        for t in row:
            if t >= 0:
                rev[t].append(q)
    dist = [-1] * d.n_states
    queue = deque()
    for f in d.finals:
        dist[f] = 0
        queue.append(f)
    while queue:
        q = queue.popleft()
        for p in rev[q]:
            if dist[p] < 0:
                dist[p] = dist[q] + 1
                queue.append(p)
    return dist


def language_up_to(d: Dfa, max_len: int, start: Optional[int] = None) -> list[str]:
    """Accepted words of length at most ``max_len``, sorted by length then
    letter order U, D, L, R."""
    dist = _coaccessible(d)
    q0 = d.initial if start is None else start
    out: list[str] = []
    stack = [(q0, "")]
    while stack:
        q, w = stack.pop()
        if dist[q] < 0 or len(w) + dist[q] > max_len:
            continue
        if q in d.finals:
            out.append(w)
        if len(w) == max_len:
            continue
        for i in range(3, -1, -1):
            t = d.trans[q][i]
            if t >= 0:
                stack.append((t, w + ALPHABET[i]))
    out.sort(key=lambda w: (len(w), [IDX[c] for c in w]))
    return out


# ---------------------------------------------------------------------------
# mutable assembly


class Assembler:
    """Growing transition table with one shared final state ``F`` carrying
    the full loop (when ``loop_final``) or no outgoing transitions."""

    def __init__(self, loop_final: bool = True):
        self.trans: list[list[int]] = []
        self.F = self.new_state()
        if loop_final:
            self.trans[self.F] = [self.F] * 4
        self._union_memo: dict[tuple[int, int], int] = {}

    def new_state(self) -> int:
        self.trans.append([MISSING] * 4)
        return len(self.trans) - 1

    def set(self, q: int, letter: str, t: int) -> None:
        self.trans[q][IDX[letter]] = t

    def first_occurrence(self, groups: Sequence[tuple[Iterable[str], int]]) -> int:
        """First-occurrence Aho-Corasick automaton on the union of the word
        sets, whose exits are redirected to per-group target states.

        When several words end at the same position the exit goes to the
        shared final if any of them targets it, otherwise to the target of the
        longest one.  Returns the initial state.
        """
        children: list[dict[str, int]] = [{}]
        depth = [0]
        target: dict[int, int] = {}
        for words, tgt in groups:
            for w in words:
                if not w:
                    raise ValueError("empty word in a first-occurrence set")
                node = 0
                for c in w:
                    if c not in IDX:
                        raise ValueError(f"bad letter {c!r} in {w!r}")
                    nxt = children[node].get(c)
                    if nxt is None:
                        nxt = len(children)
                        children[node][c] = nxt
                        children.append({})
                        depth.append(depth[node] + 1)
                    node = nxt
                prev = target.get(node)
                if prev is not None and prev != tgt:
                    if self.F in (prev, tgt):
                        tgt = self.F
                    else:
                        raise ValueError(f"word {w!r} assigned to two targets")
                target[node] = tgt
        n = len(children)
        fail = [0] * n
        delta = [[0] * 4 for _ in range(n)]
        exit_to: list[Optional[int]] = [None] * n
        order = []
        queue = deque([0])
        while queue:
            u = queue.popleft()
            order.append(u)
            if u == 0:
                exit_to[u] = None
            else:
                own = target.get(u)
                inherited = exit_to[fail[u]]
                if own is None:
                    exit_to[u] = inherited
                elif inherited == self.F:
                    exit_to[u] = self.F
                else:
                    exit_to[u] = own
            for i, c in enumerate(ALPHABET):
                v = children[u].get(c)
                if v is not None:
                    fail[v] = delta[fail[u]][i] if u != 0 else 0
                    delta[u][i] = v
                    queue.append(v)
                else:
                    delta[u][i] = delta[fail[u]][i] if u != 0 else 0
        state_of: dict[int, int] = {}
        for u in order:
            if exit_to[u] is None:
                state_of[u] = self.new_state()
        for u in order:
            if exit_to[u] is not None:
                continue
            q = state_of[u]
            for i in range(4):
                v = delta[u][i]
                self.trans[q][i] = exit_to[v] if exit_to[v] is not None else state_of[v]
        return state_of[0]

    def union(self, s1: int, s2: int) -> int:
        """Truncated product: accepts (L1 u L2) A* from the pair (s1, s2).

        Both components must be complete and share the final ``F``.
        """
        if s1 == s2:
            return s1
        key = (min(s1, s2), max(s1, s2))
        if key in self._union_memo:
            return self._union_memo[key]
        pairs: dict[tuple[int, int], int] = {}

        def get(p: tuple[int, int], queue: deque) -> int:
            a, b = p
            if a == self.F or b == self.F:
                return self.F
            if a == b:
                return a
            if p not in pairs:
                pairs[p] = self.new_state()
                queue.append(p)
            return pairs[p]

        queue: deque = deque()
        root = get((s1, s2), queue)
        while queue:
            a, b = queue.popleft()
            q = pairs[(a, b)]
            ra, rb = self.trans[a], self.trans[b]
            if MISSING in ra or MISSING in rb:
                raise ValueError("union needs complete operands")
            for i in range(4):
                self.trans[q][i] = get((ra[i], rb[i]), queue)
        self._union_memo[key] = root
        return root

    def freeze(self, initial: int, marks: Optional[Mapping[str, int]] = None,
               mark_perms: Optional[Mapping[str, tuple[int, ...]]] = None,
               finals: Optional[Iterable[int]] = None) -> Dfa:
        """Reachable part from ``initial`` (plus marked states), renumbered in
        breadth-first letter order."""
        marks = dict(marks or {})
        finals = set(finals) if finals is not None else {self.F}
        new: dict[int, int] = {}
        queue = deque()
        for s in [initial, *marks.values()]:
            if s not in new:
                new[s] = len(new)
                queue.append(s)
        order = []
        while queue:
            q = queue.popleft()
            order.append(q)
            for t in self.trans[q]:
                if t >= 0 and t not in new:
                    new[t] = len(new)
                    queue.append(t)
        trans = tuple(tuple(new[t] if t >= 0 else MISSING for t in self.trans[q]) for q in order)
        keep_marks = {k: new[v] for k, v in marks.items()}
        perms = {k: v for k, v in (mark_perms or {}).items() if k in keep_marks}
        return Dfa(trans, new[initial], frozenset(new[f] for f in finals if f in new), keep_marks, perms)


# ---------------------------------------------------------------------------
# first-occurrence constructions


def ac_first(words: Iterable[str]) -> Dfa:
    """Words ending with a first occurrence of a word of ``words``."""
    words = list(words)
    if not words:
        raise ValueError("ac_first needs a nonempty set")
    asm = Assembler(loop_final=False)
    q0 = asm.first_occurrence([(words, asm.F)])
    return asm.freeze(q0)


def _is_factor_of_any(w: str, others: Iterable[str]) -> bool:
    return any(w in o for o in others)


def ac_first_partitioned(x1: Iterable[str], x2: Iterable[str]) -> Dfa:
    """Same language as ``ac_first(x1 | x2)`` with two finals, marked ``f1``
    and ``f2``, telling which part occurred first."""
    x1, x2 = list(x1), list(x2)
    if not x1 or not x2:
        raise ValueError("both parts must be nonempty")
    if any(_is_factor_of_any(w, x2) for w in x1) or any(_is_factor_of_any(w, x1) for w in x2):
        raise ValueError("parts are not factor-independent")
    asm = Assembler(loop_final=False)
    f2 = asm.new_state()
    q0 = asm.first_occurrence([(x1, asm.F), (x2, f2)])
    return asm.freeze(q0, marks={"f1": asm.F, "f2": f2}, finals=[asm.F, f2])


def _single_final(d: Dfa) -> int:
    if not d.is_single_final():
        raise ValueError("automaton is not single-final")
    (f,) = d.finals
    return f


def with_final_loop(d: Dfa) -> Dfa:
    f = _single_final(d)
    trans = list(d.trans)
    trans[f] = (f, f, f, f)
    return Dfa(tuple(trans), d.initial, d.finals, dict(d.marks), dict(d.mark_perms))


def concat(d1: Dfa, d2: Dfa) -> Dfa:
    """Merge the final of ``d1`` into the initial of ``d2``.

    A full loop on the final of ``d1`` is dropped first, which is only
    correct when the language of ``d2`` is of the form A* L.
    """
    f = _single_final(d1)
    off = d1.n_states
    remap = lambda t: (d2.initial + off) if t == f else t  # noqa: E731
    trans = [tuple(remap(t) if t >= 0 else MISSING for t in row) for q, row in enumerate(d1.trans)]
    trans[f] = (MISSING,) * 4  # unreachable placeholder keeps indices stable
    trans += [tuple(t + off if t >= 0 else MISSING for t in row) for row in d2.trans]
    initial = d2.initial + off if d1.initial == f else d1.initial
    marks = {k: v + off for k, v in d2.marks.items()}
    marks.update({k: v for k, v in d1.marks.items() if v != f})
    out = Dfa(tuple(trans), initial, frozenset(x + off for x in d2.finals), marks, dict(d2.mark_perms))
    return reachable(out)


def union_product(d1: Dfa, d2: Dfa, loop: bool = True) -> Dfa:
    """Truncated product union of two almost complete automata; with
    ``loop`` the merged final carries the full loop."""
    for d in (d1, d2):
        if not d.is_almost_complete():
            raise ValueError("union needs almost complete operands")
    pairs: dict[tuple[int, int], int] = {}
    trans: list[list[int]] = [[MISSING] * 4]  # state 0 is the merged final
    queue: deque = deque()

    def get(a: int, b: int) -> int:
        if a in d1.finals or b in d2.finals:
            return 0
        if (a, b) not in pairs:
            pairs[(a, b)] = len(trans)
            trans.append([MISSING] * 4)
            queue.append((a, b))
        return pairs[(a, b)]

    root = get(d1.initial, d2.initial)
    while queue:
        a, b = queue.popleft()
        q = pairs[(a, b)]
        for i in range(4):
            ta, tb = d1.trans[a][i], d2.trans[b][i]
            trans[q][i] = get(ta, tb)
    if loop:
        trans[0] = [0] * 4
    return reachable(Dfa(tuple(tuple(r) for r in trans), root, frozenset({0})))


def intersect(d1: Dfa, d2: Dfa) -> Dfa:
    """Standard product; a missing transition in either operand is missing."""
    pairs: dict[tuple[int, int], int] = {}
    trans: list[list[int]] = []
    queue: deque = deque()

    def get(a: int, b: int) -> int:
        if a < 0 or b < 0:
            return MISSING
        if (a, b) not in pairs:
            pairs[(a, b)] = len(trans)
            trans.append([MISSING] * 4)
            queue.append((a, b))
        return pairs[(a, b)]

    root = get(d1.initial, d2.initial)
    while queue:
        a, b = queue.popleft()
        q = pairs[(a, b)]
        for i in range(4):
            trans[q][i] = get(d1.trans[a][i], d2.trans[b][i])
    finals = frozenset(q for (a, b), q in pairs.items() if a in d1.finals and b in d2.finals)
    return Dfa(tuple(tuple(r) for r in trans), root, finals)


def complete(d: Dfa) -> Dfa:
    """Add a non-final sink for every missing transition (no-op if complete)."""
    if d.is_complete():
        return d
    sink = d.n_states
    trans = [tuple(t if t >= 0 else sink for t in row) for row in d.trans]
    trans.append((sink,) * 4)
    return Dfa(tuple(trans), d.initial, d.finals, dict(d.marks), dict(d.mark_perms))


def complement(d: Dfa) -> Dfa:
    if not d.is_complete():
        raise ValueError("complement needs a complete automaton (call complete first)")
    finals = frozenset(range(d.n_states)) - d.finals
    return Dfa(d.trans, d.initial, finals, dict(d.marks), dict(d.mark_perms))


def reachable(d: Dfa) -> Dfa:
    """Accessible part, renumbered breadth-first."""
    new = {d.initial: 0}
    order = [d.initial]
    queue = deque([d.initial])
    while queue:
        q = queue.popleft()
        for t in d.trans[q]:
            if t >= 0 and t not in new:
                new[t] = len(new)
                order.append(t)
                queue.append(t)
    trans = tuple(tuple(new[t] if t >= 0 else MISSING for t in d.trans[q]) for q in order)
    marks = {k: new[v] for k, v in d.marks.items() if v in new}
    perms = {k: v for k, v in d.mark_perms.items() if k in marks}
    return Dfa(trans, 0, frozenset(new[f] for f in d.finals if f in new), marks, perms)


def trim(d: Dfa) -> Dfa:
    """Keep the states both reachable from the initial state and
    co-reachable to a final.  An empty language gives a lone non-final
    initial state."""
    d = reachable(d)
    dist = _coaccessible(d)
    keep = [q for q in range(d.n_states) if dist[q] >= 0]
    if d.initial not in keep:
        return Dfa(((MISSING,) * 4,), 0, frozenset())
    new = {q: i for i, q in enumerate(keep)}
    trans = tuple(tuple(new.get(t, MISSING) for t in d.trans[q]) for q in keep)
    marks = {k: new[v] for k, v in d.marks.items() if v in new}
    perms = {k: v for k, v in d.mark_perms.items() if k in marks}
    return Dfa(trans, new[d.initial], frozenset(new[f] for f in d.finals), marks, perms)


def has_cycle(d: Dfa) -> Optional[tuple[str, str, str]]:
    """A pumping triple ``(prefix, cycle, suffix)`` with ``prefix cycle^k
    suffix`` accepted for every k, or ``None`` when the accepted language is
    finite.  ``d`` is expected trimmed; states that cannot reach a final
    are ignored anyway."""
    dist = _coaccessible(d)
    if dist[d.initial] < 0:
        return None
    WHITE, GRAY, BLACK = 0, 1, 2
    color = [WHITE] * d.n_states
    parent: dict[int, tuple[int, str]] = {}
    stack = [(d.initial, 0)]
    color[d.initial] = GRAY
    while stack:
        q, i = stack.pop()
        if i == 4:
            color[q] = BLACK
            continue
        stack.append((q, i + 1))
        t = d.trans[q][i]
        if t < 0 or dist[t] < 0:
            continue
        if color[t] == GRAY:
            # back edge q -> t closes a cycle through t
            cyc = ALPHABET[i]
            x = q
            while x != t:
                x, c = parent[x]
                cyc = c + cyc
            prefix, x = "", t
            while x != d.initial:
                x, c = parent[x]
                prefix = c + prefix
            return prefix, cyc, _shortest_to_final(d, t, dist)
        if color[t] == WHITE:
            color[t] = GRAY
            parent[t] = (q, ALPHABET[i])
            stack.append((t, 0))
    return None


def _shortest_to_final(d: Dfa, q: int, dist: list[int]) -> str:
    out = ""
    while q not in d.finals:
        for i in range(4):
            t = d.trans[q][i]
            if t >= 0 and dist[t] == dist[q] - 1:
                out += ALPHABET[i]
                q = t
                break
    return out


def automaton_M() -> Dfa:
    """Direction words of length at least 2 alternating between the axes."""
    U, D, L, R = range(4)
    trans = [[MISSING] * 4 for _ in range(5)]
    for a in (U, D):
        trans[0][a] = 1
        trans[2][a] = 4
        trans[3][a] = 4
    for a in (L, R):
        trans[0][a] = 2
        trans[1][a] = 3
        trans[4][a] = 3
    return Dfa(tuple(tuple(r) for r in trans), 0, frozenset({3, 4}))


def equivalent(d1: Dfa, d2: Dfa, start1: Optional[int] = None, start2: Optional[int] = None,
               within: Optional[Dfa] = None) -> Optional[str]:
    """Shortest word on which the two automata disagree (restricted to the
    language of ``within`` when given), or ``None`` when they agree."""
    w3 = within
    s = (d1.initial if start1 is None else start1, d2.initial if start2 is None else start2,
         w3.initial if w3 is not None else 0)
    seen = {s}
    queue = deque([(s, "")])
    while queue:
        (a, b, c), w = queue.popleft()
        inside = w3 is None or c in w3.finals
        if inside and ((a in d1.finals) != (b in d2.finals)):
            return w
        for i in range(4):
            na = d1.trans[a][i] if a >= 0 else MISSING
            nb = d2.trans[b][i] if b >= 0 else MISSING
            nc = (w3.trans[c][i] if c >= 0 else MISSING) if w3 is not None else 0
            if w3 is not None and nc < 0:
                continue
            t = (na, nb, nc)
            if t not in seen:
                seen.add(t)
                queue.append((t, w + ALPHABET[i]))
    return None


def to_dot(d: Dfa, name: str = "A") -> str:
    """Graphviz text: double circles for finals, mark names as labels,
    parallel edges merged into one edge with a letter group label."""
    names: dict[int, list[str]] = {}
    for k, v in sorted(d.marks.items()):
        names.setdefault(v, []).append(k)
    lines = [f"digraph {name} {{", "  rankdir=LR;", '  start [shape=point];']
    for q in range(d.n_states):
        shape = "doublecircle" if q in d.finals else "circle"
        label = ",".join(names.get(q, [])) or str(q)
        lines.append(f'  s{q} [shape={shape},label="{label}"];')
    lines.append(f"  start -> s{d.initial};")
    for q, row in enumerate(d.trans):
        groups: dict[int, str] = {}
        for i, t in enumerate(row):
            if t >= 0:
                groups[t] = groups.get(t, "") + ALPHABET[i]
        for t, letters in groups.items():
            lines.append(f'  s{q} -> s{t} [label="{",".join(letters)}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
