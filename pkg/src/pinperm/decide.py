"""Finite-or-infinite decision for the simple permutations of a finitely
based class: three symmetry screens plus the proper pin-permutation stage
built from the automata ``A_pi``."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from typing import Iterable, Optional, Sequence

from . import automata as am
from .builder import BuildMode, build_A_pi_perm
from .config import DECIDE
from .decomp import DecompTree
from .perm import Perm, avoids_all, fmt, normalize_basis
from .pinclass import is_pin_perm
from .pinword import decode, in_M, phi_inverse
from .screens import run_screens


class WitnessError(AssertionError):
    """A pumped word failed validation: this signals a construction bug."""


@dataclass
class Witness:
    prefix: str
    cycle: str
    suffix: str
    samples: list[str] = field(default_factory=list)


@dataclass
class Verdict:
    finite: bool
    stages: dict[str, bool]
    witness: Optional[Witness]
    stats: dict

    def to_dict(self) -> dict:
        return {
            "finite": self.finite,
            "stages": dict(self.stages),
            "witness": asdict(self.witness) if self.witness else None,
            "stats": self.stats,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True, ensure_ascii=False)

    @classmethod
    def from_dict(cls, d: dict) -> "Verdict":
        w = d.get("witness")
        return cls(d["finite"], dict(d["stages"]), Witness(**w) if w else None, d["stats"])


def _nothing() -> am.Dfa:
    """Complete automaton with the empty language."""
    return am.Dfa(((0, 0, 0, 0),), 0, frozenset())


def build_A_C(pb: Iterable[Perm], mode: BuildMode | str = DECIDE.mode,
              automata: Optional[list[am.Dfa]] = None) -> am.Dfa:
    """Alternating words whose reverse lies in no gap language of ``pb``
    (reversed words of the class's proper pin-permutations).  Elements of
    ``pb`` may be permutations or decomposition trees."""
    pb = sorted({p.perm() if isinstance(p, DecompTree) else tuple(p) for p in pb},
                key=lambda p: (len(p), p))
    parts = [build_A_pi_perm(p, mode) for p in pb]
    if automata is not None:
        automata.extend(parts)
    a1 = parts[0] if parts else _nothing()
    for d in parts[1:]:
        a1 = am.union_product(a1, d, loop=True)
    m = am.automaton_M()
    a2 = am.intersect(a1, m)
    return am.intersect(am.complement(am.complete(a2)), m)


def decode_accepted(word: str) -> Perm:
    """Permutation of an accepted word of ``A_C``."""
    m = word[::-1]
    if not in_M(m):
        raise WitnessError(f"accepted word {word!r} is not alternating")
    return decode(phi_inverse(m))


def pump_witness(a_c: am.Dfa, basis: Sequence[Perm], k_max: int = DECIDE.pump_k_max,
                 triple: Optional[tuple[str, str, str]] = None) -> Witness:
    """Validate ``prefix cycle^k suffix`` for k = 0..k_max: accepted, its
    reverse alternating, and decoding to a permutation of the class.
    Raises ``WitnessError`` on any failure."""
    triple = triple or am.has_cycle(a_c)
    if triple is None:
        raise WitnessError("no accessible and co-accessible cycle")
    prefix, cycle, suffix = triple
    if not cycle:
        raise WitnessError("empty cycle")
    samples = []
    last = -1
    for k in range(k_max + 1):
        w = prefix + cycle * k + suffix
        if not am.accepts(a_c, w):
            raise WitnessError(f"pumped word {w!r} rejected")
        sigma = decode_accepted(w)
        if not avoids_all(sigma, basis):
            raise WitnessError(f"{fmt(sigma)} from {w!r} contains a basis element")
        if len(sigma) <= last:
            raise WitnessError("decoded sizes do not grow")
        last = len(sigma)
        samples.append(fmt(sigma))
    return Witness(prefix, cycle, suffix, samples)


def decide(basis: Iterable[Perm], mode: BuildMode | str = DECIDE.mode,
           k_max: int = DECIDE.pump_k_max) -> Verdict:
    """Whether the class with this basis contains finitely many simple
    permutations, with the four stage results and, when the proper-pin
    stage fails, a validated pumping witness."""
    basis, removed = normalize_basis(basis)
    notes = [f"dropped {fmt(p)}: contains another basis element" for p in removed]
    stages = run_screens(basis)
    pb = [p for p in basis if is_pin_perm(p)]
    notes += [f"{fmt(p)} is not a pin-permutation: no proper pin-permutation contains it"
              for p in basis if not is_pin_perm(p)]
    if not basis:
        notes.append("empty basis: every permutation is in the class")
    parts: list[am.Dfa] = []
    a_c = am.trim(build_A_C(pb, mode, parts))
    triple = am.has_cycle(a_c)
    stages["proper_pins"] = triple is None
    witness = pump_witness(a_c, basis, k_max, triple) if triple else None
    stats = {
        "mode": BuildMode(mode).value,
        "basis": [fmt(p) for p in basis],
        "pin_basis": [fmt(p) for p in pb],
        "A_pi_states": [d.n_states for d in parts],
        "A_C_states": a_c.n_states,
        "notes": notes,
    }
    order = ("parallel", "wedge1", "wedge2", "proper_pins")
    stages = {k: stages[k] for k in order}
    return Verdict(all(stages.values()), stages, witness, stats)


def accepted_words(a_c: am.Dfa) -> list[str]:
    """Every accepted word of an automaton with a finite language."""
    a_c = am.trim(a_c)
    if am.has_cycle(a_c) is not None:
        raise ValueError("language is infinite")
    return am.language_up_to(a_c, a_c.n_states)


def proper_pins_of(a_c: am.Dfa) -> list[Perm]:
    """Decoded proper pin-permutations of a finite ``A_C``."""
    return sorted({decode_accepted(w) for w in accepted_words(a_c)}, key=lambda p: (len(p), p))


def cross_check(basis: Iterable[Perm], mode: BuildMode | str = DECIDE.mode, max_len: int = 8) -> list[str]:
    """One-sided soundness of the proper-pin stage against the oracle.

    A finite ``A_C`` must decode into avoiders and, up to size ``max_len``,
    list exactly the proper pin-permutations the oracle enumerates.  An
    infinite one must yield a witness that pumps.  Returns the problems
    found (empty when consistent).
    """
    from .oracle import enumerate_proper_pins_in_class

    basis, _ = normalize_basis(basis)
    a_c = am.trim(build_A_C([p for p in basis if is_pin_perm(p)], mode))
    triple = am.has_cycle(a_c)
    problems: list[str] = []
    if triple is not None:
        try:
            pump_witness(a_c, basis, DECIDE.pump_k_max, triple)
        except WitnessError as exc:
            problems.append(str(exc))
        return problems
    decoded = proper_pins_of(a_c)
    problems += [f"{fmt(p)} contains a basis element" for p in decoded if not avoids_all(p, basis)]
    small = {p for p in decoded if len(p) <= max_len}
    expected = set(enumerate_proper_pins_in_class(basis, max_len))
    problems += [f"missing {fmt(p)}" for p in sorted(expected - small)]
    problems += [f"unexpected {fmt(p)}" for p in sorted(small - expected)]
    return problems


def random_basis(rng, max_elements: int = 3, max_size: int = 5) -> list[Perm]:
    """Between one and ``max_elements`` uniform permutations of sizes 2..max_size."""
    out = []
    for _ in range(rng.randint(1, max_elements)):
        p = list(range(1, rng.randint(2, max_size) + 1))
        rng.shuffle(p)
        out.append(tuple(p))
    return out
