"""Deciding whether a permutation class given by a finite basis contains
finitely many simple permutations, through pin words and automata."""

__version__ = "0.1.0"
