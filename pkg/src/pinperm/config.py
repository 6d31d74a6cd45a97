"""Tunable caps and defaults, grouped in frozen dataclasses."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class OracleConfig:
    max_pin_word_perm: int = 8
    max_simple_size: int = 9
    max_word_len: int = 9
    max_member_perm: int = 7


@dataclass(frozen=True)
class DecideConfig:
    mode: str = "optimized"
    pump_k_max: int = 3
    sample_words: int = 5


@dataclass(frozen=True)
class CliConfig:
    fmt: str = "text"
    max_word_len: int = 9
    oracle_check: int = 0
    jobs: int = 1


ORACLE = OracleConfig()
DECIDE = DecideConfig()
CLI = CliConfig()
