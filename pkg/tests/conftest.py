from __future__ import annotations

import time
from contextlib import contextmanager
from pathlib import Path

from hypothesis import HealthCheck, settings, strategies as st

settings.register_profile(
    "default", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

GOLDEN = Path(__file__).parent / "golden"

# criterion number -> (passed, seconds, label)
ACCEPTANCE: dict[str, tuple[bool, float, str]] = {}


@contextmanager
def criterion(n: str, label: str, budget: float):
    """Record one acceptance line; a criterion also fails when it runs over
    its time budget."""
    t0 = time.perf_counter()
    ok = False
    try:
        yield
        ok = True
    finally:
        dt = time.perf_counter() - t0
        ok = ok and dt < budget
        ACCEPTANCE[n] = (ok, dt, label)
        print(f"criterion {n}: {'PASS' if ok else 'FAIL'} ({dt:.1f} s, budget {budget:.0f} s) {label}")
    assert dt < budget, f"criterion {n} took {dt:.1f} s, budget {budget} s"


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        ok, dt, label = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'} ({dt:.1f} s) {label}")


@st.composite
def perms(draw, min_size: int = 1, max_size: int = 7):
    n = draw(st.integers(min_size, max_size))
    return tuple(draw(st.permutations(range(1, n + 1))))


symmetries = st.integers(0, 7)
directions = st.sampled_from("UDLR")
