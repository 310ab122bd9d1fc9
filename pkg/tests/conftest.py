"""Shared hypothesis strategies and the acceptance-line reporter."""

from __future__ import annotations

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from ovgeom.core import ov_instance

# Exact-arithmetic work can be slow per example; the value of these tests is
# exact equality, not speed, so disable the per-example deadline.
settings.register_profile(
    "exact",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("exact")

bits = st.integers(0, 1)


def bit_vectors(min_d: int = 1, max_d: int = 8):
    return st.lists(bits, min_size=min_d, max_size=max_d).map(tuple)


def vector_pairs(max_d: int = 8):
    """Two bit vectors of one shared length."""
    return st.integers(1, max_d).flatmap(
        lambda d: st.tuples(
            st.lists(bits, min_size=d, max_size=d).map(tuple),
            st.lists(bits, min_size=d, max_size=d).map(tuple),
        )
    )


def instances(max_n: int = 5, max_d: int = 5):
    def build(d):
        fam = st.lists(
            st.lists(bits, min_size=d, max_size=d).map(tuple),
            min_size=1,
            max_size=max_n,
        )
        return st.builds(ov_instance, fam, fam)

    return st.integers(1, max_d).flatmap(build)


small_coord = st.integers(-8, 8)

rational_coord = st.fractions(
    min_value=-8, max_value=8, max_denominator=6
)


def int_curves(max_len: int = 6):
    return st.lists(
        st.tuples(small_coord, small_coord), min_size=1, max_size=max_len
    ).map(tuple)


def rat_curves(max_len: int = 5):
    return st.lists(
        st.tuples(rational_coord, rational_coord), min_size=1, max_size=max_len
    ).map(tuple)


def int_points(dim: int, max_n: int = 12):
    coords = st.tuples(*[small_coord] * dim)
    return st.lists(coords, min_size=1, max_size=max_n)


# ---------------------------------------------------------------------------
# Acceptance reporting: tests/test_acceptance.py records one line per
# criterion through this stash; the summary hook prints them at the end of
# the run so the pass/fail ledger is visible in plain `pytest -v` output.
# ---------------------------------------------------------------------------

ACCEPTANCE_LINES = pytest.StashKey[list]()


@pytest.fixture
def criterion(request):
    """Run one acceptance criterion body, recording a PASS/FAIL line."""

    def run(number: str, name: str, body) -> None:
        lines = request.config.stash.setdefault(ACCEPTANCE_LINES, [])
        try:
            body()
        except BaseException:
            lines.append(f"criterion {number:>3}  FAIL  {name}")
            raise
        lines.append(f"criterion {number:>3}  PASS  {name}")

    return run


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash.get(ACCEPTANCE_LINES, None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines):
            terminalreporter.write_line(line)
