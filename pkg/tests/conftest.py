from pathlib import Path

import pytest
from hypothesis import settings
from hypothesis import strategies as st

from coxpoly.intmat import IntMatrix
from coxpoly.polyalg import AmbientPolynomial

# exact arithmetic on growing entries has uneven timings
settings.register_profile("exact", deadline=None)
settings.load_profile("exact")

FIXTURES = Path(__file__).parent / "fixtures"

# criterion id -> (passed, detail); filled by test_acceptance.py
ACCEPTANCE_RESULTS: dict = {}


@pytest.fixture
def fixtures():
    return FIXTURES


def polys(max_degree=12, bound=50):
    return st.integers(0, max_degree).flatmap(
        lambda n: st.lists(st.integers(-bound, bound), min_size=n + 1, max_size=n + 1).map(
            lambda c: AmbientPolynomial(n, tuple(c))
        )
    )


def palindromic_polys(max_degree=12, bound=50):
    def build(n):
        half = st.lists(st.integers(-bound, bound), min_size=n // 2 + 1, max_size=n // 2 + 1)
        return half.map(lambda h: AmbientPolynomial(n, tuple(h + h[: (n + 1) // 2][::-1])))

    return st.integers(0, max_degree).flatmap(build)


def matrices(min_size=1, max_size=6, lo=-3, hi=3):
    return st.integers(min_size, max_size).flatmap(
        lambda n: st.lists(
            st.lists(st.integers(lo, hi), min_size=n, max_size=n), min_size=n, max_size=n
        ).map(IntMatrix.of)
    )


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_RESULTS, key=lambda k: int(k.split()[0])):
        ok, detail = ACCEPTANCE_RESULTS[key]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {key}: {detail}")
