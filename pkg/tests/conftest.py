"""Shared fixtures and the acceptance summary printed at the end of a run."""

import pytest
from hypothesis import strategies as st

from gl11weight.diagrams import ChordDiagram
from gl11weight.poly import WeightPoly

ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def record(criterion: int, ok: bool, detail: str) -> None:
    ACCEPTANCE[criterion] = (ok, detail)
    print(f"ACCEPTANCE {criterion:2d}: {'PASS' if ok else 'FAIL'}  {detail}")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[k]
        terminalreporter.write_line(f"ACCEPTANCE {k:2d}: {'PASS' if ok else 'FAIL'}  {detail}")


small_ints = st.integers(min_value=-20, max_value=20)


@st.composite
def polys(draw, max_terms=4, max_exp=4):
    n = draw(st.integers(0, max_terms))
    terms = {}
    for _ in range(n):
        a = draw(st.integers(0, max_exp))
        b = draw(st.integers(0, max_exp))
        terms[(a, b)] = draw(small_ints)
    return WeightPoly(terms)


@pytest.fixture
def record_acceptance():
    return record


@st.composite
def diagrams(draw, max_n=6):
    n = draw(st.integers(0, max_n))
    pts = draw(st.permutations(list(range(2 * n))))
    return ChordDiagram(zip(pts[::2], pts[1::2]))
