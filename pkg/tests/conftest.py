from __future__ import annotations

import re

from hypothesis import settings, strategies as st

from nsgs.numset import NumericalSet, from_gaps

settings.register_profile("default", max_examples=200, deadline=None)
settings.load_profile("default")


@st.composite
def numerical_sets(draw, min_frobenius: int = 1, max_frobenius: int = 30) -> NumericalSet:
    F = draw(st.integers(min_frobenius, max_frobenius))
    below = draw(st.sets(st.integers(1, F - 1))) if F > 1 else set()
    return from_gaps(sorted(below | {F}))


@st.composite
def partitions(draw, max_boxes: int = 20) -> tuple[int, ...]:
    total = draw(st.integers(1, max_boxes))
    rows = []
    left, cap = total, total
    while left:
        r = draw(st.integers(1, min(left, cap)))
        rows.append(r)
        left -= r
        cap = r
    return tuple(rows)


# One PASS/FAIL line per acceptance criterion, printed after the run.

_CRITERIA: dict[int, tuple[str, str]] = {}


def pytest_runtest_logreport(report):
    m = re.search(r"test_acceptance\.py::test_criterion_(\d+)_(\w+)", report.nodeid)
    if not m:
        return
    n, name = int(m.group(1)), m.group(2).replace("_", " ")
    if report.when == "call" or report.failed:
        if report.failed or n not in _CRITERIA:
            _CRITERIA[n] = ("PASS" if report.passed else "FAIL", name)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_CRITERIA):
        status, name = _CRITERIA[n]
        terminalreporter.write_line(f"criterion {n}: {status}  {name}")
