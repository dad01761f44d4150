from __future__ import annotations

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from matchfactory.graph import Multigraph

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@st.composite
def multigraphs(draw, min_n=1, max_n=8, max_m=18):
    n = draw(st.integers(min_n, max_n))
    if n < 2:
        return Multigraph(n, ())
    pair = st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(lambda p: p[0] != p[1])
    return Multigraph(n, tuple(draw(st.lists(pair, max_size=max_m))))


@st.composite
def connected_multigraphs(draw, min_n=2, max_n=8, max_extra=14):
    """A random spanning tree plus random extra edges."""
    n = draw(st.integers(min_n, max_n))
    edges = [(draw(st.integers(0, v - 1)), v) for v in range(1, n)]
    pair = st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(lambda p: p[0] != p[1])
    edges += draw(st.lists(pair, max_size=max_extra))
    return Multigraph(n, tuple(edges))


# one line per acceptance criterion in the terminal summary

_criteria: dict[int, list[tuple[str, str]]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, text): acceptance criterion")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    marker = report.user_properties and dict(report.user_properties).get("criterion")
    if not marker:
        return
    number, text = marker
    if hasattr(report, "wasxfail"):
        status = "XFAIL"
    else:
        status = {"passed": "PASS", "failed": "FAIL", "skipped": "SKIP"}[report.outcome]
    _criteria.setdefault(number, []).append((status, text))


@pytest.hookimpl(tryfirst=True)
def pytest_runtest_setup(item):
    m = item.get_closest_marker("criterion")
    if m:
        item.user_properties.append(("criterion", tuple(m.args)))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        parts = _criteria[number]
        status = "PASS" if all(st == "PASS" for st, _ in parts) else "FAIL"
        text = parts[0][1]
        bad = [f"{t} [{st}]" for st, t in parts if st != "PASS"]
        line = f"criterion {number:2d}: {status} {text}"
        if bad and len(parts) > 1:
            line += "; failing part: " + "; ".join(bad)
        terminalreporter.write_line(line)
