from __future__ import annotations

import re
import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from evdeg.generators import complete, cycle, path, star  # noqa: E402
from evdeg.graph import Graph  # noqa: E402


@pytest.fixture
def K1():
    return complete(1)


@pytest.fixture
def K2():
    return complete(2)


@pytest.fixture
def K3():
    return complete(3)


@pytest.fixture
def K4():
    return complete(4)


@pytest.fixture
def P3():
    return path(3)


@pytest.fixture
def C4():
    return cycle(4)


SMALL_ZOO = [path(n) for n in range(1, 6)] + [cycle(n) for n in range(3, 7)] + \
    [complete(n) for n in range(1, 6)] + [star(k) for k in range(1, 5)] + \
    [Graph(5, [(0, 1), (2, 3)]), Graph(4, [])]


@st.composite
def graphs(draw, max_n: int = 9, min_n: int = 0):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, [e for e, keep in zip(pairs, mask) if keep])


@st.composite
def triangle_free_graphs(draw, max_n: int = 8):
    G = draw(graphs(max_n=max_n))
    # drop the later edge of each triangle until none remain
    edges = list(G.edges)
    while True:
        H = Graph(G.n, edges)
        bad = next(((u, v) for u, v in H.edges if H.rows[u] & H.rows[v]), None)
        if bad is None:
            return H
        edges.remove(bad)


# -- acceptance summary: one line per criterion -----------------------------

_ACCEPT: dict[str, list[tuple[str, str]]] = {}


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    if "test_acceptance.py" not in report.nodeid:
        return
    m = re.search(r"::test_c(\d+)_", report.nodeid)
    if m:
        _ACCEPT.setdefault(m.group(1), []).append((report.nodeid, report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPT:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for crit in sorted(_ACCEPT, key=int):
        runs = _ACCEPT[crit]
        failed = [nid.split("::", 1)[1] for nid, out in runs if out != "passed"]
        verdict = "PASS" if not failed else "FAIL"
        line = f"criterion {crit}: {verdict} ({len(runs) - len(failed)}/{len(runs)} checks)"
        if failed:
            line += " failing: " + ", ".join(failed)
        tr.write_line(line)
