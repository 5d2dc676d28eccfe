"""Shared oracles and strategies.

The brute-force helpers here deliberately avoid the package's own search code
so they can serve as independent references.
"""

from itertools import permutations, product

import pytest
from hypothesis import strategies as st

from grundyb.graph import build_graph

ACCEPTANCE = {}


def greedy_colors(adj, order):
    col = {}
    for v in order:
        used = {col[u] for u in adj[v] if u in col}
        c = 1
        while c in used:
            c += 1
        col[v] = c
    return col


def brute_grundy(G):
    """Maximum First-Fit color count over every vertex order."""
    if G.n == 0:
        return 0
    return max(max(greedy_colors(G.adj, order).values()) for order in permutations(range(G.n)))


def brute_is_b_coloring(G, colors, k):
    if set(colors) != set(range(1, k + 1)):
        return False
    if any(colors[u] == colors[v] for u, v in G.edges()):
        return False
    for c in range(1, k + 1):
        if not any(colors[v] == c and {colors[u] for u in G.adj[v]} >= set(range(1, k + 1)) - {c}
                   for v in range(G.n)):
            return False
    return True


def brute_b(G):
    """Largest k admitting a b-coloring, by trying every color assignment."""
    best = 0
    for k in range(1, G.n + 1):
        if any(brute_is_b_coloring(G, colors, k) for colors in product(range(1, k + 1), repeat=G.n)):
            best = k
    return best


@st.composite
def small_graphs(draw, max_n=7, min_n=0):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return build_graph(n, chosen)


@pytest.fixture
def record_criterion(request):
    """Register the current test as acceptance criterion ``number``."""
    def record(number, title):
        ACCEPTANCE[request.node.nodeid] = (number, title)
    return record


_outcomes = {}


def pytest_runtest_logreport(report):
    if report.nodeid in ACCEPTANCE or "test_acceptance" in report.nodeid:
        if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
            _outcomes[report.nodeid] = report.outcome


def pytest_terminal_summary(terminalreporter):
    rows = []
    for nodeid, outcome in _outcomes.items():
        if nodeid in ACCEPTANCE:
            number, title = ACCEPTANCE[nodeid]
            rows.append((number, title, outcome))
    if not rows:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, outcome in sorted(rows):
        mark = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{mark} criterion {number:>2}: {title}")
