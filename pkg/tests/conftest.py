import random

import networkx as nx
import pytest
from hypothesis import strategies as st

from zfapprox.arcs import ArcSet
from zfapprox.graph import Graph


def from_nx(G: nx.Graph) -> Graph:
    mapping = {v: i for i, v in enumerate(sorted(G.nodes()))}
    return Graph(len(mapping), sorted(tuple(sorted((mapping[u], mapping[v]))) for u, v in G.edges()))


def to_nx(g: Graph) -> nx.Graph:
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges())
    return G


def atlas(max_n: int, connected: bool = True) -> list[Graph]:
    """Every graph on 1..max_n vertices up to isomorphism (max_n <= 7)."""
    out = []
    for G in nx.graph_atlas_g()[1:]:
        if G.number_of_nodes() > max_n:
            break
        if connected and not nx.is_connected(G):
            continue
        out.append(from_nx(G))
    return out


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 8, connected: bool = False):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    picks = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    edges = {p for p, keep in zip(pairs, picks) if keep}
    if connected:
        # hang every vertex off an earlier one so the graph stays connected
        for v in range(1, n):
            u = draw(st.integers(0, v - 1))
            edges.add((u, v))
    return Graph(n, sorted(edges))


@pytest.fixture
def rng():
    return random.Random(20240611)


def random_p1(g: Graph, rng: random.Random, density: float = 1.0) -> ArcSet:
    """Random vertex-disjoint dipaths along edges of ``g``.

    Edges are tried in random order with random direction; each is kept with
    probability ``density`` when it extends the dipaths without a cycle.
    """
    nxt: dict[int, int] = {}
    prv: dict[int, int] = {}
    edges = list(g.edges())
    rng.shuffle(edges)
    for u, v in edges:
        if rng.random() >= density:
            continue
        if rng.random() < 0.5:
            u, v = v, u
        if u in nxt or v in prv:
            continue
        # walking back from u must not reach v, or the arc closes a cycle
        x = u
        while x in prv and x != v:
            x = prv[x]
        if x == v:
            continue
        nxt[u], prv[v] = v, u
    return ArcSet(g, nxt.items())


# one summary line per acceptance criterion, after the run
_criteria: dict[int, str] = {}


def pytest_runtest_logreport(report):
    name = report.nodeid.rsplit("::", 1)[-1]
    if "test_acceptance" not in report.nodeid or not name.startswith("test_criterion_"):
        return
    number = int(name.split("_")[2])
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _criteria[number] = "PASS" if report.outcome == "passed" else report.outcome.upper()


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        terminalreporter.write_line(f"criterion {number}: {_criteria[number]}")
