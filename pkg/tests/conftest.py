import functools

import networkx as nx
import numpy as np
import pytest

from npcaudit.complex import from_facets
from npcaudit.generators import random_flag_complex
from npcaudit.polygons import is_k_large, is_snpc

OCTAHEDRON_FACETS = [[0, 2, 4], [0, 2, 5], [0, 3, 4], [0, 3, 5], [1, 2, 4], [1, 2, 5], [1, 3, 4], [1, 3, 5]]


@pytest.fixture
def tetrahedron():
    return from_facets([[0, 1, 2, 3]])


@pytest.fixture
def octahedron():
    return from_facets(OCTAHEDRON_FACETS)


def random_chordal_complex(vertices, seed):
    """Clique complex of a random chordal graph built along a perfect elimination order."""
    rng = np.random.default_rng(seed)
    g = nx.Graph()
    g.add_node(0)
    for v in range(1, vertices):
        anchor = int(rng.integers(v))
        # attach v to a random clique around an existing vertex
        nbrs = [anchor] + [u for u in g[anchor] if rng.random() < 0.5]
        clique = [u for u in nbrs if all(g.has_edge(u, x) for x in nbrs if x != u)]
        g.add_edges_from((v, u) for u in clique)
    return from_facets(nx.find_cliques(g))


@functools.lru_cache(maxsize=None)
def corpus():
    """Seeded random flag complexes on at most 9 vertices, deterministic.

    Mixes G(n, p) clique complexes over several densities with chordal
    clique complexes, which are always 6-large.
    """
    out = []
    seed = 0
    for n in (5, 6, 7, 8, 9):
        for p in (0.25, 0.35, 0.45, 0.55):
            for _ in range(18):
                out.append(random_flag_complex(n, p, seed))
                seed += 1
    for n in (5, 6, 7, 8, 9):
        for s in range(20):
            out.append(random_chordal_complex(n, 1000 + 20 * n + s))
    return tuple(out)


@functools.lru_cache(maxsize=None)
def large_corpus():
    return tuple(K for K in corpus() if is_k_large(K, 6))


@functools.lru_cache(maxsize=None)
def snpc_corpus():
    return tuple(K for K in corpus() if is_snpc(K))


_ACCEPTANCE = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py" in report.nodeid and report.when == "call":
        _ACCEPTANCE[report.nodeid.split("::")[-1]] = report.outcome
    elif "test_acceptance.py" in report.nodeid and report.failed:
        _ACCEPTANCE[report.nodeid.split("::")[-1]] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_ACCEPTANCE):
        status = "PASS" if _ACCEPTANCE[name] == "passed" else "FAIL"
        terminalreporter.write_line(f"{status}  {name}")
