import random

import pytest

from chordline.graph import Graph, LabeledGraph, apply_permutation, complete_graph, cycle_graph, path_graph, relabel
from chordline.linegraph import line_graph

# K4 on 1..4 with one degree-2 vertex on each rim pair
HAT_C4_EDGES = [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4), (5, 1), (5, 2), (6, 2), (6, 3), (7, 3), (7, 4), (8, 4), (8, 1)]

CACTUS17_EDGES = [
    (1, 2), (1, 3), (2, 3), (2, 4), (2, 5), (3, 6), (3, 7), (4, 5), (4, 8), (5, 9), (6, 10),
    (6, 11), (6, 12), (6, 13), (7, 15), (7, 14), (14, 15), (15, 16), (15, 17),
]

CACTUS17_LINE_EDGES = """
a-b a-c a-d a-e b-c b-f b-g c-d c-e c-f c-g d-e d-h d-i e-h e-j f-g f-k f-l f-m f-n
g-p g-o h-i h-j k-l k-m k-n l-m l-n m-n o-p o-q o-r o-s p-q q-r q-s r-s
""".split()


@pytest.fixture
def hat_c4():
    return LabeledGraph(8, HAT_C4_EDGES)


@pytest.fixture
def line_k4():
    return relabel(line_graph(complete_graph(4)))[0]


@pytest.fixture
def cactus17():
    return LabeledGraph(17, CACTUS17_EDGES)


@pytest.fixture
def cactus17_line():
    pairs = [tuple(e.split("-")) for e in CACTUS17_LINE_EDGES]
    g = Graph(sorted({v for p in pairs for v in p}), pairs)
    return relabel(g)[0]


@pytest.fixture
def diamond():
    return LabeledGraph(4, [(1, 2), (1, 3), (2, 3), (2, 4), (3, 4)])


@pytest.fixture
def claw():
    return LabeledGraph(4, [(1, 2), (1, 3), (1, 4)])


@pytest.fixture
def c4():
    return cycle_graph(4)


@pytest.fixture
def p3():
    return path_graph(3)


def shuffled(g: LabeledGraph, rng: random.Random) -> LabeledGraph:
    perm = list(range(1, g.n + 1))
    rng.shuffle(perm)
    return apply_permutation(g, perm)


def pytest_terminal_summary(terminalreporter):
    import sys

    module = sys.modules.get("test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in module.RESULTS:
        terminalreporter.write_line(line)
