import itertools
import random

import networkx as nx
import pytest

from chordline.chordal import (
    GoodTreeDecomposition,
    find_chordless_cycle,
    format_decomposition,
    good_tree_decomposition,
    is_chordal,
    maximal_cliques_chordal,
    mcs_order,
    perfect_elimination_order,
    validate_tree_decomposition,
    verify_peo,
)
from chordline.errors import CompleteGraphError, DisconnectedError, NotChordalError
from chordline.generators import gen_chordal, gen_chordal_line, gen_random
from chordline.graph import Graph, LabeledGraph, RootedTree, complete_graph, cycle_graph, disjoint_union, path_graph


def _nx(g):
    h = nx.Graph()
    h.add_nodes_from(g.vertices)
    h.add_edges_from(g.edges)
    return h


def _is_chordless_cycle(g, cyc):
    k = len(cyc)
    if k < 4 or len(set(cyc)) != k:
        return False
    for i, j in itertools.combinations(range(k), 2):
        adjacent = (j - i) in (1, k - 1)
        if g.has_edge(cyc[i], cyc[j]) != adjacent:
            return False
    return True


def test_mcs_examples():
    assert mcs_order(LabeledGraph(1)).order == (1,)
    assert mcs_order(complete_graph(3)).order == (1, 2, 3)
    c4 = cycle_graph(4)
    assert verify_peo(c4, perfect_elimination_order(c4)) is not None


def test_c4_not_chordal_with_itself_as_witness(c4):
    report = is_chordal(c4)
    assert not report
    assert sorted(report.cycle) == [1, 2, 3, 4]
    assert _is_chordless_cycle(c4, report.cycle)


def test_small_fixtures(hat_c4, line_k4):
    assert is_chordal(hat_c4)
    report = is_chordal(line_k4)
    assert not report and _is_chordless_cycle(line_k4, report.cycle)


def test_trees_are_chordal():
    assert is_chordal(path_graph(7))
    assert is_chordal(LabeledGraph(5, [(1, 2), (1, 3), (1, 4), (4, 5)]))


def test_chordal_agrees_with_networkx():
    rng = random.Random(11)
    for seed in range(300):
        g = gen_random(rng.randint(1, 10), rng.random(), seed)
        report = is_chordal(g)
        assert bool(report) == nx.is_chordal(_nx(g))
        if report:
            assert verify_peo(g, perfect_elimination_order(g)) is None
        else:
            assert _is_chordless_cycle(g, report.cycle)
            assert _is_chordless_cycle(g, find_chordless_cycle(g))


def test_chordless_cycle_of_long_cycle_with_pendants():
    g = LabeledGraph(8, [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 1), (1, 7), (4, 8)])
    assert sorted(is_chordal(g).cycle) == [1, 2, 3, 4, 5, 6]


def test_maximal_cliques_examples(hat_c4):
    assert maximal_cliques_chordal(complete_graph(5)) == [frozenset(range(1, 6))]
    assert maximal_cliques_chordal(path_graph(3)) == [{1, 2}, {2, 3}]
    assert sorted(map(sorted, maximal_cliques_chordal(hat_c4))) == [
        [1, 2, 3, 4], [1, 2, 5], [1, 4, 8], [2, 3, 6], [3, 4, 7],
    ]


def test_maximal_cliques_agree_with_networkx():
    rng = random.Random(5)
    for seed in range(200):
        g = gen_chordal(rng.randint(1, 25), rng.random(), seed)
        ours = sorted(sorted(c) for c in maximal_cliques_chordal(g))
        theirs = sorted(sorted(c) for c in nx.find_cliques(_nx(g)))
        assert ours == theirs


def test_decomposition_of_path():
    d = good_tree_decomposition(path_graph(3))
    assert sorted(map(sorted, d.bags.values())) == [[1, 2], [2, 3]]
    (child,) = d.tree.children(d.tree.root)
    assert d.sigma[child] == {2}
    assert validate_tree_decomposition(path_graph(3), d)


def test_decomposition_of_hat_c4_is_star(hat_c4):
    d = good_tree_decomposition(hat_c4)
    assert len(d.bags) == 5
    centre = next(t for t in d.tree.nodes if d.bags[t] == {1, 2, 3, 4})
    assert sorted(d.tree.neighbours(centre)) == sorted(t for t in d.tree.nodes if t != centre)
    assert validate_tree_decomposition(hat_c4, d)


def test_decomposition_preconditions(c4):
    with pytest.raises(CompleteGraphError):
        good_tree_decomposition(complete_graph(4))
    with pytest.raises(NotChordalError):
        good_tree_decomposition(c4)
    with pytest.raises(DisconnectedError):
        good_tree_decomposition(disjoint_union(path_graph(2), path_graph(2)))


def test_single_bag_on_c4_fails_clique_condition(c4):
    d = GoodTreeDecomposition.from_tree(RootedTree(0, {}), {0: frozenset(c4.vertices)}, root_separator=(1, 2))
    report = validate_tree_decomposition(c4, d, line_graph=False)
    assert not report and report.condition == "i"


def test_cactus_line_decomposition_passes_line_conditions(cactus17_line):
    d = good_tree_decomposition(cactus17_line)
    assert validate_tree_decomposition(cactus17_line, d, line_graph=True)


def test_generated_decompositions_validate():
    rng = random.Random(3)
    for seed in range(60):
        g = gen_chordal_line(rng.randint(2, 30), rng.random(), seed)
        if g.is_complete():
            continue
        assert validate_tree_decomposition(g, good_tree_decomposition(g), line_graph=True)
    for seed in range(60):
        g = gen_chordal(rng.randint(3, 30), rng.random() * 0.7, seed)
        if g.is_complete():
            continue
        assert validate_tree_decomposition(g, good_tree_decomposition(g), line_graph=False)


def test_format_decomposition_lists_every_node():
    d = good_tree_decomposition(path_graph(4))
    lines = format_decomposition(d).splitlines()
    assert len(lines) == 3
    assert lines[0].split()[1] == "-"


def test_vertices_need_not_be_integers():
    g = Graph("abcd", [("a", "b"), ("b", "c"), ("c", "d"), ("d", "a"), ("a", "c")])
    assert is_chordal(g)
    assert len(maximal_cliques_chordal(g)) == 2


def test_clique_intersection_properties_on_line_graphs():
    rng = random.Random(13)
    triples = 0
    for seed in range(150):
        g = gen_chordal_line(rng.randint(2, 12), rng.random(), seed)
        if g.n > 30:
            continue
        cliques = maximal_cliques_chordal(g)
        assert all(len(a & b) <= 2 for a, b in itertools.combinations(cliques, 2))
        for a, b, c in itertools.combinations(cliques, 3):
            if a & b & c:
                triples += 1
                assert any(x <= y | z and len(x) == 3 for x, y, z in ((a, b, c), (b, a, c), (c, a, b)))
    assert triples > 0


def test_clique_count_bounded_by_order():
    for seed in range(50):
        g = gen_chordal(20, 0.3, seed)
        assert len(maximal_cliques_chordal(g)) <= g.n
