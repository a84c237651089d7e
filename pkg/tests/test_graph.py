import itertools

import pytest
from hypothesis import given, strategies as st

from chordline.errors import ParseError
from chordline.graph import (
    Graph,
    LabeledGraph,
    RootedTree,
    apply_permutation,
    biconnected_blocks,
    complete_graph,
    connected_components,
    cycle_graph,
    disjoint_union,
    parse_graph,
    path_graph,
    relabel,
    serialize_graph,
    slex_compare,
    slex_key,
)


def test_parse_path():
    g = parse_graph("3 2\n1 2\n2 3\n")
    assert g == path_graph(3)


def test_parse_cycle_with_comments_and_bytes():
    g = parse_graph(b"# a square\n4 4\n1 2\n2 3\n\n3 4\n4 1\n")
    assert g == cycle_graph(4)


@pytest.mark.parametrize(
    "text, line",
    [
        ("3 1\n1 1\n", 2),
        ("3 2\n1 2\n2 1\n", 3),
        ("3 1\n1 4\n", 2),
        ("3 1\n1 2\n2 3\n", 3),
        ("3 1\nx y\n", 2),
        ("0 0\n", 1),
    ],
)
def test_parse_rejects_with_line_number(text, line):
    with pytest.raises(ParseError) as exc:
        parse_graph(text)
    assert exc.value.line == line


@pytest.mark.parametrize("text", ["", "# only a comment\n", "3 2\n1 2\n"])
def test_parse_rejects_without_line(text):
    with pytest.raises(ParseError):
        parse_graph(text)


def test_serialize_examples():
    assert serialize_graph(complete_graph(2)) == "2 1\n1 2\n"
    assert serialize_graph(cycle_graph(4)) == "4 4\n1 2\n1 4\n2 3\n3 4\n"
    assert serialize_graph(LabeledGraph(1)) == "1 0\n"


def test_serialize_needs_labeled_graph():
    with pytest.raises(TypeError):
        serialize_graph(Graph([1, 2], [(1, 2)]))


@given(st.integers(1, 8).flatmap(lambda n: st.tuples(st.just(n), st.sets(st.tuples(st.integers(1, n), st.integers(1, n))))))
def test_parse_serialize_round_trip(data):
    n, pairs = data
    g = LabeledGraph(n, [p for p in pairs if p[0] != p[1]])
    assert parse_graph(serialize_graph(g)) == g


def test_graph_rejects_loops_and_unknown_vertices():
    with pytest.raises(ValueError):
        Graph([1, 2], [(1, 1)])
    with pytest.raises(ValueError):
        Graph([1, 2], [(1, 3)])


def test_duplicate_edges_collapse():
    assert Graph([1, 2], [(1, 2), (2, 1)]).size == 1


def test_components():
    assert [len(c) for c in connected_components(cycle_graph(4))] == [4]
    g = disjoint_union(complete_graph(3), complete_graph(2))
    assert sorted(len(c) for c in connected_components(g)) == [2, 3]
    assert connected_components(LabeledGraph(1)) == [frozenset({1})]


def _brute_blocks(g):
    """Maximal vertex sets that induce a connected graph with no cut vertex (or a bridge)."""
    found = []
    vs = list(g.vertices)
    for k in range(len(vs), 1, -1):
        for sub in itertools.combinations(vs, k):
            h = g.subgraph(sub)
            if len(connected_components(h)) != 1:
                continue
            if k > 2 and any(len(connected_components(h.without([v]))) > 1 for v in sub):
                continue
            if not any(set(sub) <= b for b in found):
                found.append(frozenset(sub))
    return sorted(found, key=sorted)


@pytest.mark.parametrize(
    "g",
    [
        LabeledGraph(4, [(1, 2), (1, 3), (2, 3), (3, 4)]),
        path_graph(5),
        complete_graph(4),
        LabeledGraph(6, [(1, 2), (2, 3), (3, 1), (3, 4), (4, 5), (5, 6), (6, 4)]),
        LabeledGraph(6, [(1, 2), (2, 3), (3, 4), (4, 1), (1, 5), (5, 6)]),
    ],
)
def test_blocks_match_brute_force(g):
    assert sorted(biconnected_blocks(g), key=sorted) == _brute_blocks(g)


def test_block_examples():
    paw = LabeledGraph(4, [(1, 2), (1, 3), (2, 3), (3, 4)])
    assert sorted(len(b) for b in biconnected_blocks(paw)) == [2, 3]
    assert [len(b) for b in biconnected_blocks(path_graph(6))] == [2] * 5
    assert [len(b) for b in biconnected_blocks(complete_graph(4))] == [4]


def test_apply_permutation_examples():
    assert apply_permutation(complete_graph(2), [1, 2]) == complete_graph(2)
    p3 = path_graph(3)
    assert apply_permutation(p3, {1: 3, 2: 2, 3: 1}) == p3
    assert apply_permutation(p3, {1: 2, 2: 3, 3: 1}).edges == {(2, 3), (1, 3)}


def test_apply_permutation_rejects_non_bijection():
    with pytest.raises(ValueError):
        apply_permutation(path_graph(3), [1, 1, 2])


def test_slex_examples():
    assert slex_compare(LabeledGraph(1), complete_graph(2)) == -1
    g = cycle_graph(5)
    assert slex_compare(g, g) == 0
    assert slex_compare(LabeledGraph(2), complete_graph(2)) == -1


def _definition_less(g, h):
    """Direct reading: the graph missing the least pair of the symmetric difference is smaller."""
    if g.n != h.n:
        return g.n < h.n
    diff = g.edges ^ h.edges
    if not diff:
        return False
    return min(diff) not in g.edges


def test_slex_matches_definition_on_three_vertices():
    pairs = [(1, 2), (1, 3), (2, 3)]
    graphs = [LabeledGraph(n, es) for n in (1, 2, 3) for k in range(4) for es in itertools.combinations(pairs, k)
              if all(b <= n for _, b in es)]
    for g, h in itertools.product(graphs, repeat=2):
        assert (slex_key(g) < slex_key(h)) == _definition_less(g, h)


def test_relabel_sorted_default():
    g, f = relabel(Graph(["b", "a", "c"], [("a", "b"), ("b", "c")]))
    assert f == {"a": 1, "b": 2, "c": 3}
    assert g == path_graph(3)


def test_rooted_tree():
    t = RootedTree("r", {"a": "r", "b": "a", "c": "a"})
    assert t.nodes == ["r", "a", "b", "c"]
    assert t.children("a") == ["b", "c"]
    assert t.neighbours("a") == ["b", "c", "r"]
    assert t.descendants("a") == ["a", "b", "c"]
    with pytest.raises(ValueError):
        RootedTree(1, {2: 3, 3: 2})


@given(st.permutations(range(1, 6)), st.permutations(range(1, 6)))
def test_apply_permutation_composes(pi, rho):
    g = LabeledGraph(5, [(1, 2), (2, 3), (3, 4), (1, 5)])
    composed = [rho[pi[v - 1] - 1] for v in range(1, 6)]
    assert apply_permutation(apply_permutation(g, pi), rho) == apply_permutation(g, composed)
