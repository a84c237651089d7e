import random

import pytest

from chordline.chordal import is_chordal
from chordline.errors import NotHatImageError
from chordline.generators import enumerate_graphs, gen_random
from chordline.graph import Graph, LabeledGraph, complete_graph, cycle_graph, relabel
from chordline.isocheck import are_isomorphic
from chordline.reductions import hat, hat_split, is_hat, transport_decider, unhat


def _iso(a, b):
    return are_isomorphic(relabel(a)[0], relabel(b)[0]) is not None


def test_hat_of_k2_and_i3_is_triangle():
    k3 = complete_graph(3)
    assert _iso(hat(complete_graph(2)).graph, k3)
    assert _iso(hat(LabeledGraph(3)).graph, k3)


def test_hat_of_c4_matches_fixture(c4, hat_c4):
    img = hat(c4)
    assert (img.graph.order, img.graph.size) == (8, 14)
    assert _iso(img.graph, hat_c4)
    assert img.pendant == {5: (1, 2), 6: (1, 4), 7: (2, 3), 8: (3, 4)}


def test_hat_needs_integer_vertices():
    with pytest.raises(TypeError):
        hat(Graph("ab", [("a", "b")]))


def test_unhat_examples(c4, hat_c4):
    assert unhat(complete_graph(3)).size == 0
    assert unhat(complete_graph(3)).order == 3
    assert _iso(unhat(hat(c4).graph), c4)
    with pytest.raises(NotHatImageError):
        unhat(c4)


def test_is_hat_examples(c4, hat_c4):
    assert is_hat(complete_graph(3))
    assert is_hat(hat_c4)
    assert not is_hat(c4)


def test_hat_split_recovers_core(c4):
    split = hat_split(hat(c4).graph)
    assert split.core == {1, 2, 3, 4}


def test_hat_is_chordal_and_invertible():
    rng = random.Random(2)
    for seed in range(100):
        g = gen_random(rng.randint(1, 15), rng.random(), seed)
        h = hat(g).graph
        assert is_chordal(h)
        if g.n >= 4:
            assert _iso(unhat(h), g)


def test_unhat_inverts_on_all_small_graphs():
    # every graph on 4 vertices, connected or not
    for g in enumerate_graphs(4, connected=False):
        assert _iso(unhat(hat(g).graph), g)


def test_transport_decider(c4, claw):
    big = transport_decider(lambda h: h.order >= 7, "via_hat")
    assert big(c4)
    triangle = transport_decider(lambda h: _iso(h, complete_graph(3)), "via_linegraph")
    assert triangle(claw)
    always = transport_decider(lambda h: bool(is_chordal(h)), "via_hat")
    assert all(always(cycle_graph(n)) for n in range(3, 9))
    with pytest.raises(ValueError):
        transport_decider(bool, "sideways")


def test_hat_size_law_and_degree_split():
    for seed in range(30):
        g = gen_random(4 + seed % 8, 0.4, seed)
        h = hat(g).graph
        assert h.order == g.order + g.size
        assert h.size == g.order * (g.order - 1) // 2 + 2 * g.size
        assert {v for v in h.vertices if h.degree(v) >= 3} == set(g.vertices)


def test_hat_injective_from_order_four():
    graphs = enumerate_graphs(4, connected=False) + enumerate_graphs(5, connected=False)
    images = [relabel(hat(g).graph)[0] for g in graphs]
    for i in range(len(images)):
        for j in range(i + 1, len(images)):
            if images[i].n == images[j].n:
                assert are_isomorphic(images[i], images[j]) is None
