"""Seeded generators and exhaustive enumerators.

All randomness comes from :class:`SplitMix64`, whose state transition is::

    state = (state + 0x9E3779B97F4A7C15) mod 2**64
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) mod 2**64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) mod 2**64
    output z ^ (z >> 31)

``below(k)`` draws a uniform integer in ``[0, k)`` by rejecting outputs at or
above the largest multiple of ``k`` below ``2**64``; ``random()`` is
``(output >> 11) * 2**-53``. Any implementation of these three rules
reproduces every corpus bit for bit.
"""
from __future__ import annotations

from collections import Counter
from typing import Iterator

from .errors import TooLargeError
from .graph import Graph, LabeledGraph, is_connected, relabel
from .isocheck import are_isomorphic, color_refinement
from .linegraph import line_graph

__all__ = [
    "SplitMix64",
    "gen_triangle_cactus",
    "gen_chordal_line",
    "gen_chordal",
    "gen_random",
    "gen_root_with_large_block",
    "enumerate_graphs",
    "enumerate_small_roots",
]

_MASK = (1 << 64) - 1
MAX_ROOT_EDGES = 9


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def below(self, k: int) -> int:
        if k <= 0:
            raise ValueError("below() needs a positive bound")
        limit = (1 << 64) - (1 << 64) % k
        while True:
            x = self.next()
            if x < limit:
                return x % k

    def random(self) -> float:
        return (self.next() >> 11) * 2.0**-53

    def shuffle(self, items: list) -> None:
        """Fisher-Yates, drawing indices with :meth:`below`."""
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]


def gen_triangle_cactus(blocks: int, triangle_fraction: float, seed: int) -> LabeledGraph:
    """A connected graph whose blocks are edges and triangles.

    Each block hangs off a uniformly chosen existing vertex; it is a triangle
    when ``random() < triangle_fraction``.
    """
    if blocks < 1:
        raise ValueError("blocks must be >= 1")
    if not 0 <= triangle_fraction <= 1:
        raise ValueError("triangle_fraction must lie in [0, 1]")
    rng = SplitMix64(seed)
    n = 1
    edges = []
    for _ in range(blocks):
        at = rng.below(n) + 1
        if rng.random() < triangle_fraction:
            a, b = n + 1, n + 2
            edges += [(at, a), (at, b), (a, b)]
            n += 2
        else:
            edges.append((at, n + 1))
            n += 1
    return LabeledGraph(n, edges)


def gen_chordal_line(blocks: int, triangle_fraction: float, seed: int) -> LabeledGraph:
    """Line graph of :func:`gen_triangle_cactus`, relabeled onto ``1..n`` in edge order."""
    return relabel(line_graph(gen_triangle_cactus(blocks, triangle_fraction, seed)))[0]


def gen_chordal(n: int, extra_fill: float, seed: int) -> LabeledGraph:
    """A random chordal graph grown by reverse perfect elimination.

    Vertex ``i`` picks a maximal clique of the graph so far and joins each of
    its members with probability ``extra_fill``, always keeping at least one.
    ``extra_fill = 1`` therefore yields ``K_n``.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    rng = SplitMix64(seed)
    cliques = [frozenset([1])]
    edges = []
    for v in range(2, n + 1):
        base = sorted(cliques[rng.below(len(cliques))])
        picked = [u for u in base if rng.random() < extra_fill]
        if not picked:
            picked = [base[rng.below(len(base))]]
        edges.extend((u, v) for u in picked)
        new = frozenset(picked) | {v}
        cliques = [c for c in cliques if not c <= new]
        cliques.append(new)
    return LabeledGraph(n, edges)


def gen_random(n: int, p: float, seed: int) -> LabeledGraph:
    """Erdős–Rényi ``G(n, p)``; pairs are visited in lexicographic order."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if not 0 <= p <= 1:
        raise ValueError("p must lie in [0, 1]")
    rng = SplitMix64(seed)
    edges = [(a, b) for a in range(1, n + 1) for b in range(a + 1, n + 1) if rng.random() < p]
    return LabeledGraph(n, edges)


def gen_root_with_large_block(blocks: int, block_size: int, seed: int) -> LabeledGraph:
    """A triangle cactus with one extra block: a cycle on ``block_size >= 4`` vertices
    plus a random set of chords, glued at a uniformly chosen vertex."""
    if block_size < 4:
        raise ValueError("block_size must be >= 4")
    rng = SplitMix64(seed)
    base = gen_triangle_cactus(blocks, 0.5, rng.next())
    at = rng.below(base.n) + 1
    ring = [at] + list(range(base.n + 1, base.n + block_size))
    edges = list(base.edges)
    edges += [(ring[i], ring[(i + 1) % block_size]) for i in range(block_size)]
    for i in range(block_size):
        for j in range(i + 2, block_size):
            if (i, j) != (0, block_size - 1) and rng.random() < 0.3:
                edges.append((ring[i], ring[j]))
    return LabeledGraph(base.n + block_size - 1, edges)


def _invariant(g: Graph) -> tuple:
    degrees = tuple(sorted(g.degree(v) for v in g.vertices))
    colours = color_refinement(g).colors
    return (g.order, g.size, degrees, tuple(sorted(Counter(colours.values()).values())))


class _IsoBucket:
    """Set of graphs up to isomorphism, bucketed by cheap invariants."""

    def __init__(self):
        self.buckets: dict = {}
        self.items: list = []

    def add(self, g: Graph) -> bool:
        bucket = self.buckets.setdefault(_invariant(g), [])
        if any(are_isomorphic(g, h) is not None for h in bucket):
            return False
        bucket.append(g)
        self.items.append(g)
        return True


def enumerate_graphs(n: int, connected: bool = True) -> list[LabeledGraph]:
    """All graphs on exactly ``n`` vertices up to isomorphism, by vertex augmentation."""
    if n < 1:
        raise ValueError("n must be >= 1")
    layer = [LabeledGraph(1, [])]
    for k in range(2, n + 1):
        seen = _IsoBucket()
        for g in layer:
            for mask in range(1 << (k - 1)):
                nb = [i + 1 for i in range(k - 1) if mask >> i & 1]
                seen.add(LabeledGraph(k, list(g.edges) + [(u, k) for u in nb]))
        layer = seen.items
    if connected:
        layer = [g for g in layer if is_connected(g)]
    return layer


def enumerate_small_roots(max_edges: int) -> Iterator[LabeledGraph]:
    """Connected graphs with all blocks of size <= 3 and at most ``max_edges`` edges.

    Graphs are grown from ``K2`` by hanging a pendant edge or a triangle off
    a vertex, deduplicated up to isomorphism; yielded by edge count.
    """
    if max_edges > MAX_ROOT_EDGES:
        raise TooLargeError(f"max_edges is limited to {MAX_ROOT_EDGES}")
    if max_edges < 1:
        return
    by_size: dict = {1: [LabeledGraph(2, [(1, 2)])]}
    for m in range(2, max_edges + 1):
        seen = _IsoBucket()
        for g in by_size.get(m - 1, []):
            for v in range(1, g.n + 1):
                seen.add(LabeledGraph(g.n + 1, list(g.edges) + [(v, g.n + 1)]))
        for g in by_size.get(m - 3, []) if m > 3 else ([LabeledGraph(1, [])] if m == 3 else []):
            for v in range(1, g.n + 1):
                a, b = g.n + 1, g.n + 2
                seen.add(LabeledGraph(g.n + 2, list(g.edges) + [(v, a), (v, b), (a, b)]))
        by_size[m] = seen.items
    for m in range(1, max_edges + 1):
        yield from by_size[m]
