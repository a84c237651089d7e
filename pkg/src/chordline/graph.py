"""Immutable simple graphs, the edge-list file format, and elementary algorithms.

Vertex identifiers of a :class:`Graph` may be any hashable values that are
mutually comparable (ints for parsed graphs, edge tuples for line graphs).
A :class:`LabeledGraph` is a graph on exactly ``1..n``.
"""
from __future__ import annotations

from collections import deque
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from typing import Hashable

from .errors import ParseError

__all__ = [
    "Graph",
    "LabeledGraph",
    "RootedTree",
    "parse_graph",
    "serialize_graph",
    "connected_components",
    "is_connected",
    "biconnected_blocks",
    "apply_permutation",
    "slex_compare",
    "slex_key",
    "relabel",
    "complete_graph",
    "path_graph",
    "cycle_graph",
    "disjoint_union",
]


def _pair(u, v):
    return (u, v) if u < v else (v, u)


class Graph:
    """An undirected simple graph that cannot be modified after construction.

    Duplicate edges given to the constructor collapse into one; loops and
    edges with unknown endpoints raise ``ValueError``.
    """

    __slots__ = ("_adj", "_edges", "_vertices", "_hash")

    def __init__(self, vertices: Iterable[Hashable] = (), edges: Iterable[tuple] = ()):
        adj: dict = {v: set() for v in vertices}
        pairs = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u!r}")
            if u not in adj or v not in adj:
                raise ValueError(f"edge {(u, v)!r} has an endpoint outside the vertex set")
            adj[u].add(v)
            adj[v].add(u)
            pairs.add(_pair(u, v))
        self._adj = {v: frozenset(ns) for v, ns in adj.items()}
        self._edges = frozenset(pairs)
        self._vertices = tuple(sorted(adj))
        self._hash = None

    @property
    def vertices(self) -> tuple:
        """Vertices in ascending order."""
        return self._vertices

    @property
    def edges(self) -> frozenset:
        """Edges as ``(u, v)`` tuples with ``u < v``."""
        return self._edges

    @property
    def order(self) -> int:
        return len(self._vertices)

    @property
    def size(self) -> int:
        return len(self._edges)

    def __len__(self):
        return len(self._vertices)

    def __contains__(self, v):
        return v in self._adj

    def __iter__(self):
        return iter(self._vertices)

    def neighbors(self, v) -> frozenset:
        return self._adj[v]

    def degree(self, v) -> int:
        return len(self._adj[v])

    def has_edge(self, u, v) -> bool:
        return v in self._adj.get(u, ())

    def sorted_edges(self) -> list:
        return sorted(self._edges)

    def is_clique(self, vertices: Iterable) -> bool:
        vs = list(vertices)
        adj = self._adj
        return all(vs[j] in adj[vs[i]] for i in range(len(vs)) for j in range(i + 1, len(vs)))

    def is_complete(self) -> bool:
        n = len(self._vertices)
        return len(self._edges) == n * (n - 1) // 2

    def subgraph(self, vertices: Iterable) -> Graph:
        """Induced subgraph ``G[W]``."""
        keep = set(vertices)
        return Graph(
            (v for v in self._vertices if v in keep),
            ((u, v) for u, v in self._edges if u in keep and v in keep),
        )

    def without(self, vertices: Iterable) -> Graph:
        """``G \\ W``."""
        drop = set(vertices)
        return self.subgraph(v for v in self._vertices if v not in drop)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self._vertices == other._vertices and self._edges == other._edges

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._vertices, self._edges))
        return self._hash

    def __repr__(self):
        return f"{type(self).__name__}(order={self.order}, size={self.size})"


class LabeledGraph(Graph):
    """A graph whose vertex set is exactly ``{1, ..., n}``."""

    __slots__ = ("n",)

    def __init__(self, n: int, edges: Iterable[tuple] = ()):
        if not isinstance(n, int) or n < 1:
            raise ValueError(f"order must be a positive integer, got {n!r}")
        super().__init__(range(1, n + 1), edges)
        self.n = n

    def __repr__(self):
        return f"LabeledGraph(n={self.n}, edges={self.sorted_edges()})"


@dataclass(frozen=True)
class RootedTree:
    """A rooted tree given by its parent map; the root has no entry."""

    root: Hashable
    parent: Mapping = field(default_factory=dict)

    def __post_init__(self):
        nodes = set(self.parent) | {self.root}
        if self.root in self.parent:
            raise ValueError("the root cannot have a parent")
        for node, par in self.parent.items():
            if par not in nodes:
                raise ValueError(f"parent {par!r} of {node!r} is not a node")
        for node in self.parent:
            seen = set()
            while node != self.root:
                if node in seen:
                    raise ValueError("parent map contains a cycle")
                seen.add(node)
                node = self.parent[node]
        kids: dict = {}
        for c in sorted(self.parent):
            kids.setdefault(self.parent[c], []).append(c)
        object.__setattr__(self, "_kids", kids)

    @property
    def nodes(self) -> list:
        return [self.root] + sorted(self.parent)

    def children(self, node) -> list:
        return list(self._kids.get(node, ()))

    def neighbours(self, node) -> list:
        out = self.children(node)
        if node in self.parent:
            out.append(self.parent[node])
        return out

    def descendants(self, node) -> list:
        """Descendants of ``node`` including itself, in preorder."""
        out, stack = [], [node]
        while stack:
            t = stack.pop()
            out.append(t)
            stack.extend(reversed(self._kids.get(t, ())))
        return out


def parse_graph(text) -> LabeledGraph:
    """Parse the edge-list format into a :class:`LabeledGraph`.

    Lines starting with ``#`` are comments. The first remaining line is
    ``"n m"``, followed by exactly ``m`` lines ``"u v"`` with ``1 <= u, v <= n``.
    """
    if isinstance(text, (bytes, bytearray)):
        text = text.decode("utf-8")
    header = None
    edges: list = []
    seen: set = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"expected two integers, got {raw!r}", lineno)
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"expected two integers, got {raw!r}", lineno) from None
        if header is None:
            if a < 1 or b < 0:
                raise ParseError(f"malformed header {raw!r}", lineno)
            header = (a, b)
            continue
        n, m = header
        if len(edges) >= m:
            raise ParseError(f"more than {m} edge lines", lineno)
        if not (1 <= a <= n and 1 <= b <= n):
            raise ParseError(f"endpoint out of range 1..{n}: {raw!r}", lineno)
        if a == b:
            raise ParseError(f"loop at vertex {a}", lineno)
        key = _pair(a, b)
        if key in seen:
            raise ParseError(f"duplicate edge {key[0]} {key[1]}", lineno)
        seen.add(key)
        edges.append(key)
    if header is None:
        raise ParseError("missing header line")
    if len(edges) != header[1]:
        raise ParseError(f"header announces {header[1]} edges, found {len(edges)}")
    return LabeledGraph(header[0], edges)


def serialize_graph(g: LabeledGraph) -> str:
    """Canonical text: ``"n m"`` then edges ascending, one per line."""
    if not isinstance(g, LabeledGraph):
        raise TypeError("serialize_graph expects a LabeledGraph; use relabel() first")
    lines = [f"{g.n} {g.size}"]
    lines.extend(f"{a} {b}" for a, b in g.sorted_edges())
    return "\n".join(lines) + "\n"


def connected_components(g: Graph) -> list[frozenset]:
    """Vertex sets of the connected components, ordered by smallest vertex."""
    seen: set = set()
    out = []
    for s in g.vertices:
        if s in seen:
            continue
        comp = [s]
        seen.add(s)
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in g.neighbors(v):
                if w not in seen:
                    seen.add(w)
                    comp.append(w)
                    queue.append(w)
        out.append(frozenset(comp))
    return out


def is_connected(g: Graph) -> bool:
    return len(g) > 0 and len(connected_components(g)) == 1


def biconnected_blocks(g: Graph) -> list[frozenset]:
    """Blocks of ``g``: maximal 2-connected vertex sets, bridges, isolated vertices."""
    index: dict = {}
    low: dict = {}
    blocks: list = []
    counter = 0
    for root in g.vertices:
        if root in index:
            continue
        if not g.neighbors(root):
            index[root] = counter
            counter += 1
            blocks.append(frozenset([root]))
            continue
        index[root] = low[root] = counter
        counter += 1
        edge_stack: list = []
        stack = [(root, None, iter(sorted(g.neighbors(root))))]
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if w == parent:
                    continue
                if w not in index:
                    index[w] = low[w] = counter
                    counter += 1
                    edge_stack.append((v, w))
                    stack.append((w, v, iter(sorted(g.neighbors(w)))))
                    advanced = True
                    break
                if index[w] < index[v]:
                    edge_stack.append((v, w))
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            stack.pop()
            if parent is None:
                continue
            low[parent] = min(low[parent], low[v])
            if low[v] >= index[parent]:
                block = set()
                while True:
                    a, b = edge_stack.pop()
                    block.update((a, b))
                    if (a, b) == (parent, v):
                        break
                blocks.append(frozenset(block))
    return blocks


def apply_permutation(g: LabeledGraph, perm) -> LabeledGraph:
    """Image of ``g`` under ``perm``.

    ``perm`` is a mapping ``i -> perm[i]`` on ``1..n`` or a sequence whose
    ``i-1``-th entry is the image of ``i``.
    """
    n = g.n
    if isinstance(perm, Mapping):
        image = {i: perm.get(i) for i in range(1, n + 1)}
    elif isinstance(perm, Sequence):
        if len(perm) != n:
            raise ValueError(f"permutation has length {len(perm)}, expected {n}")
        image = {i: perm[i - 1] for i in range(1, n + 1)}
    else:
        raise TypeError("perm must be a mapping or a sequence")
    if sorted(image.values(), key=lambda x: (x is None, x)) != list(range(1, n + 1)):
        raise ValueError("perm is not a bijection on 1..n")
    return LabeledGraph(n, ((image[a], image[b]) for a, b in g.edges))


def slex_key(g: LabeledGraph) -> tuple:
    """Sort key realising the s-lex order on labeled graphs.

    Smaller order comes first. Among equal orders, the edge set lacking the
    first pair of the symmetric difference is smaller, which is the same as
    comparing ascending edge lists on negated pairs.
    """
    return (g.n, tuple((-a, -b) for a, b in g.sorted_edges()))


def slex_compare(g: LabeledGraph, h: LabeledGraph) -> int:
    """Return -1, 0 or 1 as ``g`` is s-lex smaller than, equal to, or larger than ``h``."""
    kg, kh = slex_key(g), slex_key(h)
    return (kg > kh) - (kg < kh)


def relabel(g: Graph, order: Sequence | None = None) -> tuple[LabeledGraph, dict]:
    """Renumber ``g`` onto ``1..n`` following ``order`` (default: sorted vertices).

    Returns the labeled graph and the map from old vertices to new labels.
    """
    order = list(g.vertices if order is None else order)
    if sorted(order) != list(g.vertices):
        raise ValueError("order must list every vertex exactly once")
    f = {v: i for i, v in enumerate(order, start=1)}
    return LabeledGraph(len(order), ((f[u], f[v]) for u, v in g.edges)), f


def complete_graph(n: int) -> LabeledGraph:
    return LabeledGraph(n, ((i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)))


def path_graph(n: int) -> LabeledGraph:
    return LabeledGraph(n, ((i, i + 1) for i in range(1, n)))


def cycle_graph(n: int) -> LabeledGraph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return LabeledGraph(n, [(i, i + 1) for i in range(1, n)] + [(1, n)])


def disjoint_union(*graphs: LabeledGraph) -> LabeledGraph:
    """Place labeled graphs on consecutive intervals, in the given order."""
    edges = []
    offset = 0
    for h in graphs:
        edges.extend((a + offset, b + offset) for a, b in h.edges)
        offset += h.n
    return LabeledGraph(offset, edges)
