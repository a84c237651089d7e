"""Chordality recognition, maximal cliques and good tree decompositions."""
from __future__ import annotations

import heapq
from collections import deque
from collections.abc import Mapping
from dataclasses import dataclass, field

from .errors import CompleteGraphError, DisconnectedError, EmptyGraphError, NotChordalError
from .graph import Graph, RootedTree, connected_components

__all__ = [
    "EliminationOrder",
    "ChordalityReport",
    "GoodTreeDecomposition",
    "ValidationReport",
    "mcs_order",
    "perfect_elimination_order",
    "verify_peo",
    "is_chordal",
    "find_chordless_cycle",
    "maximal_cliques_chordal",
    "good_tree_decomposition",
    "validate_tree_decomposition",
    "format_decomposition",
]


@dataclass(frozen=True)
class EliminationOrder:
    """A vertex sequence; perfect when every vertex's later neighbours form a clique."""

    order: tuple

    def positions(self) -> dict:
        return {v: i for i, v in enumerate(self.order)}

    def __iter__(self):
        return iter(self.order)

    def __len__(self):
        return len(self.order)


@dataclass(frozen=True)
class ChordalityReport:
    """Verdict of :func:`is_chordal` with its witness.

    Truthy iff chordal. ``order`` is a perfect elimination ordering when
    chordal; ``cycle`` lists a chordless cycle of length >= 4 otherwise.
    """

    chordal: bool
    order: EliminationOrder | None = None
    cycle: tuple | None = None

    def __bool__(self):
        return self.chordal


def mcs_order(g: Graph) -> EliminationOrder:
    """Maximum cardinality search visit order (ties go to the smallest vertex).

    The reverse of this sequence is a perfect elimination ordering exactly
    when ``g`` is chordal.
    """
    if len(g) == 0:
        raise EmptyGraphError("maximum cardinality search needs a nonempty graph")
    weight = {v: 0 for v in g.vertices}
    heap = [(0, v) for v in g.vertices]
    heapq.heapify(heap)
    visited: set = set()
    order = []
    while heap:
        w, v = heapq.heappop(heap)
        if v in visited or -w != weight[v]:
            continue
        visited.add(v)
        order.append(v)
        for x in g.neighbors(v):
            if x not in visited:
                weight[x] += 1
                heapq.heappush(heap, (-weight[x], x))
    return EliminationOrder(tuple(order))


def perfect_elimination_order(g: Graph) -> EliminationOrder:
    """Reverse MCS order; perfect iff ``g`` is chordal."""
    return EliminationOrder(tuple(reversed(mcs_order(g).order)))


def verify_peo(g: Graph, order) -> tuple | None:
    """Check an elimination order.

    Returns ``None`` when ``order`` is perfect, otherwise a triple
    ``(v, x, y)`` where ``x`` and ``y`` are non-adjacent later neighbours of ``v``.
    """
    seq = order.order if isinstance(order, EliminationOrder) else tuple(order)
    pos = {v: i for i, v in enumerate(seq)}
    if len(pos) != len(g) or set(pos) != set(g.vertices):
        raise ValueError("order must list every vertex exactly once")
    for v in seq:
        later = [w for w in g.neighbors(v) if pos[w] > pos[v]]
        if len(later) < 2:
            continue
        parent = min(later, key=pos.__getitem__)
        pn = g.neighbors(parent)
        for w in later:
            if w != parent and w not in pn:
                return (v, parent, w)
    return None


def _cycle_through(g: Graph, v) -> tuple | None:
    """Chordless cycle ``v, x, ..., y`` through ``v`` if one exists."""
    closed = set(g.neighbors(v)) | {v}
    outside = [w for w in g.vertices if w not in closed]
    if not outside:
        return None
    comp_of: dict = {}
    for c in connected_components(g.subgraph(outside)):
        for w in c:
            comp_of[w] = c
    nv = sorted(g.neighbors(v))
    # neighbours of v grouped by the components of G - N[v] they touch
    touching: dict = {}
    for x in nv:
        for w in g.neighbors(x):
            if w in comp_of:
                touching.setdefault(comp_of[w], set()).add(x)
    for comp, xs in sorted(touching.items(), key=lambda kv: min(kv[0])):
        xs = sorted(xs)
        for i, x in enumerate(xs):
            for y in xs[i + 1:]:
                if g.has_edge(x, y):
                    continue
                path = _shortest_path(g, x, y, comp)
                if path is not None:
                    return (v,) + path
    return None


def _shortest_path(g: Graph, s, t, interior) -> tuple | None:
    prev = {s: None}
    queue = deque([s])
    while queue:
        a = queue.popleft()
        for b in sorted(g.neighbors(a)):
            if b in prev:
                continue
            if b == t:
                prev[b] = a
                path = [b]
                while path[-1] != s:
                    path.append(prev[path[-1]])
                return tuple(reversed(path))
            if b in interior:
                prev[b] = a
                queue.append(b)
    return None


def find_chordless_cycle(g: Graph, hint=None) -> tuple | None:
    """A chordless cycle of length >= 4, trying vertex ``hint`` first."""
    if hint is not None:
        cyc = _cycle_through(g, hint)
        if cyc is not None:
            return cyc
    for v in g.vertices:
        cyc = _cycle_through(g, v)
        if cyc is not None:
            return cyc
    return None


def is_chordal(g: Graph) -> ChordalityReport:
    """Decide chordality via MCS and return a checkable witness."""
    order = perfect_elimination_order(g)
    bad = verify_peo(g, order)
    if bad is None:
        return ChordalityReport(True, order=order)
    cycle = find_chordless_cycle(g, hint=bad[0])
    if cycle is None:  # pragma: no cover - would contradict the MCS characterisation
        raise AssertionError("elimination order failed but no chordless cycle found")
    return ChordalityReport(False, cycle=cycle)


def maximal_cliques_chordal(g: Graph, order: EliminationOrder | None = None) -> list[frozenset]:
    """All maximal cliques of a chordal graph, sorted by their sorted vertex tuples."""
    if order is None:
        report = is_chordal(g)
        if not report:
            raise NotChordalError(report.cycle)
        order = report.order
    pos = order.positions()
    later = {v: frozenset(w for w in g.neighbors(v) if pos[w] > pos[v]) for v in order.order}
    cliques = []
    for v in order.order:
        cand = later[v] | {v}
        # C_v is contained in C_u only for an earlier-eliminated neighbour u
        dominated = any(
            pos[u] < pos[v] and v in later[u] and len(later[u]) >= len(later[v]) + 1 and later[v] <= later[u]
            for u in g.neighbors(v)
        )
        if not dominated:
            cliques.append(frozenset(cand))
    return sorted(set(cliques), key=lambda c: tuple(sorted(c)))


@dataclass(frozen=True)
class GoodTreeDecomposition:
    """Rooted clique tree with cone, separator and remainder maps per node.

    ``root_separator`` records the ordered separator chosen at the root.
    """

    tree: RootedTree
    bags: Mapping
    sigma: Mapping = field(default_factory=dict)
    alpha: Mapping = field(default_factory=dict)
    gamma: Mapping = field(default_factory=dict)
    root_separator: tuple = ()

    @classmethod
    def from_tree(cls, tree: RootedTree, bags: Mapping, root_separator=None):
        """Derive cones, separators and remainders from a rooted tree and its bags."""
        gamma = {}
        for t in tree.nodes:
            gamma[t] = frozenset().union(*(bags[d] for d in tree.descendants(t)))
        sigma = {}
        for t, s in tree.parent.items():
            sigma[t] = frozenset(bags[t] & bags[s])
        kids = tree.children(tree.root)
        if root_separator is None:
            if len(kids) == 1:
                rest = sorted(bags[tree.root] - bags[kids[0]])
                root_separator = tuple(rest[:2])
            else:
                root_separator = tuple(sorted(bags[tree.root])[:2])
        sigma[tree.root] = frozenset(root_separator)
        alpha = {t: gamma[t] - sigma[t] for t in tree.nodes}
        return cls(tree, dict(bags), sigma, alpha, gamma, tuple(root_separator))


def _clique_tree_edges(cliques: list) -> list:
    """Maximum-weight spanning forest of the clique intersection graph (Kruskal)."""
    by_vertex: dict = {}
    for i, c in enumerate(cliques):
        for v in c:
            by_vertex.setdefault(v, []).append(i)
    cand = set()
    for idx in by_vertex.values():
        for a in range(len(idx)):
            for b in range(a + 1, len(idx)):
                cand.add((idx[a], idx[b]))
    weighted = sorted(((-len(cliques[i] & cliques[j]), i, j) for i, j in cand))
    parent = list(range(len(cliques)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    edges = []
    for _, i, j in weighted:
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[ri] = rj
            edges.append((i, j))
    return edges


def good_tree_decomposition(g: Graph) -> GoodTreeDecomposition:
    """Clique tree of a connected, non-complete chordal graph, rooted at a leaf."""
    if len(g) == 0:
        raise EmptyGraphError("empty graph")
    if len(connected_components(g)) != 1:
        raise DisconnectedError("good_tree_decomposition needs a connected graph")
    report = is_chordal(g)
    if not report:
        raise NotChordalError(report.cycle)
    if g.is_complete():
        raise CompleteGraphError("a complete graph has a single-bag decomposition")
    cliques = maximal_cliques_chordal(g, report.order)
    edges = _clique_tree_edges(cliques)
    adj: dict = {i: [] for i in range(len(cliques))}
    for i, j in edges:
        adj[i].append(j)
        adj[j].append(i)
    visit = {v: i for i, v in enumerate(mcs_order(g).order, start=1)}
    leaves = [i for i in adj if len(adj[i]) == 1]
    root = min(leaves, key=lambda i: tuple(-p for p in sorted(visit[v] for v in cliques[i])))
    par = {}
    queue = deque([root])
    seen = {root}
    while queue:
        t = queue.popleft()
        for u in sorted(adj[t]):
            if u not in seen:
                seen.add(u)
                par[u] = t
                queue.append(u)
    tree = RootedTree(root, par)
    bags = {i: cliques[i] for i in range(len(cliques))}
    return GoodTreeDecomposition.from_tree(tree, bags)


@dataclass(frozen=True)
class ValidationReport:
    """``ok`` or the first violated condition with a witness."""

    ok: bool
    condition: str | None = None
    witness: object = None

    def __bool__(self):
        return self.ok


def _tree_connected(tree: RootedTree, nodes: set) -> bool:
    if not nodes:
        return False
    start = next(iter(nodes))
    seen = {start}
    stack = [start]
    while stack:
        t = stack.pop()
        for u in tree.neighbours(t):
            if u in nodes and u not in seen:
                seen.add(u)
                stack.append(u)
    return seen == nodes


def validate_tree_decomposition(g: Graph, d: GoodTreeDecomposition, line_graph: bool | None = None) -> ValidationReport:
    """Check every good-decomposition invariant of ``d`` against ``g``.

    With ``line_graph`` true (or ``None`` and ``g`` recognised as a line graph)
    the neighbour dichotomy and the bounded pairwise intersection are checked too.
    """
    tree, bags = d.tree, d.bags
    nodes = tree.nodes
    for v in g.vertices:
        holders = {t for t in nodes if v in bags[t]}
        if not _tree_connected(tree, holders):
            return ValidationReport(False, "T.1", v)
    for u, v in sorted(g.edges):
        if not any(u in bags[t] and v in bags[t] for t in nodes):
            return ValidationReport(False, "T.2", (u, v))
    for t in nodes:
        bag = bags[t]
        if not g.is_clique(bag):
            return ValidationReport(False, "i", t)
        common = set(g.vertices) - bag
        for v in bag:
            common &= g.neighbors(v)
        if common:
            return ValidationReport(False, "i", t)
    cliques = maximal_cliques_chordal(g)
    for c in cliques:
        if sum(1 for t in nodes if bags[t] == c) != 1:
            return ValidationReport(False, "ii", tuple(sorted(c)))
    for t in nodes:
        expect = frozenset().union(*(bags[x] for x in tree.descendants(t)))
        if d.gamma.get(t) != expect:
            return ValidationReport(False, "gamma", t)
        if t in tree.parent:
            if d.sigma.get(t) != bags[t] & bags[tree.parent[t]]:
                return ValidationReport(False, "sigma", t)
        if d.alpha.get(t) != d.gamma[t] - d.sigma.get(t, frozenset()):
            return ValidationReport(False, "alpha", t)
    kids = tree.children(tree.root)
    if len(nodes) > 1:
        if len(kids) != 1:
            return ValidationReport(False, "root-one-child", tree.root)
        s = bags[tree.root] - bags[kids[0]]
        rs = d.sigma[tree.root]
        if not rs <= s or len(rs) != min(2, len(s)):
            return ValidationReport(False, "root-separator", tree.root)
    if line_graph is None:
        from .linegraph import is_line_graph

        line_graph = is_line_graph(g)
    if line_graph:
        for t in nodes:
            sig = d.sigma.get(t, frozenset())
            if not 1 <= len(sig) <= 2 or not (bags[t] - sig):
                return ValidationReport(False, "sigma-size", t)
            nb = tree.neighbours(t)
            disjoint = all(not (bags[a] & bags[b]) for i, a in enumerate(nb) for b in nb[i + 1:])
            if not disjoint and not (len(bags[t]) == 3 and len(nb) <= 3):
                return ValidationReport(False, "iii", t)
        for i, t in enumerate(nodes):
            for u in nodes[i + 1:]:
                if len(bags[t] & bags[u]) > 2:
                    return ValidationReport(False, "iv", (t, u))
    return ValidationReport(True)


def format_decomposition(d: GoodTreeDecomposition) -> str:
    """Diagnostic dump: one ``node parent bag...`` line per node."""
    lines = []
    for t in d.tree.nodes:
        par = d.tree.parent.get(t, "-")
        bag = " ".join(str(v) for v in sorted(d.bags[t]))
        lines.append(f"{t} {par} {bag}")
    return "\n".join(lines) + "\n"
