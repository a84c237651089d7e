"""Line graphs, root graph reconstruction and chordal line graph recognition.

Root graphs are rebuilt from a Krausz cover: a partition of the edges of
``H`` into cliques ("cells") such that every vertex lies in exactly two cells,
counting a singleton cell for an edge end of degree one.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations

from .chordal import is_chordal
from .errors import DisconnectedError, EdgelessInputError, EmptyGraphError, NotLineGraphError
from .graph import Graph, biconnected_blocks, connected_components

__all__ = [
    "RootGraphResult",
    "ChordalLineReport",
    "line_graph",
    "is_line_graph",
    "root_graph",
    "vertex_star",
    "all_cycles_triangles",
    "is_chordal_line",
    "find_induced_claw",
]


def line_graph(g: Graph) -> Graph:
    """``L(g)``; each vertex is the edge tuple ``(u, v)`` of ``g`` it stands for."""
    if g.size == 0:
        raise EdgelessInputError("the line graph of an edgeless graph is empty")
    edges = []
    for v in g.vertices:
        inc = sorted((v, w) if v < w else (w, v) for w in g.neighbors(v))
        edges.extend(combinations(inc, 2))
    return Graph(g.edges, edges)


def vertex_star(g: Graph, v) -> frozenset:
    """The edges incident to ``v``, written ``X(v)``."""
    if v not in g:
        raise KeyError(f"unknown vertex {v!r}")
    return frozenset((v, w) if v < w else (w, v) for w in g.neighbors(v))


def all_cycles_triangles(g: Graph) -> bool:
    """True iff every cycle of ``g`` has length 3 (every block has <= 3 vertices)."""
    return all(len(b) <= 3 for b in biconnected_blocks(g))


@dataclass(frozen=True)
class RootGraphResult:
    """``root`` together with the map from its edges to the vertices of the input."""

    root: Graph
    correspondence: dict


def find_induced_claw(h: Graph) -> tuple | None:
    """``(centre, a, b, c)`` with ``a, b, c`` pairwise non-adjacent neighbours, or ``None``."""
    for v in h.vertices:
        nb = sorted(h.neighbors(v))
        for i, a in enumerate(nb):
            rest = [x for x in nb[i + 1:] if not h.has_edge(a, x)]
            for j, b in enumerate(rest):
                for c in rest[j + 1:]:
                    if not h.has_edge(b, c):
                        return (v, a, b, c)
    return None


def _neighbourhood_splits(h: Graph, v):
    """Components of the complement of ``H[N(v)]`` as 2-coloured pieces.

    Returns ``None`` if that complement is not bipartite, else a list of
    ``(side0, side1)`` pairs, one per component.
    """
    nb = sorted(h.neighbors(v))
    colour: dict = {}
    pieces = []
    for s in nb:
        if s in colour:
            continue
        colour[s] = 0
        sides = ([s], [])
        queue = deque([s])
        while queue:
            x = queue.popleft()
            adj = h.neighbors(x)
            for y in nb:
                if y == x or y in adj:
                    continue
                if y not in colour:
                    colour[y] = 1 - colour[x]
                    sides[colour[y]].append(y)
                    queue.append(y)
                elif colour[y] == colour[x]:
                    return None
        pieces.append(sides)
    return pieces


def _krausz_cover(h: Graph, v, side_a: set, side_b: set) -> list | None:
    """Propagate the split ``N(v) = A + B`` to a full Krausz cover, or ``None``."""
    cells_of: dict = {x: [] for x in h.vertices}
    cells: set = set()
    queue: deque = deque()

    def add_cell(cell: frozenset) -> bool:
        if cell in cells:
            return True
        if not h.is_clique(cell):
            return False
        cells.add(cell)
        for x in cell:
            held = cells_of[x]
            if len(held) == 2:
                return False
            held.append(cell)
            if len(held) == 1:
                queue.append(x)
        return True

    if not add_cell(frozenset(side_a) | {v}) or not add_cell(frozenset(side_b) | {v}):
        return None
    while queue:
        x = queue.popleft()
        held = cells_of[x]
        if len(held) != 1:
            continue
        other = frozenset(h.neighbors(x) - held[0]) | {x}
        if not add_cell(other):
            return None
    for x in h.vertices:
        held = cells_of[x]
        if len(held) != 2:
            return None
        c, d = held
        if c & d != {x} or (c | d) - {x} != h.neighbors(x):
            return None
    return sorted(cells, key=lambda c: tuple(sorted(c)))


def _root_from_cover(h: Graph, cells: list) -> RootGraphResult:
    ident = {c: i for i, c in enumerate(cells, start=1)}
    holders: dict = {x: [] for x in h.vertices}
    for c in cells:
        for x in c:
            holders[x].append(ident[c])
    corr = {}
    for x, (a, b) in holders.items():
        corr[(a, b) if a < b else (b, a)] = x
    return RootGraphResult(Graph(range(1, len(cells) + 1), corr), corr)


def _verify_root(h: Graph, res: RootGraphResult) -> bool:
    lg = line_graph(res.root)
    if lg.order != h.order or lg.size != h.size:
        return False
    f = res.correspondence
    return all(h.has_edge(f[a], f[b]) for a, b in lg.edges)


def _star_root(h: Graph) -> RootGraphResult:
    corr = {(1, i): x for i, x in enumerate(h.vertices, start=2)}
    return RootGraphResult(Graph(range(1, h.order + 2), corr), corr)


def root_graph(h: Graph) -> RootGraphResult:
    """The graph whose line graph is ``h`` (connected), never a triangle.

    ``K1`` gives ``K2`` and every complete ``K_n`` gives the star ``K_{1,n}``,
    so ``K3`` maps to the claw.
    """
    if len(h) == 0:
        raise EmptyGraphError("empty graph")
    if len(connected_components(h)) != 1:
        raise DisconnectedError("root_graph needs a connected graph; map over components")
    if h.is_complete():
        return _star_root(h)
    best = None
    for v in h.vertices:
        pieces = _neighbourhood_splits(h, v)
        if pieces is None:
            raise NotLineGraphError(
                f"neighbourhood of {v!r} is not the union of two cliques", claw=find_induced_claw(h)
            )
        if best is None or len(pieces) < len(best[1]):
            best = (v, pieces)
    v, pieces = best
    # some edge of a connected non-star root has both ends of degree >= 2
    if len(pieces) > 2:
        raise NotLineGraphError("no vertex has an unambiguous neighbourhood split", claw=find_induced_claw(h))
    first, *rest = pieces
    for flips in range(1 << len(rest)):
        side_a, side_b = set(first[0]), set(first[1])
        for k, (s0, s1) in enumerate(rest):
            if flips >> k & 1:
                side_a.update(s1)
                side_b.update(s0)
            else:
                side_a.update(s0)
                side_b.update(s1)
        cells = _krausz_cover(h, v, side_a, side_b)
        if cells is None:
            continue
        res = _root_from_cover(h, cells)
        if _verify_root(h, res):
            return res
    raise NotLineGraphError("no Krausz cover exists", claw=find_induced_claw(h))


def is_line_graph(h: Graph) -> bool:
    """True iff every component of ``h`` is the line graph of some graph."""
    if len(h) == 0:
        raise EmptyGraphError("empty graph")
    for comp in connected_components(h):
        try:
            root_graph(h.subgraph(comp))
        except NotLineGraphError:
            return False
    return True


@dataclass(frozen=True)
class ChordalLineReport:
    """Verdict of :func:`is_chordal_line`; truthy iff chordal and a line graph.

    ``reason`` is ``"not-chordal"`` (``witness`` a chordless cycle) or
    ``"not-line-graph"`` (``witness`` an induced claw or ``None``).
    """

    ok: bool
    root: Graph | None = None
    reason: str | None = None
    witness: object = None

    def __bool__(self):
        return self.ok


def is_chordal_line(h: Graph) -> ChordalLineReport:
    if len(h) == 0:
        raise EmptyGraphError("empty graph")
    chordal = is_chordal(h)
    if not chordal:
        return ChordalLineReport(False, reason="not-chordal", witness=chordal.cycle)
    edges = []
    offset = 0
    for comp in connected_components(h):
        try:
            res = root_graph(h.subgraph(comp))
        except NotLineGraphError as exc:
            return ChordalLineReport(False, reason="not-line-graph", witness=exc.claw)
        edges.extend((a + offset, b + offset) for a, b in res.root.edges)
        offset += res.root.order
    return ChordalLineReport(True, root=Graph(range(1, offset + 1), edges))
