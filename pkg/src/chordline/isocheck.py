"""Ground-truth oracles: exact isomorphism, brute-force canonical labeling, 1-WL."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import permutations

from .errors import TooLargeError
from .graph import Graph, LabeledGraph

__all__ = ["Coloring", "color_refinement", "are_isomorphic", "brute_canonical", "is_isomorphism"]

BRUTE_LIMIT = 9


@dataclass(frozen=True)
class Coloring:
    colors: dict
    rounds: int

    def class_sizes(self) -> list[int]:
        return sorted(Counter(self.colors.values()).values())


def color_refinement(g: Graph, initial: dict | None = None) -> Coloring:
    """Stable 1-WL colouring.

    Colours are renumbered every round by the sorted order of the signatures
    ``(own colour, sorted neighbour colours)``, so ids are canonical.
    """
    if initial is None:
        colors = {v: 0 for v in g.vertices}
    else:
        ranks = {c: i for i, c in enumerate(sorted(set(initial.values())))}
        colors = {v: ranks[initial[v]] for v in g.vertices}
    rounds = 0
    while True:
        sig = {v: (colors[v], tuple(sorted(colors[w] for w in g.neighbors(v)))) for v in g.vertices}
        ids = {s: i for i, s in enumerate(sorted(set(sig.values())))}
        new = {v: ids[sig[v]] for v in g.vertices}
        if len(ids) == len(set(colors.values())):
            return Coloring(new, rounds)
        colors = new
        rounds += 1


def is_isomorphism(g: Graph, h: Graph, f: dict) -> bool:
    """Check that ``f`` is a bijection ``V(g) -> V(h)`` preserving edges both ways."""
    if len(f) != len(g) or set(f) != set(g.vertices) or set(f.values()) != set(h.vertices):
        return False
    if g.size != h.size:
        return False
    return all(h.has_edge(f[u], f[v]) for u, v in g.edges)


def are_isomorphic(g: Graph, h: Graph) -> dict | None:
    """An isomorphism ``g -> h`` as a dict, or ``None``.

    Backtracking over 1-WL colour classes of the disjoint union; the returned
    map is verified before it is handed out.
    """
    if g.order != h.order or g.size != h.size:
        return None
    if sorted(g.degree(v) for v in g.vertices) != sorted(h.degree(v) for v in h.vertices):
        return None
    if len(g) == 0:
        return {}
    union = Graph(
        [(0, v) for v in g.vertices] + [(1, v) for v in h.vertices],
        [((0, a), (0, b)) for a, b in g.edges] + [((1, a), (1, b)) for a, b in h.edges],
    )
    col = color_refinement(union).colors
    cg = {v: col[(0, v)] for v in g.vertices}
    ch = {v: col[(1, v)] for v in h.vertices}
    if Counter(cg.values()) != Counter(ch.values()):
        return None
    by_colour: dict = {}
    for v in h.vertices:
        by_colour.setdefault(ch[v], []).append(v)
    class_size = Counter(cg.values())
    # smallest colour classes first, then stay adjacent to what is already placed
    order = []
    remaining = set(g.vertices)
    frontier: set = set()
    while remaining:
        v = min(frontier or remaining, key=lambda x: (class_size[cg[x]], -g.degree(x), x))
        order.append(v)
        remaining.discard(v)
        frontier.discard(v)
        frontier.update(w for w in g.neighbors(v) if w in remaining)

    mapping: dict = {}
    used: set = set()

    def fits(v, w) -> bool:
        images = [mapping[u] for u in g.neighbors(v) if u in mapping]
        nw = h.neighbors(w)
        if any(x not in nw for x in images):
            return False
        return len(images) == sum(1 for x in nw if x in used)

    stack = [(0, iter(by_colour[cg[order[0]]]))]
    while stack:
        depth, cands = stack[-1]
        v = order[depth]
        if v in mapping:
            used.discard(mapping.pop(v))
        advanced = False
        for w in cands:
            if w in used or not fits(v, w):
                continue
            mapping[v] = w
            used.add(w)
            if depth + 1 == len(order):
                return dict(mapping) if is_isomorphism(g, h, mapping) else None
            stack.append((depth + 1, iter(by_colour[cg[order[depth + 1]]])))
            advanced = True
            break
        if not advanced:
            stack.pop()
    return None


def brute_canonical(g: LabeledGraph) -> LabeledGraph:
    """The s-lex least relabeling of ``g`` over all ``n!`` permutations."""
    n = g.n
    if n > BRUTE_LIMIT:
        raise TooLargeError(f"brute force is limited to {BRUTE_LIMIT} vertices, got {n}")
    edges = list(g.edges)
    best = None
    for perm in permutations(range(1, n + 1)):
        img = sorted((min(perm[a - 1], perm[b - 1]), max(perm[a - 1], perm[b - 1])) for a, b in edges)
        key = tuple((-a, -b) for a, b in img)
        if best is None or key < best[0]:
            best = (key, img)
    return LabeledGraph(n, best[1])
