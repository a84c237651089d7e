"""The hat construction, its inverse, and deciders transported along reductions.

``hat(G)`` keeps ``V(G)`` as a clique (the core) and adds one vertex per edge
of ``G``, joined to both endpoints. It is always chordal.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable

from .errors import EmptyGraphError, NotHatImageError
from .graph import Graph
from .linegraph import line_graph

__all__ = ["HatImage", "hat", "unhat", "is_hat", "hat_split", "transport_decider"]

# below this order the degree criterion for the core can misfire
_SMALL = 6


@dataclass(frozen=True)
class HatImage:
    graph: Graph
    core: frozenset
    pendant: dict  # new vertex -> (u, v) core pair it encodes


def hat(g: Graph) -> HatImage:
    """Build ``hat(g)``; new vertices are numbered after ``max(V(g))`` in edge order."""
    if len(g) == 0:
        raise EmptyGraphError("hat needs a nonempty graph")
    if not all(isinstance(v, int) for v in g.vertices):
        raise TypeError("hat expects integer vertex identifiers; relabel() first")
    nxt = max(g.vertices) + 1
    pendant = {}
    for k, e in enumerate(g.sorted_edges()):
        pendant[nxt + k] = e
    core = g.vertices
    edges = list(combinations(core, 2))
    for x, (u, v) in pendant.items():
        edges += [(u, x), (v, x)]
    return HatImage(Graph(list(core) + list(pendant), edges), frozenset(core), pendant)


def _check_split(h: Graph, core: frozenset) -> str | None:
    """Reason why ``core`` is not a valid hat core of ``h``, or ``None``."""
    if not core:
        return "empty core"
    if not h.is_clique(core):
        return "core is not a clique"
    pairs = set()
    for x in h.vertices:
        if x in core:
            continue
        nb = h.neighbors(x)
        if len(nb) != 2:
            return f"vertex {x!r} outside the core has degree {len(nb)}"
        if not nb <= core:
            return f"vertex {x!r} has a neighbour outside the core"
        if nb in pairs:
            return f"two pendant vertices share the core pair {tuple(sorted(nb))}"
        pairs.add(nb)
    return None


def hat_split(h: Graph) -> HatImage:
    """Recover the core and pendant vertices of a hat image, or raise ``NotHatImageError``.

    Small graphs are searched exhaustively and the largest core wins, which
    reads ``K3`` as ``hat(I3)`` rather than ``hat(K2)``.
    """
    if len(h) == 0:
        raise EmptyGraphError("empty graph")
    if len(h) <= _SMALL:
        found = None
        for size in range(len(h), 0, -1):
            for core in combinations(h.vertices, size):
                if _check_split(h, frozenset(core)) is None:
                    found = frozenset(core)
                    break
            if found is not None:
                break
        if found is None:
            raise NotHatImageError("no core split satisfies the hat conditions")
        core = found
    else:
        core = frozenset(v for v in h.vertices if h.degree(v) >= 3)
        reason = _check_split(h, core)
        if reason is not None:
            raise NotHatImageError(reason)
    pendant = {x: tuple(sorted(h.neighbors(x))) for x in h.vertices if x not in core}
    return HatImage(h, core, pendant)


def unhat(h: Graph) -> Graph:
    """The graph ``G`` (never ``K2``) with ``hat(G)`` isomorphic to ``h``.

    Core vertices keep their identifiers.
    """
    split = hat_split(h)
    return Graph(split.core, split.pendant.values())


def is_hat(h: Graph) -> bool:
    try:
        hat_split(h)
    except NotHatImageError:
        return False
    return True


def transport_decider(decider: Callable[[Graph], bool], direction: str) -> Callable[[Graph], bool]:
    """Lift a decider on hat images or line graphs to a decider on all graphs.

    ``direction`` is ``"via_hat"`` or ``"via_linegraph"``.
    """
    if direction == "via_hat":
        return lambda g: decider(hat(g).graph)
    if direction == "via_linegraph":
        return lambda g: decider(line_graph(g))
    raise ValueError(f"unknown direction {direction!r}")
