"""Canonical forms for chordal line graphs.

A connected, non-complete chordal line graph is rebuilt bottom-up along a
decomposition whose nodes are vertex triples ``(u1, u2, u3)`` lying in a
unique maximal clique. A node has

* separator ``sigma = {u1, u2}``,
* remainder ``alpha``, the component of ``G - sigma`` holding ``u3``,
* bag ``beta``, the maximal clique through ``u1, u2, u3``,
* cone ``gamma = sigma | alpha``.

Its children are the components of ``G[gamma - beta]``. Each cone gets a
labeled copy on ``1..|gamma|`` with ``u1 -> 1`` and ``u2 -> 2``, assembled
from the copies of its children; the canonical form is the s-lex least copy
over every admissible root triple. Complete graphs map to ``K_n`` and
disconnected graphs are handled componentwise.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import permutations, product
from typing import NamedTuple

from .chordal import maximal_cliques_chordal
from .errors import NoCandidatesError, NotChordalLineError, NotInUError, StructuralViolation
from .graph import Graph, LabeledGraph, complete_graph, connected_components, slex_key
from .isocheck import is_isomorphism
from .linegraph import is_chordal_line

__all__ = [
    "TripleNode",
    "ConeData",
    "ChildGroup",
    "CanonicalForm",
    "ChordalLineCanonizer",
    "cone_data",
    "children",
    "canon_pointed",
    "root_candidates",
    "canon_connected",
    "canon",
]


class TripleNode(NamedTuple):
    u1: object
    u2: object
    u3: object

    @property
    def separator(self) -> tuple:
        """``(u1,)`` or ``(u1, u2)``: the separator in pointing order."""
        return (self.u1,) if self.u1 == self.u2 else (self.u1, self.u2)


@dataclass(frozen=True)
class ConeData:
    sigma: frozenset
    alpha: frozenset
    beta: frozenset
    gamma: frozenset


@dataclass(frozen=True)
class ChildGroup:
    """Children of one node sharing the labeled copy ``form`` and the separator size."""

    cones: tuple
    form: LabeledGraph
    multiplicity: int
    sigma_size: int

    @property
    def order(self) -> int:
        return self.form.n


@dataclass(frozen=True)
class CanonicalForm:
    """Canonical labeled graph plus the isomorphism ``witness`` from the input."""

    graph: LabeledGraph
    witness: dict


@dataclass(frozen=True)
class _Child:
    sigma: frozenset
    alpha: frozenset
    beta: frozenset
    rep: TripleNode

    def keys(self):
        a, *rest = sorted(self.sigma)
        if not rest:
            return [((a,), self.alpha, self.beta)]
        b = rest[0]
        return [((a, b), self.alpha, self.beta), ((b, a), self.alpha, self.beta)]


@dataclass
class _Plan:
    gamma: frozenset
    kids: list
    case: int


class _Form:
    """A labeled copy of a cone: order, sorted edge list, and vertex -> position map."""

    __slots__ = ("n", "edges", "f", "_key")

    def __init__(self, n, edges, f):
        self.n = n
        self.edges = edges
        self.f = f
        self._key = None

    @property
    def key(self):
        if self._key is None:
            self._key = (self.n, tuple((-a, -b) for a, b in self.edges))
        return self._key

    def graph(self) -> LabeledGraph:
        return LabeledGraph(self.n, self.edges)


_BAD = object()


class ChordalLineCanonizer:
    """Canonisation state for one connected chordal line graph.

    Memoises cone copies keyed by ``(ordered separator, alpha, beta)`` so
    that root candidates share their subtrees. With ``record=True`` every
    expanded cone is appended to ``expanded`` as ``(ConeData, child alphas)``.
    """

    def __init__(self, g: Graph, record: bool = False):
        self.g = g
        self.cliques = maximal_cliques_chordal(g)
        self.cliques_of: dict = {v: [] for v in g.vertices}
        for i, c in enumerate(self.cliques):
            for v in c:
                self.cliques_of[v].append(i)
        self.vertices = frozenset(g.vertices)
        self._plans: dict = {}
        self._forms: dict = {}
        self.record = record
        self.expanded: list = []

    # -- cone geometry -------------------------------------------------

    def unique_clique(self, vertices) -> frozenset | None:
        vs = list(vertices)
        common = set(self.cliques_of[vs[0]])
        for v in vs[1:]:
            common.intersection_update(self.cliques_of[v])
        if len(common) != 1:
            return None
        return self.cliques[common.pop()]

    def _component(self, start, removed) -> frozenset:
        g = self.g
        seen = {start}
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for w in g.neighbors(v):
                if w not in seen and w not in removed:
                    seen.add(w)
                    queue.append(w)
        return frozenset(seen)

    def cone(self, u) -> ConeData:
        u = TripleNode(*u)
        g = self.g
        if any(x not in g for x in u):
            raise NotInUError(f"{u} mentions an unknown vertex")
        if u.u3 in (u.u1, u.u2):
            raise NotInUError(f"{u}: third entry must differ from the first two")
        beta = self.unique_clique({u.u1, u.u2, u.u3})
        if beta is None:
            raise NotInUError(f"{u} does not lie in exactly one maximal clique")
        sigma = frozenset((u.u1, u.u2))
        alpha = self._component(u.u3, sigma)
        return ConeData(sigma, alpha, beta, sigma | alpha)

    def _key(self, u) -> tuple:
        u = TripleNode(*u)
        data = self.cone(u)
        return (u.separator, data.alpha, data.beta)

    def _child_cones(self, gamma: frozenset, beta: frozenset) -> list:
        g = self.g
        rest = gamma - beta
        seen: set = set()
        out = []
        for s in sorted(rest):
            if s in seen:
                continue
            comp = {s}
            queue = deque([s])
            border = set()
            while queue:
                v = queue.popleft()
                for w in g.neighbors(v):
                    if w in rest:
                        if w not in comp:
                            comp.add(w)
                            queue.append(w)
                    else:
                        border.add(w)
            seen |= comp
            comp = frozenset(comp)
            if not border <= beta:
                raise StructuralViolation("child component reaches outside the bag")
            if not 1 <= len(border) <= 2 or not g.is_clique(border):
                raise StructuralViolation(f"child separator of size {len(border)} is not a 1- or 2-clique")
            bags = set()
            rep = None
            for x in sorted(comp):
                if not border <= g.neighbors(x):
                    continue
                bag = self.unique_clique(border | {x})
                if bag is None:
                    continue
                if rep is None:
                    a, *b = sorted(border)
                    rep = TripleNode(a, b[0] if b else a, x)
                bags.add(bag)
            if len(bags) != 1:
                raise StructuralViolation("child cone does not determine a unique bag")
            out.append(_Child(frozenset(border), comp, bags.pop(), rep))
        return out

    def _plan(self, key) -> _Plan:
        plan = self._plans.get(key)
        if plan is not None:
            return plan
        sep, alpha, beta = key
        gamma = frozenset(sep) | alpha
        kids = self._child_cones(gamma, beta)
        sigmas = [k.sigma for k in kids]
        disjoint = all(not (s & frozenset(sep)) for s in sigmas) and all(
            not (a & b) for i, a in enumerate(sigmas) for b in sigmas[i + 1:]
        )
        if disjoint:
            case = 1
        elif len(beta) == 3 and len(kids) <= 2:
            case = 2
        else:
            raise StructuralViolation("cone fits neither the disjoint nor the triangle case")
        plan = _Plan(gamma, kids, case)
        self._plans[key] = plan
        if self.record:
            data = ConeData(frozenset(sep), alpha, beta, gamma)
            self.expanded.append((data, [k.alpha for k in kids]))
        return plan

    def children(self, u) -> list[TripleNode]:
        """One representative triple per child cone of ``u``."""
        sep, alpha, beta = self._key(u)
        return [k.rep for k in self._child_cones(frozenset(sep) | alpha, beta)]

    # -- assembly ------------------------------------------------------

    def _solve(self, root_key) -> _Form:
        forms = self._forms
        stack = [root_key]
        while stack:
            key = stack[-1]
            if key in forms:
                stack.pop()
                continue
            try:
                plan = self._plan(key)
            except StructuralViolation:
                forms[key] = _BAD
                stack.pop()
                continue
            needed = [ck for kid in plan.kids for ck in kid.keys()]
            missing = [ck for ck in needed if ck not in forms]
            if missing:
                stack.extend(missing)
                continue
            if any(forms[ck] is _BAD for ck in needed):
                forms[key] = _BAD
            elif plan.case == 1:
                forms[key] = self._assemble_disjoint(key, plan)
            else:
                forms[key] = self._assemble_triangle(key, plan)
            stack.pop()
        result = forms[root_key]
        if result is _BAD:
            raise StructuralViolation("a cone below this node violates the case dichotomy")
        return result

    def _best_orientation(self, kid: _Child) -> _Form:
        return min((self._forms[k] for k in kid.keys()), key=lambda fm: fm.key)

    def groups(self, u) -> list[ChildGroup]:
        """Child groups of ``u`` in ascending s-lex order of their copies."""
        key = self._key(u)
        plan = self._plan(key)
        self._solve(key)
        by_form: dict = {}
        for kid in plan.kids:
            fm = self._best_orientation(kid)
            by_form.setdefault((fm.key, len(kid.sigma)), (fm, []))[1].append(kid)
        out = []
        for k in sorted(by_form):
            fm, kids = by_form[k]
            out.append(ChildGroup(tuple(kid.sigma | kid.alpha for kid in kids), fm.graph(), len(kids), len(kids[0].sigma)))
        return out

    def _assemble_disjoint(self, key, plan: _Plan) -> _Form:
        sep, alpha, beta = key
        f: dict = {}
        for i, v in enumerate(sep, start=1):
            f[v] = i
        covered = frozenset().union(*(k.sigma for k in plan.kids)) if plan.kids else frozenset()
        # bag vertices in no child bag are interchangeable
        for v in sorted(beta - covered - frozenset(sep)):
            f[v] = len(f) + 1
        q = len(f)
        clique = list(range(1, q + 1))
        edges: set = set()
        groups: dict = {}
        # the same copy can hang off one or two separator vertices; keep those apart
        for kid in plan.kids:
            fm = self._best_orientation(kid)
            groups.setdefault((fm.key, len(kid.sigma)), []).append((kid, fm))
        offset = q
        for k in sorted(groups):
            for kid, fm in sorted(groups[k], key=lambda item: min(item[0].alpha)):
                for x, p in fm.f.items():
                    f[x] = p + offset
                edges.update((a + offset, b + offset) for a, b in fm.edges)
                clique.extend(range(offset + 1, offset + len(kid.sigma) + 1))
                offset += fm.n
        for i, a in enumerate(clique):
            for b in clique[i + 1:]:
                edges.add((a, b) if a < b else (b, a))
        return _Form(offset, sorted(edges), f)

    def _assemble_triangle(self, key, plan: _Plan) -> _Form:
        sep, alpha, beta = key
        others = sorted(beta - frozenset(sep))
        options = [[(ck, self._forms[ck]) for ck in kid.keys()] for kid in plan.kids]
        best = None
        for tail in permutations(others):
            pos = {v: i for i, v in enumerate(tuple(sep) + tail, start=1)}
            for pick in product(*options):
                for order in permutations(range(len(pick))):
                    f = dict(pos)
                    edges = {(1, 2), (1, 3), (2, 3)}
                    offset = 3
                    for idx in order:
                        (ordered_sep, _, _), fm = pick[idx]
                        q = len(ordered_sep)
                        slot = {p: pos[v] for p, v in enumerate(ordered_sep, start=1)}
                        for p in range(q + 1, fm.n + 1):
                            slot[p] = offset + p - q
                        for x, p in fm.f.items():
                            f[x] = slot[p]
                        for a, b in fm.edges:
                            a, b = slot[a], slot[b]
                            edges.add((a, b) if a < b else (b, a))
                        offset += fm.n - q
                    cand = _Form(offset, sorted(edges), f)
                    if best is None or cand.key < best.key:
                        best = cand
        return best

    # -- roots ---------------------------------------------------------

    def root_candidates(self) -> list[TripleNode]:
        """Every triple whose cone is the whole graph."""
        g = self.g
        out = []
        for bag in self.cliques:
            members = sorted(bag)
            for u1 in members:
                for u2 in members:
                    sigma = {u1, u2}
                    if not bag - sigma:
                        continue
                    if len(self._component(next(iter(bag - sigma)), sigma)) != len(g) - len(sigma):
                        continue
                    for u3 in members:
                        if u3 in sigma:
                            continue
                        if self.unique_clique(sigma | {u3}) == bag:
                            out.append(TripleNode(u1, u2, u3))
        return out

    def _root_keys(self) -> list:
        """Root triples shaped like the root of a clique tree rooted at a leaf.

        The bag leaves exactly one component behind, and the separator takes
        ``min(2, |S|)`` vertices from ``S``, the bag minus that component's
        attachment. This subset of :meth:`root_candidates` is invariant under
        isomorphism.
        """
        g = self.g
        keys = []
        for bag in self.cliques:
            rest = self.vertices - bag
            if not rest:
                continue
            start = min(rest)
            comp = self._component(start, bag)
            if len(comp) != len(rest):
                continue
            attach = frozenset(w for v in comp for w in g.neighbors(v)) & bag
            free = sorted(bag - attach)
            if not free:
                continue
            if len(free) == 1:
                seps = [(free[0],)]
            else:
                seps = [(a, b) for a in free for b in free if a != b]
            for sep in seps:
                keys.append((sep, self.vertices - frozenset(sep), bag))
        return keys

    def canonical_form(self, paranoid: bool = False) -> CanonicalForm:
        g = self.g
        if g.is_complete():
            f = {v: i for i, v in enumerate(g.vertices, start=1)}
            return CanonicalForm(complete_graph(len(g)), f)
        keys = self._root_keys()
        if not keys:
            raise NoCandidatesError("no root triple found; input is not a connected chordal line graph")
        best = None
        for key in keys:
            try:
                fm = self._solve(key)
            except StructuralViolation:
                continue
            if best is None or fm.key < best.key:
                best = fm
        if best is None:
            raise NoCandidatesError("every root triple violates the decomposition structure")
        form = CanonicalForm(best.graph(), dict(best.f))
        if paranoid and not is_isomorphism(g, form.graph, form.witness):
            raise AssertionError("canonical witness is not an isomorphism")
        return form

    def pointed(self, u) -> CanonicalForm:
        """Labeled copy of ``G[gamma(u)]`` with ``u1 -> 1`` and ``u2 -> 2``."""
        fm = self._solve(self._key(u))
        return CanonicalForm(fm.graph(), dict(fm.f))


def _canonizer(g: Graph) -> ChordalLineCanonizer:
    report = is_chordal_line(g)
    if not report:
        raise NotChordalLineError(f"input is not a chordal line graph ({report.reason})", reason=report)
    return ChordalLineCanonizer(g)


def cone_data(g: Graph, u) -> ConeData:
    return ChordalLineCanonizer(g).cone(u)


def children(g: Graph, u) -> list[TripleNode]:
    return ChordalLineCanonizer(g).children(u)


def canon_pointed(g: Graph, u) -> LabeledGraph:
    return ChordalLineCanonizer(g).pointed(u).graph


def root_candidates(g: Graph) -> list[TripleNode]:
    out = ChordalLineCanonizer(g).root_candidates()
    if not out:
        raise NoCandidatesError("no triple covers the whole graph")
    return out


def canon_connected(g: Graph, paranoid: bool = False) -> CanonicalForm:
    if len(connected_components(g)) != 1:
        raise NotChordalLineError("canon_connected needs a connected graph")
    return _canonizer(g).canonical_form(paranoid=paranoid)


def canon(g: Graph, paranoid: bool = False) -> CanonicalForm:
    """Canonical form of a chordal line graph, componentwise and s-lex sorted."""
    parts = []
    for comp in connected_components(g):
        sub = g.subgraph(comp)
        try:
            parts.append(canon_connected(sub, paranoid=paranoid))
        except NotChordalLineError as exc:
            raise NotChordalLineError(
                f"component containing {min(comp)!r} is not a chordal line graph", component=comp, reason=exc.reason
            ) from exc
    parts.sort(key=lambda cf: slex_key(cf.graph))
    edges = []
    witness = {}
    offset = 0
    for cf in parts:
        edges.extend((a + offset, b + offset) for a, b in cf.graph.edges)
        for v, i in cf.witness.items():
            witness[v] = i + offset
        offset += cf.graph.n
    return CanonicalForm(LabeledGraph(offset, edges), witness)
