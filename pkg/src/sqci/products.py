"""Enumeration of maximal flats' labels.

Salvetti side: maximal join subgraphs (= maximal complete bipartite
subgraphs; in a triangle-free graph these are induced).  Braid side:
maximal ordered pairs of disjoint standard subgraphs, via the spine for
special cacti and via exhaustive subset enumeration as an oracle.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from itertools import combinations

from .graphs import Subgraph, core


DEFAULT_CAP = 24


class CapExceeded(RuntimeError):
    pass


def enumeration_cap(requested=None):
    if requested is not None:
        return requested
    env = os.environ.get("SQCI_CAP")
    if env:
        return int(env)
    return DEFAULT_CAP


@dataclass(frozen=True)
class JoinSubgraph:
    """A complete bipartite subgraph A * B, canonically oriented."""

    side_a: frozenset
    side_b: frozenset

    def __init__(self, side_a, side_b):
        a, b = frozenset(side_a), frozenset(side_b)
        if not a or not b:
            raise ValueError("join sides must be nonempty")
        if a & b:
            raise ValueError("join sides must be disjoint")
        if sorted(b) < sorted(a):
            a, b = b, a
        object.__setattr__(self, "side_a", a)
        object.__setattr__(self, "side_b", b)

    @property
    def support(self):
        return self.side_a | self.side_b

    @property
    def ranks(self):
        return (len(self.side_a), len(self.side_b))

    def edge_pairs(self):
        return frozenset(frozenset((x, y)) for x in self.side_a for y in self.side_b)

    def sort_key(self):
        return (tuple(sorted(self.side_a)), tuple(sorted(self.side_b)))

    def __repr__(self):
        return "{%s}*{%s}" % (",".join(sorted(self.side_a)), ",".join(sorted(self.side_b)))


@dataclass(frozen=True)
class ProductPair:
    """Ordered pair of disjoint standard subgraphs of one graph."""

    first: Subgraph
    second: Subgraph

    def __post_init__(self):
        if self.first.vertex_set & self.second.vertex_set:
            raise ValueError("product coordinates must be vertex-disjoint")

    def swap(self):
        return ProductPair(self.second, self.first)

    @property
    def ranks(self):
        return (self.first.betti1(), self.second.betti1())

    def sort_key(self):
        return (tuple(sorted(self.first.vertex_set)), tuple(sorted(self.second.vertex_set)),
                self.first.key(), self.second.key())

    def __repr__(self):
        return "[%s]x[%s]" % (",".join(sorted(self.first.vertex_set)),
                              ",".join(sorted(self.second.vertex_set)))


def maximal_join_subgraphs(g):
    """All maximal complete bipartite subgraphs of a triangle-free graph.

    Uses the Galois closure: a maximal biclique (A, B) satisfies
    A = common neighbors of B and B = common neighbors of A, so every
    side is an intersection of vertex neighborhoods.
    """
    for e in g.edges:
        u, v = tuple(e)
        if set(g.adjacent(u)) & set(g.adjacent(v)):
            raise ValueError("graph has a triangle; 2-dimensional pipeline only")
    if not g.edges:
        raise ValueError("graph has no edge")

    nbr = {v: frozenset(g.adjacent(v)) for v in g.vertices}

    def common(vs):
        it = iter(vs)
        acc = set(nbr[next(it)])
        for v in it:
            acc &= nbr[v]
        return frozenset(acc)

    # closure system generated by the neighborhoods
    family = set(nbr[v] for v in g.vertices if nbr[v])
    frontier = set(family)
    while frontier:
        new = set()
        for a in frontier:
            for b in family:
                c = a & b
                if c and c not in family and c not in new:
                    new.add(c)
        family |= new
        frontier = new

    out = set()
    for a in family:
        b = common(a)
        if b and common(b) == a:
            out.add(JoinSubgraph(a, b))
    return sorted(out, key=JoinSubgraph.sort_key)


def _pullback(analysis, spine_vertices):
    """Pull a spine subtree back to a subgraph of the cactus.

    Joints blow back up to their full cycles; non-joint vertices and the
    bridges between included spine vertices come along verbatim.  For a
    component of spine minus an edge this is exactly the induced subgraph
    on the preimage.
    """
    g = analysis.graph
    vs = {v for v in g.vertices if analysis.vertex_map[v] in spine_vertices}
    return g.induced(vs)


def maximal_products_cactus(analysis):
    """Maximal product pairs of a special cactus, one per spine edge side."""
    if not analysis.is_special:
        raise ValueError("maximal_products_cactus needs a special cactus")
    if len(analysis.cycles) < 2:
        return []
    spine = analysis.spine
    joints = set(analysis.joints.values())
    out = []
    for e in spine.sorted_edges():
        u, v = e
        side_u = _spine_component(spine, u, e)
        side_v = _spine_component(spine, v, e)
        if not (side_u & joints and side_v & joints):
            continue
        first = core(_pullback(analysis, side_u))
        second = core(_pullback(analysis, side_v))
        if first and second:
            out.append(ProductPair(first, second))
            out.append(ProductPair(second, first))
    return sorted(set(out), key=ProductPair.sort_key)


def _spine_component(spine, start, removed_edge):
    banned = frozenset(removed_edge)
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for w in spine.adjacent(x):
            if frozenset((x, w)) == banned:
                continue
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return seen


def _standard_vertex_sets(g, limit=None):
    """Vertex sets of induced standard subgraphs: connected, min degree >= 2.

    Enumerates connected induced subgraphs rooted at each vertex with the
    usual forbidden-set recursion, then filters by minimum degree.
    """
    out = set()
    order = {v: i for i, v in enumerate(g.vertices)}
    count = [0]

    def grow(current, frontier, forbidden):
        count[0] += 1
        if limit is not None and count[0] > limit:
            raise CapExceeded("connected-subgraph enumeration exceeded %d states" % limit)
        vs = frozenset(current)
        if len(vs) >= 3 and all(sum(1 for w in g.adjacent(v) if w in vs) >= 2 for v in vs):
            out.add(vs)
        if not frontier:
            return
        ext = sorted(frontier, key=order.__getitem__)
        local_forbidden = set(forbidden)
        for v in ext:
            new_frontier = (frontier | {w for w in g.adjacent(v)
                                        if w not in current and w not in local_forbidden}) - {v} - local_forbidden
            grow(current | {v}, frozenset(new_frontier - current), frozenset(local_forbidden))
            local_forbidden.add(v)

    forbidden = set()
    for root in g.vertices:
        grow(frozenset((root,)), frozenset(w for w in g.adjacent(root) if w not in forbidden),
             frozenset(forbidden))
        forbidden.add(root)
    return out


def _core_components(g, excluded):
    """Cores of the components of g minus a vertex set; nonempty ones."""
    rest = set(g.vertices) - set(excluded)
    sub = g.induced(rest)
    out = []
    for comp in sub.components():
        c = core(comp)
        if c:
            out.append(c)
    return out


def maximal_products_bruteforce(g, cap=None):
    """Oracle enumeration of maximal product pairs, exponential with a cap.

    A maximal pair has each coordinate equal to the core of the component
    of the complement of the other coordinate that contains it, and both
    coordinates are induced standard subgraphs; so sweeping all induced
    standard subgraphs as second coordinates finds every maximal pair.
    """
    cap = enumeration_cap(cap)
    if len(g.vertices) > cap:
        raise CapExceeded("graph has %d vertices; cap is %d" % (len(g.vertices), cap))
    state_limit = max(2 ** min(len(g.vertices), 22), 200000)
    candidates = _standard_vertex_sets(g, limit=state_limit)
    seen = set()
    out = []
    for bset in candidates:
        b = g.induced(bset)
        for a in _core_components(g, bset):
            # reciprocal maximality: b must be a core-component of g minus a
            if any(b2.vertex_set == bset for b2 in _core_components(g, a.vertex_set)):
                pair = ProductPair(a, b)
                if pair not in seen:
                    seen.add(pair)
                    out.append(pair)
    return sorted(seen, key=ProductPair.sort_key)


def intersect_products(pairs):
    """Maximal standard products inside the intersection of product pairs.

    Intersects first coordinates and second coordinates (the global
    projection frame is never flipped), splits into components, cores,
    and returns all cross combinations that still contain a cycle.
    """
    if not pairs:
        raise ValueError("need at least one pair")
    g = pairs[0].first.parent
    v1 = set(g.vertices)
    v2 = set(g.vertices)
    e1 = set(g.edges)
    e2 = set(g.edges)
    for p in pairs:
        v1 &= p.first.vertex_set
        e1 &= p.first.edge_set
        v2 &= p.second.vertex_set
        e2 &= p.second.edge_set
    w1 = Subgraph(g, v1, {e for e in e1 if e <= v1})
    w2 = Subgraph(g, v2, {e for e in e2 if e <= v2})
    firsts = [c for c in (core(comp) for comp in w1.components()) if c]
    seconds = [c for c in (core(comp) for comp in w2.components()) if c]
    out = []
    for a in firsts:
        for b in seconds:
            out.append(ProductPair(a, b))
    return sorted(out, key=ProductPair.sort_key)


def products_to_json(pairs):
    def side(s):
        return {"vertices": sorted(s.vertex_set),
                "edges": sorted(sorted(e) for e in s.edge_set)}
    return json.dumps([{"first": side(p.first), "second": side(p.second)} for p in pairs],
                      indent=2, sort_keys=True)
