"""Quasi-isometry classification of 2-dimensional Artin groups and
ordered graph 2-braid groups.

Verdicts are QI, NOT_QI or UNKNOWN; each decided verdict cites the rule
that produced it.  UNKNOWN is a first-class answer: nothing is claimed
beyond the implemented rigidity facts.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .graphs import (SimplicialGraph, analyze_cactus, graph_isomorphic,
                     is_triangle_free)
from .joincomplex import (build_ri_braid, build_ri_braid_from_pairs,
                          build_ri_raag, components_and_switch,
                          maximal_simplices)
from .products import maximal_products_bruteforce


@dataclass
class GroupDescriptor:
    family: str                  # "raag" or "pb2"
    graph: object                # SimplicialGraph
    _cache: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        if self.family not in ("raag", "pb2"):
            raise ValueError("family must be 'raag' or 'pb2'")
        if not self.graph.is_connected():
            raise ValueError("defining graph must be connected")
        if self.family == "raag" and not is_triangle_free(self.graph):
            raise ValueError("raag descriptor needs a triangle-free graph "
                             "(otherwise the group is not 2-dimensional)")

    @property
    def cactus(self):
        if "cactus" not in self._cache:
            self._cache["cactus"] = analyze_cactus(self.graph)
        return self._cache["cactus"]

    @property
    def ri(self):
        if "ri" not in self._cache:
            if self.family == "raag":
                self._cache["ri"] = build_ri_raag(self.graph)
            elif self.cactus.is_special:
                self._cache["ri"] = build_ri_braid(self.cactus)
            else:
                pairs = maximal_products_bruteforce(self.graph)
                self._cache["ri"] = build_ri_braid_from_pairs(self.graph, pairs)
        return self._cache["ri"]

    @property
    def out_finite(self):
        if "out" not in self._cache:
            self._cache["out"] = out_finite(self.graph)
        return self._cache["out"]


@dataclass
class Verdict:
    relation: str                # "QI", "NOT_QI", "UNKNOWN"
    rule: str
    evidence: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.relation != "UNKNOWN" and not self.rule:
            raise ValueError("decided verdicts need a rule")

    def to_json(self):
        return {"relation": self.relation, "rule": self.rule,
                "evidence": self.evidence}


# --- graph predicates ------------------------------------------------------

def is_tree(g):
    return g.is_connected() and len(g.edges) == len(g.vertices) - 1


def diameter(g):
    best = 0
    for v in g.vertices:
        dist = {v: 0}
        frontier = [v]
        while frontier:
            nxt = []
            for x in frontier:
                for y in g.adjacent(x):
                    if y not in dist:
                        dist[y] = dist[x] + 1
                        nxt.append(y)
            frontier = nxt
        best = max(best, max(dist.values()))
    return best


def join_decomposition(g):
    """(side_a, side_b) if g is a nonempty join (complete bipartite for
    triangle-free g), else None."""
    if len(g.vertices) < 2:
        return None
    # a connected triangle-free join is exactly a complete bipartite graph
    start = g.vertices[0]
    color = {start: 0}
    stack = [start]
    while stack:
        x = stack.pop()
        for y in g.adjacent(x):
            if y not in color:
                color[y] = 1 - color[x]
                stack.append(y)
            elif color[y] == color[x]:
                return None
    a = frozenset(v for v in g.vertices if color[v] == 0)
    b = frozenset(v for v in g.vertices if color[v] == 1)
    if len(g.edges) == len(a) * len(b):
        return (a, b)
    return None


def out_finite(g):
    """Finiteness of the outer automorphism group of the Artin group:
    no transvections and no partial conjugations.  Returns
    (bool, witnesses)."""
    witnesses = {}
    verts = list(g.vertices)
    for w in verts:
        lk_w = set(g.adjacent(w))
        for v in verts:
            if v == w:
                continue
            st_v = set(g.adjacent(v)) | {v}
            if lk_w <= st_v:
                witnesses.setdefault("transvections", []).append((w, v))
    for v in verts:
        st_v = set(g.adjacent(v)) | {v}
        rest = [u for u in verts if u not in st_v]
        if not rest:
            continue
        seen = {rest[0]}
        stack = [rest[0]]
        while stack:
            x = stack.pop()
            for y in g.adjacent(x):
                if y not in st_v and y not in seen:
                    seen.add(y)
                    stack.append(y)
        if len(seen) != len(rest):
            witnesses.setdefault("separating_stars", []).append(v)
    return (not witnesses, witnesses)


# --- cactus family shapes --------------------------------------------------

def star_cactus_arms(analysis):
    """k if the cactus's spine is a star with k >= 3 joint leaves and a
    non-joint center (the family whose braid group is QI to a tree
    Artin group free-producted with Z), else None."""
    if not analysis.is_special:
        return None
    sp = analysis.spine
    joints = set(analysis.joints.values())
    if len(sp.vertices) < 4:
        return None
    degs = {v: len(sp.adjacent(v)) for v in sp.vertices}
    centers = [v for v in sp.vertices if degs[v] >= 2]
    leaves = [v for v in sp.vertices if degs[v] == 1]
    if len(centers) != 1 or len(leaves) < 3:
        return None
    c = centers[0]
    if c in joints:
        return None
    if degs[c] != len(leaves):
        return None
    if not all(l in joints for l in leaves):
        return None
    return len(leaves)


def double_star_cactus(analysis):
    """n if the cactus is a path of two non-joint branch vertices with
    two joint leaves at each end and n joints along the path between
    them, else None."""
    if not analysis.is_special:
        return None
    sp = analysis.spine
    joints = set(analysis.joints.values())
    degs = {v: len(sp.adjacent(v)) for v in sp.vertices}
    leaves = [v for v in sp.vertices if degs[v] == 1]
    branch = [v for v in sp.vertices if degs[v] == 3]
    if len(leaves) != 4 or len(branch) != 2:
        return None
    if any(degs[v] not in (1, 2, 3) for v in sp.vertices):
        return None
    if any(b in joints for b in branch):
        return None
    if not all(l in joints for l in leaves):
        return None
    if not all(sum(1 for u in sp.adjacent(b) if u in leaves) == 2 for b in branch):
        return None
    mids = [v for v in sp.vertices if degs[v] == 2]
    if not all(v in joints for v in mids):
        return None
    # mids must lie on the branch-to-branch path
    return len(mids)


# --- obstruction pattern ---------------------------------------------------

def _locally_separated(jc, v, maxes):
    """At vertex v: is every (maximal edge, maximal >=2-simplex) pair
    through v separated by v (no connection avoiding v)?"""
    through = [m for m in maxes if v in m.verts]
    med = [m for m in through if m.dim == 1]
    mhi = [m for m in through if m.dim >= 2]
    if not med or not mhi:
        return True
    # component structure of simplices through v, linking on vertices != v
    idx = {m.sid: i for i, m in enumerate(through)}
    parent = list(range(len(through)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for m1, m2 in combinations(through, 2):
        if (m1.verts & m2.verts) - {v}:
            parent[find(idx[m1.sid])] = find(idx[m2.sid])
    for e in med:
        for t in mhi:
            if find(idx[e.sid]) == find(idx[t.sid]):
                return False
    return True


def detect_obstruction_pattern(jc):
    """Search for a 4-cycle of maximal simplices alternating maximal
    edges and maximal simplices of dimension >= 2, consecutive members
    meeting in locally separating vertices.  Returns (found, witness)
    where witness lists the four labels in order (E1, T1, E2, T2)."""
    if jc.kind != "braid":
        raise ValueError("obstruction pattern is defined on braid complexes")
    maxes = maximal_simplices(jc)
    med = [m for m in maxes if m.dim == 1]
    mhi = [m for m in maxes if m.dim >= 2]
    if not med or not mhi:
        return (False, None)
    sep_cache = {}

    def sep(v):
        if v not in sep_cache:
            sep_cache[v] = _locally_separated(jc, v, maxes)
        return sep_cache[v]

    def meet(m1, m2):
        return m1.verts & m2.verts

    med.sort(key=lambda m: m.label.sort_key())
    mhi.sort(key=lambda m: m.label.sort_key())
    for e1 in med:
        for t1 in mhi:
            v1 = meet(e1, t1)
            if not v1:
                continue
            for e2 in med:
                if e2.sid == e1.sid:
                    continue
                v2 = meet(t1, e2)
                if not v2 or v2 == v1:
                    continue
                for t2 in mhi:
                    if t2.sid == t1.sid:
                        continue
                    v3 = meet(e2, t2)
                    v4 = meet(t2, e1)
                    if not v3 or not v4 or v3 == v2 or v4 == v1 or v3 == v4:
                        continue
                    verts = [next(iter(x)) for x in (v1, v2, v3, v4)]
                    if len(set(verts)) != 4:
                        continue
                    if all(sep(v) for v in verts):
                        witness = [m.label.pretty() for m in (e1, t1, e2, t2)]
                        return (True, witness)
    return (False, None)


# --- block comparison ------------------------------------------------------

def block_compare(g1, g2, blocks1, blocks2):
    """Compare two Artin groups through decompositions into finite-Out
    blocks glued along cut vertices.  NOT_QI when the multisets of
    isomorphism classes differ; UNKNOWN when they agree."""
    def induced_graph(g, vs):
        vs = [v for v in g.vertices if v in frozenset(vs)]
        es = [e for e in g.edges if e <= frozenset(vs)]
        return SimplicialGraph(vs, es)

    for g, blocks, tag in ((g1, blocks1, "first"), (g2, blocks2, "second")):
        subs = []
        for b in blocks:
            sub = induced_graph(g, b)
            ok, wit = out_finite(sub)
            if not ok:
                raise ValueError("%s decomposition: block %s is not "
                                 "finite-Out (%s)" % (tag, sorted(b), wit))
            subs.append(sub)
        for x, y in combinations(range(len(blocks)), 2):
            inter = frozenset(blocks[x]) & frozenset(blocks[y])
            if len(inter) > 1:
                raise ValueError("%s decomposition: blocks %d,%d share %d "
                                 "vertices" % (tag, x, y, len(inter)))
        for x, y, z in combinations(range(len(blocks)), 3):
            if frozenset(blocks[x]) & frozenset(blocks[y]) & frozenset(blocks[z]):
                raise ValueError("%s decomposition: triple intersection" % tag)
        # no cycle of blocks through cut vertices: incidence graph is a forest
        cuts = set()
        for x, y in combinations(range(len(blocks)), 2):
            cuts |= frozenset(blocks[x]) & frozenset(blocks[y])
        inc_edges = sum(1 for b in blocks for c in cuts if c in frozenset(b))
        nodes = len(blocks) + len(cuts)
        if inc_edges > nodes - 1:
            raise ValueError("block incidence graph contains a cycle")

    def classes(g, blocks):
        reps = []
        for b in blocks:
            sub = induced_graph(g, b)
            for i, (rep, count) in enumerate(reps):
                if graph_isomorphic(sub, rep):
                    reps[i] = (rep, count + 1)
                    break
            else:
                reps.append((sub, 1))
        return reps

    c1 = classes(g1, blocks1)
    c2 = classes(g2, blocks2)
    match = len(c1) == len(c2)
    if match:
        used = set()
        for rep1, n1 in c1:
            hit = None
            for j, (rep2, n2) in enumerate(c2):
                if j not in used and n1 == n2 and graph_isomorphic(rep1, rep2):
                    hit = j
                    break
            if hit is None:
                match = False
                break
            used.add(hit)
    if not match:
        return Verdict("NOT_QI", "block-isomorphism-classes",
                       {"classes1": [(sorted(r.vertices), n) for r, n in c1],
                        "classes2": [(sorted(r.vertices), n) for r, n in c2]})
    return Verdict("UNKNOWN", "",
                   {"note": "equal block class multisets; this comparison "
                            "only ever certifies a difference"})


# --- invariants used by the fallback screen ---------------------------------

def _ri_invariants(jc):
    dims = {}
    for s in jc.simplices:
        dims.setdefault(s.dim, set()).add(s.label.qi_type)
    dim = max(dims) if dims else -1
    return {"dimension": dim,
            "qi_type_sets": {d: sorted(v) for d, v in sorted(dims.items())}}


def _ms_census(jc):
    comps = components_and_switch(jc)
    m = sum(1 for c in comps if c["kind"] == "M")
    s = sum(1 for c in comps if c["kind"] == "S")
    return {"M": m, "S_pairs": s // 2}


# --- the classifier ---------------------------------------------------------

def _group_dimension(d):
    if d.family == "raag":
        return 2 if d.graph.edges else 1
    # the braid group is free (dimension 1) unless two disjoint edges exist
    for e1, e2 in combinations(d.graph.sorted_edges(), 2):
        if not (set(e1) & set(e2)):
            return 2
    return 1


def classify_qi(d1, d2):
    """Symmetric quasi-isometry verdict for two group descriptors."""
    if d1.family == "pb2" and d2.family == "raag":
        d1, d2 = d2, d1

    # (a) dimension screen
    dim1, dim2 = _group_dimension(d1), _group_dimension(d2)
    if dim1 != dim2:
        return Verdict("NOT_QI", "geometric-dimension",
                       {"dim1": dim1, "dim2": dim2})

    if d1.family == "raag" and d2.family == "raag":
        return _classify_raag_raag(d1, d2)
    if d1.family == "pb2" and d2.family == "pb2":
        return _classify_pb2_pb2(d1, d2)
    return _classify_raag_pb2(d1, d2)


def _classify_raag_raag(d1, d2):
    g1, g2 = d1.graph, d2.graph
    t1, t2 = is_tree(g1), is_tree(g2)

    # (b) tree rules
    if t1 and t2 and diameter(g1) >= 3 and diameter(g2) >= 3:
        return Verdict("QI", "trees-of-diameter-at-least-3",
                       {"diam1": diameter(g1), "diam2": diameter(g2)})
    if t1 != t2:
        big_tree = (t1 and diameter(g1) >= 3) or (t2 and diameter(g2) >= 3)
        if big_tree:
            return Verdict("NOT_QI", "tree-vs-nontree", {})
    j1, j2 = join_decomposition(g1), join_decomposition(g2)
    if (t1 and diameter(g1) >= 3 and j2) or (t2 and diameter(g2) >= 3 and j1):
        return Verdict("NOT_QI", "tree-vs-product", {})
    if j1 and j2:
        q1 = _join_qi_type(j1)
        q2 = _join_qi_type(j2)
        if q1 == q2:
            return Verdict("QI", "products-of-free-groups", {"type": q1})
        return Verdict("NOT_QI", "products-of-free-groups",
                       {"type1": q1, "type2": q2})
    if len(g1.vertices) == 1 and len(g2.vertices) == 1:
        return Verdict("QI", "infinite-cyclic", {})

    # (c) finite Out: quasi-isometric iff isomorphic
    of1, of2 = d1.out_finite, d2.out_finite
    if of1[0] and of2[0]:
        iso = graph_isomorphic(g1, g2)
        if iso:
            return Verdict("QI", "finite-out-isomorphic", {"isomorphism": iso})
        return Verdict("NOT_QI", "finite-out-nonisomorphic", {})

    # (f) invariant screen on the reduced intersection complexes
    inv1, inv2 = _ri_invariants(d1.ri), _ri_invariants(d2.ri)
    if inv1 != inv2:
        return Verdict("NOT_QI", "ri-invariant-mismatch",
                       {"inv1": inv1, "inv2": inv2})
    return Verdict("UNKNOWN", "", {"note": "all implemented invariants agree"})


def _join_qi_type(sides):
    a, b = sides
    r, s = len(a), len(b)
    if r == 1 and s == 1:
        return "ZxZ"
    if r == 1 or s == 1:
        return "ZxF"
    return "FxF"


def _classify_raag_pb2(d1, d2):
    graag, dpb = d1, d2
    g = graag.graph

    # (d) star-shaped cactus: the braid group is QI to a tree Artin group
    # free-producted with Z, hence to every tree of diameter >= 3
    k = star_cactus_arms(dpb.cactus) if dpb.cactus.is_cactus else None
    if k is not None and is_tree(g) and diameter(g) >= 3:
        return Verdict("QI", "star-cactus-vs-tree", {"arms": k})

    # (e) obstruction: not QI to any Artin group of this kind
    if dpb.ri.vertex_ids:
        found, witness = detect_obstruction_pattern(dpb.ri)
        if found:
            return Verdict("NOT_QI", "separating-pattern-obstruction",
                           {"witness": witness})

    # (f) invariant screen
    inv1, inv2 = _ri_invariants(graag.ri), _ri_invariants(dpb.ri)
    if inv1 != inv2:
        return Verdict("NOT_QI", "ri-invariant-mismatch",
                       {"inv1": inv1, "inv2": inv2})
    return Verdict("UNKNOWN", "", {"note": "all implemented invariants agree"})


def _classify_pb2_pb2(d1, d2):
    g1, g2 = d1.graph, d2.graph
    iso = graph_isomorphic(g1, g2)
    if iso:
        return Verdict("QI", "isomorphic-graphs", {"isomorphism": iso})
    k1 = star_cactus_arms(d1.cactus) if d1.cactus.is_cactus else None
    k2 = star_cactus_arms(d2.cactus) if d2.cactus.is_cactus else None
    if k1 is not None and k2 is not None:
        return Verdict("QI", "star-cacti", {"arms": (k1, k2)})
    inv1, inv2 = _ri_invariants(d1.ri), _ri_invariants(d2.ri)
    if inv1 != inv2:
        return Verdict("NOT_QI", "ri-invariant-mismatch",
                       {"inv1": inv1, "inv2": inv2})
    if d1.cactus.is_special and d2.cactus.is_special:
        c1, c2 = _ms_census(d1.ri), _ms_census(d2.ri)
        if c1 != c2:
            return Verdict("NOT_QI", "component-census-mismatch",
                           {"census1": c1, "census2": c2})
    return Verdict("UNKNOWN", "", {"note": "all implemented invariants agree"})
