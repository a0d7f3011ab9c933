"""Finite simplicial graphs, subgraphs, and cactus analysis.

Graphs are immutable after construction.  Vertex identifiers are user
strings; every canonical ordering in this package is derived from the
declaration order of the vertices, so outputs are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations


class GraphParseError(ValueError):
    pass


def _norm_edge(u, v):
    return frozenset((u, v))


class SimplicialGraph:
    """Undirected simple graph: no loops, no multi-edges."""

    def __init__(self, vertices, edges):
        vertices = list(vertices)
        if len(set(vertices)) != len(vertices):
            raise GraphParseError("duplicate vertex identifiers")
        self.vertices = tuple(vertices)
        self._index = {v: i for i, v in enumerate(vertices)}
        norm = set()
        for e in edges:
            u, v = tuple(e)
            if u == v:
                raise GraphParseError("loop edge (%s,%s)" % (u, v))
            if u not in self._index or v not in self._index:
                raise GraphParseError("edge endpoint not declared: (%s,%s)" % (u, v))
            norm.add(_norm_edge(u, v))
        self.edges = frozenset(norm)
        adj = {v: set() for v in vertices}
        for e in self.edges:
            u, v = tuple(e)
            adj[u].add(v)
            adj[v].add(u)
        self._adj = {v: tuple(sorted(ns, key=self._index.__getitem__)) for v, ns in adj.items()}

    def index(self, v):
        return self._index[v]

    def adjacent(self, v):
        return self._adj[v]

    def has_edge(self, u, v):
        return _norm_edge(u, v) in self.edges

    def degree(self, v):
        return len(self._adj[v])

    def sorted_edges(self):
        """Edges as ordered pairs, sorted by declaration order."""
        out = []
        for e in self.edges:
            u, v = sorted(e, key=self._index.__getitem__)
            out.append((u, v))
        out.sort(key=lambda p: (self._index[p[0]], self._index[p[1]]))
        return out

    def __eq__(self, other):
        return (isinstance(other, SimplicialGraph)
                and self.vertices == other.vertices and self.edges == other.edges)

    def __hash__(self):
        return hash((self.vertices, self.edges))

    def __repr__(self):
        return "SimplicialGraph(%d vertices, %d edges)" % (len(self.vertices), len(self.edges))

    def full_subgraph(self):
        return Subgraph(self, set(self.vertices), set(self.edges))

    def induced(self, vertex_set):
        vs = frozenset(vertex_set)
        es = frozenset(e for e in self.edges if e <= vs)
        return Subgraph(self, vs, es)

    def is_connected(self):
        if not self.vertices:
            return True
        seen = {self.vertices[0]}
        stack = [self.vertices[0]]
        while stack:
            for w in self._adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(self.vertices)


@dataclass(frozen=True)
class Subgraph:
    """A subgraph of a fixed parent graph.

    Equality is set equality of vertex and edge sets; the edge set need
    not be the full induced edge set.
    """

    parent: SimplicialGraph
    vertex_set: frozenset
    edge_set: frozenset

    def __init__(self, parent, vertex_set, edge_set):
        vs = frozenset(vertex_set)
        es = frozenset(frozenset(e) for e in edge_set)
        for e in es:
            if not e <= vs:
                raise ValueError("edge %s leaves the vertex set" % sorted(e))
            if e not in parent.edges:
                raise ValueError("edge %s not in parent graph" % sorted(e))
        object.__setattr__(self, "parent", parent)
        object.__setattr__(self, "vertex_set", vs)
        object.__setattr__(self, "edge_set", es)

    def __eq__(self, other):
        return (isinstance(other, Subgraph)
                and self.vertex_set == other.vertex_set
                and self.edge_set == other.edge_set)

    def __hash__(self):
        return hash((self.vertex_set, self.edge_set))

    def __bool__(self):
        return bool(self.vertex_set)

    def degree(self, v):
        return sum(1 for e in self.edge_set if v in e)

    def neighbors(self, v):
        out = set()
        for e in self.edge_set:
            if v in e:
                out |= e - {v}
        return out

    def is_connected(self):
        if not self.vertex_set:
            return True
        start = next(iter(self.vertex_set))
        seen = {start}
        stack = [start]
        while stack:
            for w in self.neighbors(stack.pop()):
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(self.vertex_set)

    def components(self):
        rest = set(self.vertex_set)
        out = []
        while rest:
            start = rest.pop()
            seen = {start}
            stack = [start]
            while stack:
                for w in self.neighbors(stack.pop()):
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
            rest -= seen
            out.append(Subgraph(self.parent, seen,
                                {e for e in self.edge_set if e <= seen}))
        out.sort(key=lambda s: sorted(self.parent.index(v) for v in s.vertex_set))
        return out

    def betti1(self):
        """|E| - |V| + (#components); first Betti number of a graph."""
        return len(self.edge_set) - len(self.vertex_set) + len(self.components())

    def contains(self, other):
        return other.vertex_set <= self.vertex_set and other.edge_set <= self.edge_set

    def sorted_vertices(self):
        return sorted(self.vertex_set, key=self.parent.index)

    def key(self):
        return (tuple(sorted(self.vertex_set)), tuple(sorted(tuple(sorted(e)) for e in self.edge_set)))


def parse_graph(text):
    """Parse the line-based graph format: `# comment`, `v <name>`, `e <a> <b>`."""
    vertices = []
    seen = set()
    edges = []
    edge_seen = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "v" and len(parts) == 2:
            name = parts[1]
            if name in seen:
                raise GraphParseError("line %d: duplicate vertex %r" % (lineno, name))
            seen.add(name)
            vertices.append(name)
        elif parts[0] == "e" and len(parts) == 3:
            a, b = parts[1], parts[2]
            if a == b:
                raise GraphParseError("line %d: loop edge %r" % (lineno, a))
            if a not in seen or b not in seen:
                raise GraphParseError("line %d: unknown endpoint in edge %s %s" % (lineno, a, b))
            key = _norm_edge(a, b)
            if key in edge_seen:
                raise GraphParseError("line %d: multi-edge %s %s" % (lineno, a, b))
            edge_seen.add(key)
            edges.append((a, b))
        else:
            raise GraphParseError("line %d: cannot parse %r" % (lineno, raw))
    return SimplicialGraph(vertices, edges)


def serialize_graph(g):
    lines = ["v %s" % v for v in g.vertices]
    lines += ["e %s %s" % (u, v) for u, v in g.sorted_edges()]
    return "\n".join(lines) + "\n"


def core(sub):
    """Iteratively delete valency-<=1 vertices; the maximal leafless subgraph."""
    vs = set(sub.vertex_set)
    es = set(sub.edge_set)
    while True:
        drop = {v for v in vs if sum(1 for e in es if v in e) <= 1}
        if not drop:
            break
        vs -= drop
        es = {e for e in es if not (e & drop)}
    return Subgraph(sub.parent, vs, es)


def is_triangle_free(g):
    for e in g.edges:
        u, v = tuple(e)
        if set(g.adjacent(u)) & set(g.adjacent(v)):
            return False
    return True


def detect_induced_cycles(g, n):
    """All induced n-cycles, canonical rotation: least start, lesser neighbor second."""
    if n < 3:
        raise ValueError("n >= 3 required")
    idx = g.index
    found = []

    def extend(path, banned):
        # banned: vertices adjacent to an interior path vertex (would chord)
        last = path[-1]
        if len(path) == n:
            if g.has_edge(last, path[0]):
                if idx(path[1]) < idx(path[-1]):
                    found.append(list(path))
            return
        for w in g.adjacent(last):
            if w in banned or w in path:
                continue
            if idx(w) <= idx(path[0]):
                continue
            # keep induced: w must not touch path[:-1] except for closing
            if any(g.has_edge(w, p) for p in path[:-1] if not (len(path) == n - 1 and p == path[0])):
                continue
            extend(path + [w], banned)

    for s in g.vertices:
        extend([s], set())
    return found


def graph_isomorphic(g1, g2):
    """One isomorphism g1 -> g2 as a dict, or None.  Deterministic."""
    if len(g1.vertices) != len(g2.vertices) or len(g1.edges) != len(g2.edges):
        return None
    deg1 = sorted(g1.degree(v) for v in g1.vertices)
    deg2 = sorted(g2.degree(v) for v in g2.vertices)
    if deg1 != deg2:
        return None
    # order g1 vertices to keep the partial map connected where possible
    order = sorted(g1.vertices, key=lambda v: (-g1.degree(v), g1.index(v)))
    mapping = {}
    used = set()

    def ok(v, w):
        if g1.degree(v) != g2.degree(w):
            return False
        for u in mapping:
            if g1.has_edge(v, u) != g2.has_edge(w, mapping[u]):
                return False
        return True

    def search(i):
        if i == len(order):
            return True
        v = order[i]
        for w in g2.vertices:
            if w in used or not ok(v, w):
                continue
            mapping[v] = w
            used.add(w)
            if search(i + 1):
                return True
            del mapping[v]
            used.remove(w)
        return False

    if search(0):
        return dict(mapping)
    return None


@dataclass
class CactusAnalysis:
    graph: SimplicialGraph
    is_cactus: bool
    is_special: bool = False
    cycles: list = field(default_factory=list)
    spine: SimplicialGraph = None
    joints: dict = None          # cycle index -> spine vertex
    vertex_map: dict = None      # graph vertex -> spine vertex (Psi)
    cactus_type: str = "not-applicable"
    notes: list = field(default_factory=list)


def _biconnected_components(g):
    """Edge sets of biconnected components (Hopcroft-Tarjan, iterative)."""
    disc, low = {}, {}
    comps = []
    stack = []
    timer = [0]

    for root in g.vertices:
        if root in disc:
            continue
        work = [(root, None, iter(g.adjacent(root)))]
        disc[root] = low[root] = timer[0]
        timer[0] += 1
        while work:
            v, parent, it = work[-1]
            advanced = False
            for w in it:
                if w not in disc:
                    stack.append(_norm_edge(v, w))
                    disc[w] = low[w] = timer[0]
                    timer[0] += 1
                    work.append((w, v, iter(g.adjacent(w))))
                    advanced = True
                    break
                elif w != parent and disc[w] < disc[v]:
                    stack.append(_norm_edge(v, w))
                    low[v] = min(low[v], disc[w])
            if advanced:
                continue
            work.pop()
            if work:
                u = work[-1][0]
                low[u] = min(low[u], low[v])
                if low[v] >= disc[u]:
                    comp = set()
                    while stack:
                        e = stack.pop()
                        comp.add(e)
                        if e == _norm_edge(u, v):
                            break
                    if comp:
                        comps.append(comp)
    return comps


def analyze_cactus(g):
    """Recognize a cactus, list its cycles and build the spine tree.

    The spine contracts each cycle to one vertex and keeps every
    non-cycle vertex verbatim (including valency-2 vertices on paths);
    type-S testing suppresses those afterwards.
    """
    if not g.is_connected():
        return CactusAnalysis(g, False, notes=["graph not connected"])
    comps = _biconnected_components(g)
    cycles = []
    for comp in comps:
        if len(comp) == 1:
            continue  # bridge
        vs = set()
        for e in comp:
            vs |= e
        # a biconnected component is a cycle iff |E| = |V| (all degrees 2)
        if len(comp) != len(vs):
            return CactusAnalysis(g, False, notes=["biconnected component is not a cycle"])
        cycles.append(Subgraph(g, vs, comp))
    cycles.sort(key=lambda c: min(g.index(v) for v in c.vertex_set))

    on_count = {v: 0 for v in g.vertices}
    for c in cycles:
        for v in c.vertex_set:
            on_count[v] += 1
    is_special = all(n <= 1 for n in on_count.values())

    # spine: union-find contraction of each cycle
    rep = {v: v for v in g.vertices}

    def find(v):
        while rep[v] != v:
            rep[v] = rep[rep[v]]
            v = rep[v]
        return v

    joint_names = {}
    for i, c in enumerate(cycles):
        verts = sorted(c.vertex_set, key=g.index)
        head = find(verts[0])
        for v in verts[1:]:
            rep[find(v)] = head
        joint_names[i] = head
    # resolve chains (overlapping cycles merge)
    vertex_map = {}
    for v in g.vertices:
        r = find(v)
        vertex_map[v] = "K:" + r
    spine_vertices = []
    seen = set()
    for v in g.vertices:
        sv = vertex_map[v]
        if sv not in seen:
            seen.add(sv)
            spine_vertices.append(sv)
    cycle_edges = set()
    for c in cycles:
        cycle_edges |= c.edge_set
    spine_edges = set()
    for e in g.edges:
        if e in cycle_edges:
            continue
        u, v = tuple(e)
        su, sv = vertex_map[u], vertex_map[v]
        if su != sv:
            spine_edges.add((su, sv))
    spine = SimplicialGraph(spine_vertices, spine_edges)
    joints = {i: vertex_map[joint_names[i]] for i in range(len(cycles))}

    analysis = CactusAnalysis(g, True, is_special=is_special, cycles=cycles,
                              spine=spine, joints=joints, vertex_map=vertex_map)
    if not is_special:
        analysis.cactus_type = "not-applicable"
        analysis.notes.append("cycles share vertices; type classification limited to special cacti")
        return analysis
    if not cycles:
        analysis.cactus_type = "not-applicable"
        analysis.notes.append("no cycles (tree)")
        return analysis

    joint_set = set(joints.values())
    # suppress valency-2 non-joint spine vertices (homeomorphism class)
    segment = True
    for sv in spine.vertices:
        d = spine.degree(sv)
        if d > 2:
            segment = False
        if d <= 1 and sv not in joint_set:
            segment = False  # a spine leaf that is not a joint
    analysis.cactus_type = "S" if segment else "M"
    redundant = [sv for sv in spine.vertices
                 if spine.degree(sv) == 2 and sv not in joint_set]
    if redundant:
        analysis.notes.append("redundant (valency-2 non-joint) spine vertices suppressed for typing: %d" % len(redundant))
    return analysis
