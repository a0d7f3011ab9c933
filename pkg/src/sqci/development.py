"""Finite truncations of developments of complexes of join groups.

Two constructions:

* ball_raag - a ball of the development of RI(S(g)) over the Artin
  group: enumerate group elements of bounded join length (and bounded
  word length), attach one copy of RI per element and glue simplices
  whose labels generate the same coset.
* development_gog - a truncated Bass-Serre tree for a one-dimensional
  complex of join groups on the braid side, with vertex groups given
  as pairs of free groups over per-coordinate cycle alphabets.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .joincomplex import build_ri_raag, vertex_classification
from .words import coset_key, join_length, normal_form, word_to_text

DEFAULT_ELEMENT_CAP = 20000


@dataclass
class DevelopmentBall:
    base: object                 # JoinComplex
    radius: int
    word_bound: int
    construction: str            # "ball_raag" or "gog"
    vertices: list               # glued vertex ids
    vertex_fiber: dict           # glued vid -> base vertex id
    vertex_key: dict             # glued vid -> coset key (printable)
    edges: list                  # (glued vid, glued vid, base simplex id)
    simplices: list              # (tuple of glued vids, base simplex id)
    boundary_mark: set           # glued vids with incomplete neighbor data
    notes: list = field(default_factory=list)

    def interior(self):
        return [v for v in self.vertices if v not in self.boundary_mark]

    def skeleton_betti1(self):
        comp = _skeleton_components(self)
        return len(self.edges) - len(self.vertices) + len(comp)


def _skeleton_components(ball):
    adj = {v: set() for v in ball.vertices}
    for a, b, _ in ball.edges:
        adj[a].add(b)
        adj[b].add(a)
    seen = set()
    comps = []
    for v in ball.vertices:
        if v in seen:
            continue
        stack, comp = [v], set()
        while stack:
            x = stack.pop()
            if x in comp:
                continue
            comp.add(x)
            stack.extend(adj[x] - comp)
        seen |= comp
        comps.append(comp)
    return comps


def _cayley_ball(g, word_bound, cap):
    """All normal forms of word length <= word_bound, BFS by length."""
    gens = [(v, s) for v in sorted(g.vertices) for s in (1, -1)]
    seen = {(): 0}
    frontier = [()]
    for _ in range(word_bound):
        nxt = []
        for w in frontier:
            for let in gens:
                nf = normal_form(g, w + (let,))
                if nf not in seen:
                    seen[nf] = len(nf)
                    nxt.append(nf)
                    if len(seen) > cap:
                        raise ValueError(
                            "element cap exceeded: more than %d elements in the "
                            "word-length-%d ball" % (cap, word_bound))
        frontier = nxt
    return seen


def ball_raag(g, radius, word_bound, cap=DEFAULT_ELEMENT_CAP):
    """Ball of the development of RI(S(g)), gluing one copy per group
    element of join length <= radius, word length <= word_bound."""
    if radius < 0:
        raise ValueError("radius must be >= 0")
    jc = build_ri_raag(g)
    ball_elts = _cayley_ball(g, word_bound, cap)
    elements = {}  # nf -> join length
    for nf in ball_elts:
        try:
            jl, _ = join_length(g, nf, max_depth=radius if radius else 1)
        except RuntimeError:
            continue
        if jl <= radius:
            elements[nf] = jl

    vid_of = {}        # (coset key, base vid) -> glued vid
    vertex_min_jl = {}
    vertex_min_len = {}
    vertices = []
    vertex_fiber = {}
    vertex_key = {}

    def glued_vertex(h, jl, base_vid):
        key = coset_key(g, h, jc.vertex_label[base_vid].support)
        k = (key, base_vid)
        if k not in vid_of:
            gv = "x%d" % len(vertices)
            vid_of[k] = gv
            vertices.append(gv)
            vertex_fiber[gv] = base_vid
            vertex_key[gv] = word_to_text(key)
            vertex_min_jl[gv] = jl
            vertex_min_len[gv] = len(h)
        else:
            gv = vid_of[k]
            vertex_min_jl[gv] = min(vertex_min_jl[gv], jl)
            vertex_min_len[gv] = min(vertex_min_len[gv], len(h))
        return gv

    edge_seen = {}
    simplex_seen = {}
    edges = []
    simplices = []
    for h, jl in sorted(elements.items()):
        gvs = {bv: glued_vertex(h, jl, bv) for bv in jc.vertex_ids}
        for s in jc.simplices:
            if s.dim == 0:
                continue
            skey = (coset_key(g, h, s.label.support), s.sid)
            if skey in simplex_seen:
                continue
            simplex_seen[skey] = True
            verts = tuple(sorted(gvs[bv] for bv in s.verts))
            simplices.append((verts, s.sid))
            if s.dim == 1:
                edges.append((verts[0], verts[1], s.sid))

    boundary = set()
    for gv in vertices:
        if vertex_min_jl[gv] > radius - 1:
            boundary.add(gv)
        elif vertex_min_len[gv] >= word_bound and word_bound > 0:
            boundary.add(gv)
    if radius == 0:
        # a single copy: nothing beyond it is claimed complete
        boundary = set(vertices)

    notes = ["%d group elements glued" % len(elements)]
    return DevelopmentBall(jc, radius, word_bound, "ball_raag",
                           vertices, vertex_fiber, vertex_key,
                           edges, simplices, boundary, notes)


# ---------------------------------------------------------------------------
# graph-of-groups development (braid side, dimension one)

def _free_reduce(word):
    out = []
    for let in word:
        if out and out[-1] == (let[0], -let[1]):
            out.pop()
        else:
            out.append(let)
    return tuple(out)


def _strip_suffix(word, alphabet):
    """Coset key of word modulo the free factor on alphabet."""
    out = list(word)
    while out and out[-1][0] in alphabet:
        out.pop()
    return tuple(out)


def _coord_cycles(jc, sub):
    """Keys of the graph's cycles lying inside the coordinate sub."""
    return tuple(c.key() for c in jc.cycles if c.vertex_set <= sub.vertex_set)


def _pair_elements(alpha1, alpha2, word_bound):
    """Pairs of reduced free words with total length <= word_bound."""
    def words(alpha, bound):
        out = [()]
        frontier = [()]
        for _ in range(bound):
            nxt = []
            for w in frontier:
                for c in alpha:
                    for s in (1, -1):
                        r = _free_reduce(w + ((c, s),))
                        if len(r) > len(w):
                            nxt.append(r)
            out.extend(nxt)
            frontier = nxt
        return out

    pairs = []
    for w1 in words(alpha1, word_bound):
        for w2 in words(alpha2, word_bound - len(w1)):
            pairs.append((w1, w2))
    return pairs


def development_gog(jc, depth, word_bound, cap=DEFAULT_ELEMENT_CAP):
    """Truncated Bass-Serre development of a 1-dimensional braid complex."""
    if jc.kind != "braid":
        raise ValueError("development_gog expects a braid join complex")
    if any(s.dim >= 2 for s in jc.simplices):
        raise ValueError("complex has 2-simplices; two-dimensional braid "
                         "developments are out of scope (use the complex "
                         "itself, not a development)")
    if depth < 0:
        raise ValueError("depth must be >= 0")
    if jc.cycles is None:
        raise ValueError("braid complex lacks cycle data")

    # incident edges per base vertex
    incident = {v: [] for v in jc.vertex_ids}
    for s in jc.simplices:
        if s.dim == 1:
            a, b = sorted(s.verts)
            incident[a].append((s, b))
            incident[b].append((s, a))

    def edge_cosets(base_v, s):
        """Distinct coset keys of the edge group inside the vertex group."""
        vlab = jc.vertex_label[base_v]
        a1 = _coord_cycles(jc, vlab.braid.first)
        a2 = _coord_cycles(jc, vlab.braid.second)
        b1 = set(_coord_cycles(jc, s.label.braid.first))
        b2 = set(_coord_cycles(jc, s.label.braid.second))
        keys = []
        seen = set()
        for w1, w2 in _pair_elements(a1, a2, word_bound):
            k = (_strip_suffix(w1, b1), _strip_suffix(w2, b2))
            if k not in seen:
                seen.add(k)
                keys.append(k)
        return keys

    base0 = sorted(jc.vertex_ids)[0]
    vertices = ["x0"]
    vertex_fiber = {"x0": base0}
    vertex_key = {"x0": "()"}
    vertex_depth = {"x0": 0}
    edges = []
    simplices = []
    frontier = [("x0", None)]  # (glued vid, edge sid toward parent)
    for d in range(depth):
        nxt = []
        for gv, parent_edge in frontier:
            bv = vertex_fiber[gv]
            for s, other in incident[bv]:
                for k in edge_cosets(bv, s):
                    if s.sid == parent_edge and k == ((), ()):
                        continue  # the coset leading back to the parent
                    nv = "x%d" % len(vertices)
                    vertices.append(nv)
                    vertex_fiber[nv] = other
                    vertex_key[nv] = repr(k)
                    vertex_depth[nv] = d + 1
                    edges.append((gv, nv, s.sid))
                    simplices.append(((gv, nv), s.sid))
                    nxt.append((nv, s.sid))
                    if len(vertices) > cap:
                        raise ValueError("element cap exceeded at depth %d" % (d + 1))
        frontier = nxt

    boundary = {v for v in vertices if vertex_depth[v] == depth}
    if depth == 0:
        boundary = set(vertices)
    notes = ["truncated Bass-Serre development, %d vertices" % len(vertices)]
    return DevelopmentBall(jc, depth, word_bound, "gog",
                           vertices, vertex_fiber, vertex_key,
                           edges, simplices, boundary, notes)


def check_local_pattern(ball, g=None):
    """Verify the separating-vertex pattern at interior vertices and that
    the projection to the base preserves labels.  Returns a list of
    violation strings (empty = pass)."""
    report = []
    jc = ball.base
    for verts, sid in ball.simplices:
        fib = {ball.vertex_fiber[v] for v in verts}
        if fib != set(jc.simplex(sid).verts):
            report.append("projection breaks simplex %s" % sid)

    if ball.construction != "ball_raag":
        return report  # cut-vertex pattern is a statement about raag balls

    if g is None:
        g = jc.source_graph
    classes = vertex_classification(jc, g)
    adj = {v: set() for v in ball.vertices}
    for a, b, _ in ball.edges:
        adj[a].add(b)
        adj[b].add(a)

    for gv in ball.interior():
        base_v = ball.vertex_fiber[gv]
        nbs = adj[gv]
        if len(nbs) <= 1:
            continue
        # is gv a cut vertex of the truncation?
        start = next(iter(nbs))
        comp = {start}
        stack = [start]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y != gv and y not in comp:
                    comp.add(y)
                    stack.append(y)
        cut = not nbs <= comp
        typ = classes[base_v]["type"]
        if typ == 2 and not cut:
            report.append("interior vertex %s over %s (type-2) is not a cut "
                          "vertex" % (gv, base_v))
        if typ == 1 and cut:
            report.append("interior vertex %s over %s (type-1) is a cut "
                          "vertex" % (gv, base_v))
    return report
