"""Combinatorial square complexes.

A square complex is given by vertices, edges and squares.  A square is a
closed path of four directed edges; storing directions lets the same
machinery handle honest gluings (tori, self-identified squares) and not
just subcomplexes of products.  D2(G) construction, links/NPC checks,
hyperplane classes and exact first Betti numbers live here.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field


@dataclass(frozen=True)
class DirEdge:
    edge: str
    reverse: bool  # False: u -> v, True: v -> u


class SquareComplex:
    """vertices: list of ids; edges: id -> (u, v); squares: 4 directed edges."""

    def __init__(self, vertices, edges, squares, labels=None, notes=None):
        self.vertices = tuple(vertices)
        self._vindex = {v: i for i, v in enumerate(self.vertices)}
        self.edges = dict(edges)
        self.edge_ids = tuple(sorted(self.edges))
        squares_norm = []
        for sq in squares:
            path = tuple(DirEdge(*d) if not isinstance(d, DirEdge) else d for d in sq)
            if len(path) != 4:
                raise ValueError("square must have 4 edges")
            for i in range(4):
                if self.head(path[i]) != self.tail(path[(i + 1) % 4]):
                    raise ValueError("square boundary is not a closed path: %r" % (path,))
            squares_norm.append(self._canon_square(path))
        self.squares = tuple(sorted(set(squares_norm),
                                    key=lambda p: tuple((d.edge, d.reverse) for d in p)))
        self.labels = labels or {}
        self.notes = list(notes or [])

    def tail(self, d):
        u, v = self.edges[d.edge]
        return v if d.reverse else u

    def head(self, d):
        u, v = self.edges[d.edge]
        return u if d.reverse else v

    def _canon_square(self, path):
        """Canonical representative among the 8 rotations/reflections."""
        cands = []
        for r in range(4):
            rot = path[r:] + path[:r]
            cands.append(rot)
        rev = tuple(DirEdge(d.edge, not d.reverse) for d in reversed(path))
        for r in range(4):
            cands.append(rev[r:] + rev[:r])
        return min(cands, key=lambda p: tuple((d.edge, d.reverse) for d in p))

    # --- derived structure ---------------------------------------------

    def incident_edges(self, v):
        return [e for e, (a, b) in self.edges.items() if v in (a, b)]

    def components(self):
        adj = {v: set() for v in self.vertices}
        for a, b in self.edges.values():
            adj[a].add(b)
            adj[b].add(a)
        rest = set(self.vertices)
        comps = []
        while rest:
            start = min(rest, key=self._vindex.__getitem__)
            seen = {start}
            stack = [start]
            while stack:
                for w in adj[stack.pop()]:
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
            rest -= seen
            comps.append(seen)
        return comps

    def link(self, v):
        """Link graph at v: vertices are edge-ends, edges are square corners."""
        ends = []
        for e, (a, b) in sorted(self.edges.items()):
            if a == v:
                ends.append((e, 0))
            if b == v:
                ends.append((e, 1))
        corners = []
        for sq in self.squares:
            for i in range(4):
                d_in, d_out = sq[i], sq[(i + 1) % 4]
                if self.head(d_in) == v:
                    end_in = (d_in.edge, 0 if d_in.reverse else 1)
                    end_out = (d_out.edge, 1 if d_out.reverse else 0)
                    corners.append((end_in, end_out))
        return ends, corners

    # --- exports --------------------------------------------------------

    def to_json(self):
        return json.dumps({
            "vertices": list(self.vertices),
            "edges": [[u, v, e] for e, (u, v) in sorted(self.edges.items())],
            "squares": [[d.edge for d in sq] for sq in self.squares],
        }, indent=2, sort_keys=True)

    def to_dot(self):
        lines = ["graph skeleton {"]
        for v in self.vertices:
            lines.append('  "%s";' % (v,))
        for e, (u, v) in sorted(self.edges.items()):
            lines.append('  "%s" -- "%s" [label="%s"];' % (u, v, e))
        lines.append("}")
        return "\n".join(lines) + "\n"


@dataclass
class Hyperplane:
    edge_class: frozenset
    flags: frozenset  # subset of {self-intersecting, self-osculating, one-sided}


def _pair_name(a, b):
    return "(%s,%s)" % (a, b)


def build_d2(g):
    """Ordered discrete configuration space of two points on a graph.

    Cells are ordered pairs of disjoint closed cells of g; records the
    two projection labellings on every cell.
    """
    if len(g.vertices) < 2:
        raise ValueError("build_d2 needs at least 2 vertices")
    verts = []
    labels = {}
    for v in g.vertices:
        for w in g.vertices:
            if v != w:
                name = _pair_name(v, w)
                verts.append(name)
                labels[name] = (("vertex", v), ("vertex", w))
    edge_list = g.sorted_edges()

    def ename(u, v):
        return "%s-%s" % (u, v)

    edges = {}
    for (u, v) in edge_list:
        for x in g.vertices:
            if x in (u, v):
                continue
            e1 = _pair_name(ename(u, v), x)
            edges[e1] = (_pair_name(u, x), _pair_name(v, x))
            labels[e1] = (("edge", (u, v)), ("vertex", x))
            e2 = _pair_name(x, ename(u, v))
            edges[e2] = (_pair_name(x, u), _pair_name(x, v))
            labels[e2] = (("vertex", x), ("edge", (u, v)))
    squares = []
    for i, (u, v) in enumerate(edge_list):
        for (x, y) in edge_list:
            if (x, y) == (u, v):
                continue
            if {u, v} & {x, y}:
                continue
            # corners (u,x) (v,x) (v,y) (u,y)
            d0 = DirEdge(_pair_name(ename(u, v), x), False)   # (u,x)->(v,x)
            d1 = DirEdge(_pair_name(v, ename(x, y)), False)   # (v,x)->(v,y)
            d2 = DirEdge(_pair_name(ename(u, v), y), True)    # (v,y)->(u,y)
            d3 = DirEdge(_pair_name(u, ename(x, y)), True)    # (u,y)->(u,x)
            squares.append((d0, d1, d2, d3))
            labels[frozenset(d.edge for d in (d0, d1, d2, d3))] = (("edge", (u, v)), ("edge", (x, y)))
    c = SquareComplex(verts, edges, squares, labels=labels)
    if len(c.components()) > 1:
        c.notes.append("disconnected")
    return c


def npc_check(c):
    """Check every vertex link is a simplicial graph with no triangle."""
    violations = []
    for v in c.vertices:
        ends, corners = c.link(v)
        seen = set()
        adj = {e: set() for e in ends}
        for a, b in corners:
            if a == b:
                violations.append((v, "loop in link at end %r" % (a,)))
                continue
            key = frozenset((a, b))
            if key in seen:
                violations.append((v, "double corner between %r and %r" % (a, b)))
                continue
            seen.add(key)
            adj[a].add(b)
            adj[b].add(a)
        for a in ends:
            for b in adj[a]:
                common = adj[a] & adj[b]
                if common:
                    violations.append((v, "triangle in link through %r %r" % (a, b)))
        # deduplicate triangle reports per vertex
    dedup = []
    seen_v = set()
    for item in violations:
        k = (item[0], item[1])
        if k not in seen_v:
            seen_v.add(k)
            dedup.append(item)
    return dedup


class _UF:
    def __init__(self, items):
        self.p = {x: x for x in items}

    def find(self, x):
        while self.p[x] != x:
            self.p[x] = self.p[self.p[x]]
            x = self.p[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.p[ra] = rb


def hyperplanes(c):
    """Dual hyperplane classes with pathology flags."""
    uf = _UF(c.edge_ids)
    # parity union-find on directed edges for one-sidedness
    dmap = {}
    for e in c.edge_ids:
        dmap[(e, False)] = (e, False)
        dmap[(e, True)] = (e, True)
    duf = _UF(list(dmap))

    for sq in c.squares:
        d0, d1, d2, d3 = sq
        uf.union(d0.edge, d2.edge)
        uf.union(d1.edge, d3.edge)
        # parallelism identifies d0 with the reverse of d2 (and d1 with rev d3)
        duf.union((d0.edge, d0.reverse), (d2.edge, not d2.reverse))
        duf.union((d1.edge, d1.reverse), (d3.edge, not d3.reverse))

    classes = {}
    for e in c.edge_ids:
        classes.setdefault(uf.find(e), set()).add(e)

    square_edge_sets = [frozenset(d.edge for d in sq) for sq in c.squares]

    out = []
    for root in sorted(classes):
        edge_class = classes[root]
        flags = set()
        for sq in c.squares:
            if uf.find(sq[0].edge) == root and uf.find(sq[1].edge) == root:
                flags.add("self-intersecting")
        # self-osculating: two distinct class edges share a vertex, no common square
        members = sorted(edge_class)
        for i in range(len(members)):
            for j in range(i + 1, len(members)):
                a, b = members[i], members[j]
                if set(c.edges[a]) & set(c.edges[b]):
                    if not any(a in s and b in s for s in square_edge_sets):
                        flags.add("self-osculating")
        for e in edge_class:
            if duf.find((e, False)) == duf.find((e, True)):
                flags.add("one-sided")
                break
        out.append(Hyperplane(frozenset(edge_class), frozenset(flags)))
    return out


def _int_rank(rows):
    """Rank of an integer matrix, fraction-free (Bareiss) elimination."""
    m = [list(r) for r in rows if any(r)]
    if not m:
        return 0
    cols = len(m[0])
    rank = 0
    prev = 1
    r = 0
    for c in range(cols):
        piv = None
        for i in range(r, len(m)):
            if m[i][c]:
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(r + 1, len(m)):
            for j in range(c + 1, cols):
                m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) // prev
            m[i][c] = 0
        prev = m[r][c]
        r += 1
        rank += 1
        if r == len(m):
            break
    return rank


def betti1(c):
    """First rational Betti number: |E| - |V| + 1 - rank(d2), largest component."""
    comps = c.components()
    flagged = len(comps) > 1
    comp = max(comps, key=len) if comps else set()
    edge_in = {e for e, (u, v) in c.edges.items() if u in comp}
    eindex = {e: i for i, e in enumerate(sorted(edge_in))}
    rows = []
    for sq in c.squares:
        if sq[0].edge not in eindex:
            continue
        row = [0] * len(eindex)
        for d in sq:
            row[eindex[d.edge]] += -1 if d.reverse else 1
        rows.append(row)
    rank = _int_rank(rows)
    b1 = len(edge_in) - len(comp) + 1 - rank
    if flagged and "disconnected" not in c.notes:
        c.notes.append("disconnected")
    return b1


def d2_involution(c):
    """The order-2 swap (v,w) -> (w,v) on a build_d2 output, as a vertex map."""
    out = {}
    for name in c.vertices:
        first, second = c.labels[name]
        out[name] = _pair_name(second[1], first[1])
    return out
