"""Complexes of join groups.

Vertices are maximal product subcomplexes (of a Salvetti complex or a
2-point configuration space); simplices record the maximal standard
products inside intersections, labelled by the assigned join group
F_r x F_s.  Groups are never materialized: every predicate is reduced
to a support/subgraph condition on labels.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations

from .graphs import Subgraph, core, detect_induced_cycles
from .products import (JoinSubgraph, ProductPair, intersect_products,
                       maximal_join_subgraphs, maximal_products_cactus)


def _qi_type(r, s):
    if r == 1 and s == 1:
        return "ZxZ"
    if r > 1 and s > 1:
        return "FxF"
    return "ZxF"


@dataclass(frozen=True)
class JoinLabel:
    kind: str                    # 'raag' | 'braid'
    raag: JoinSubgraph = None
    braid: ProductPair = None

    @property
    def ranks(self):
        if self.kind == "raag":
            return self.raag.ranks
        return self.braid.ranks

    @property
    def qi_type(self):
        return _qi_type(*self.ranks)

    def sides(self):
        """The two coordinate supports, in canonical/global order."""
        if self.kind == "raag":
            return (self.raag.side_a, self.raag.side_b)
        return (self.braid.first.vertex_set, self.braid.second.vertex_set)

    @property
    def support(self):
        a, b = self.sides()
        return a | b

    def contains(self, other):
        """Containment of labels; returns 'aligned', 'flipped' or None.

        Braid labels live in a global projection frame and are never
        compared across a flip.
        """
        if self.kind != other.kind:
            return None
        if self.kind == "braid":
            if (self.braid.first.contains(other.braid.first)
                    and self.braid.second.contains(other.braid.second)):
                return "aligned"
            return None
        sa, sb = self.raag.side_a, self.raag.side_b
        oa, ob = other.raag.side_a, other.raag.side_b
        if oa <= sa and ob <= sb:
            return "aligned"
        if oa <= sb and ob <= sa:
            return "flipped"
        return None

    def sort_key(self):
        if self.kind == "raag":
            return self.raag.sort_key()
        return self.braid.sort_key()

    def pretty(self):
        a, b = self.sides()
        return "{%s}x{%s}" % (",".join(sorted(a)), ",".join(sorted(b)))

    def __repr__(self):
        return self.pretty()


@dataclass(frozen=True)
class Simplex:
    sid: str
    verts: frozenset  # vertex ids
    label: JoinLabel

    @property
    def dim(self):
        return len(self.verts) - 1


class JoinComplex:
    """A finite complex of join groups.

    simplices include the 0-simplices (one per vertex); face_map wires
    every simplex of dimension >= 1 to its codimension-1 faces, with a
    signature per face relation: the pair (first coordinate equal?,
    second coordinate equal?) read in the simplex's own frame, plus the
    alignment of the containment.  Instances are produced by the
    builders below (see _build_complex).
    """

    kind: str
    vertex_ids: tuple
    vertex_label: dict
    simplices: list
    face_map: dict
    signatures: dict
    notes: list

    def simplex(self, sid):
        return self._by_id[sid]

    def simplices_on(self, verts):
        return list(self._by_verts.get(frozenset(verts), []))


def _build_complex(kind, vertex_labels, higher, notes=None, source_graph=None, cycles=None):
    jc = JoinComplex.__new__(JoinComplex)
    jc.kind = kind
    jc.notes = list(notes or [])
    jc.source_graph = source_graph
    jc.cycles = cycles
    labels_sorted = sorted(vertex_labels, key=lambda l: l.sort_key())
    jc.vertex_ids = tuple("u%d" % i for i in range(len(labels_sorted)))
    jc.vertex_label = dict(zip(jc.vertex_ids, labels_sorted))
    label_to_vid = {id(l): None for l in labels_sorted}
    key_to_vid = {}
    for vid in jc.vertex_ids:
        key_to_vid[jc.vertex_label[vid].sort_key()] = vid
    jc._key_to_vid = key_to_vid

    # assemble simplices: 0-simplices then the provided higher ones
    simplices = []
    for vid in jc.vertex_ids:
        simplices.append((frozenset((vid,)), jc.vertex_label[vid]))
    simplices.extend(higher)
    # deterministic ids
    simplices.sort(key=lambda t: (len(t[0]), sorted(t[0]), t[1].sort_key()))
    jc.simplices = []
    for i, (verts, label) in enumerate(simplices):
        jc.simplices.append(Simplex("s%d" % i, verts, label))
    jc._by_id = {s.sid: s for s in jc.simplices}
    jc._by_verts = {}
    for s in jc.simplices:
        jc._by_verts.setdefault(s.verts, []).append(s)

    # face wiring
    jc.face_map = {}
    jc.signatures = {}
    for s in jc.simplices:
        if s.dim == 0:
            jc.face_map[s.sid] = ()
            continue
        faces = []
        for drop in sorted(s.verts):
            fv = s.verts - {drop}
            cands = []
            for f in jc._by_verts.get(fv, []):
                align = f.label.contains(s.label)
                if align is not None:
                    cands.append((f, align))
            if len(cands) != 1:
                raise AssertionError(
                    "face of %s at %s is not unique: %d candidates"
                    % (s.sid, sorted(fv), len(cands)))
            f, align = cands[0]
            faces.append(f.sid)
            sa, sb = s.label.sides()
            fa, fb = f.label.sides()
            if align == "flipped":
                fa, fb = fb, fa
            jc.signatures[(s.sid, f.sid)] = ((sa == fa, sb == fb), align)
        jc.face_map[s.sid] = tuple(faces)
    return jc


def _finish_levels(vertex_labels, kind, span):
    """Level-by-level simplex discovery.

    span(subset of vertex indices) -> list of labels (may be several for
    braid multi-simplices); a subset is tried only when all its
    codim-1 subsets already span.
    """
    n = len(vertex_labels)
    spanning = {frozenset((i,)) for i in range(n)}
    higher = []
    size = 2
    current = [frozenset((i,)) for i in range(n)]
    while True:
        found_any = False
        tried = set()
        for subset in combinations(range(n), size):
            sub = frozenset(subset)
            if any(sub - {i} not in spanning for i in sub):
                continue
            labels = span(sub)
            if labels:
                spanning.add(sub)
                for lab in labels:
                    higher.append((sub, lab))
                found_any = True
        if not found_any:
            break
        size += 1
    return higher


def build_ri_raag(g):
    """Reduced intersection complex of the Salvetti complex of g."""
    joins = maximal_join_subgraphs(g)
    notes = []
    if len(joins) == 1:
        notes.append("trivial RI")
    edge_sets = [j.edge_pairs() for j in joins]

    def span(sub):
        it = iter(sub)
        acc = set(edge_sets[next(it)])
        for i in it:
            acc &= edge_sets[i]
        if not acc:
            return []
        # the common edges must form a biclique; reconstruct its sides
        verts = {x for e in acc for x in e}
        u, v = tuple(sorted(next(iter(acc))))
        side_u = {x for x in verts if frozenset((x, v)) in acc} | {u}
        side_v = {x for x in verts if frozenset((x, u)) in acc} | {v}
        if side_u & side_v:
            return []
        if frozenset(frozenset((x, y)) for x in side_u for y in side_v) != acc:
            return []
        return [JoinLabel("raag", raag=JoinSubgraph(side_u, side_v))]

    labels = [JoinLabel("raag", raag=j) for j in joins]

    def span_by_index(sub):
        return span(sub)

    higher_idx = _finish_levels(labels, "raag", span_by_index)
    # map index subsets to vertex ids after sorting: labels are already sorted
    jc = _assemble(g, "raag", labels, higher_idx, notes, cycles=None)
    if len({vid for s in jc.simplices for vid in s.verts}) and not _connected(jc):
        jc.notes.append("disconnected RI (unexpected for raag builds)")
    return jc


def _assemble(g, kind, labels, higher_idx, notes, cycles):
    ordered = sorted(range(len(labels)), key=lambda i: labels[i].sort_key())
    pos_of = {old: new for new, old in enumerate(ordered)}
    vlabels = [labels[i] for i in ordered]
    higher = []
    for sub, lab in higher_idx:
        verts = frozenset("u%d" % pos_of[i] for i in sub)
        higher.append((verts, lab))
    return _build_complex(kind, vlabels, higher, notes=notes, source_graph=g, cycles=cycles)


def build_ri_braid(analysis):
    """Reduced intersection complex of D2 of a special cactus."""
    pairs = maximal_products_cactus(analysis)
    if len(pairs) == 0:
        return _build_complex("braid", [], [], notes=["fewer than 2 cycles: empty complex"],
                              source_graph=analysis.graph, cycles=analysis.cycles)
    return build_ri_braid_from_pairs(analysis.graph, pairs, cycles=analysis.cycles)


def build_ri_braid_from_pairs(g, pairs, cycles=None):
    labels = [JoinLabel("braid", braid=p) for p in pairs]

    def span(sub):
        got = intersect_products([labels[i].braid for i in sub])
        return [JoinLabel("braid", braid=p) for p in got]

    higher_idx = _finish_levels(labels, "braid", span)
    return _assemble(g, "braid", labels, higher_idx, [], cycles)


def _connected(jc):
    vids = set(jc.vertex_ids)
    if not vids:
        return True
    adj = {v: set() for v in vids}
    for s in jc.simplices:
        if s.dim == 1:
            a, b = sorted(s.verts)
            adj[a].add(b)
            adj[b].add(a)
    start = next(iter(sorted(vids)))
    seen = {start}
    stack = [start]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return seen == vids


# --- structural analyses -------------------------------------------------

def skeleton_adjacency(jc):
    adj = {v: set() for v in jc.vertex_ids}
    for s in jc.simplices:
        if s.dim == 1:
            a, b = sorted(s.verts)
            adj[a].add(b)
            adj[b].add(a)
    return adj


def components_of(jc):
    adj = skeleton_adjacency(jc)
    rest = set(jc.vertex_ids)
    comps = []
    while rest:
        start = min(rest)
        seen = {start}
        stack = [start]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        rest -= seen
        comps.append(frozenset(seen))
    comps.sort(key=lambda c: sorted(c))
    return comps


def switch_map(jc):
    """The coordinate switch on a braid complex, as a vertex id map."""
    if jc.kind != "braid":
        raise ValueError("switch map applies to braid complexes")
    out = {}
    for vid in jc.vertex_ids:
        swapped = jc.vertex_label[vid].braid.swap()
        key = JoinLabel("braid", braid=swapped).sort_key()
        tgt = jc._key_to_vid.get(key)
        if tgt is None:
            raise AssertionError("complex is not switch-closed at %s" % vid)
        out[vid] = tgt
    return out


def components_and_switch(jc):
    """Components classified as M (switch-closed) or S (paired by switch)."""
    comps = components_of(jc)
    sw = switch_map(jc)
    comp_of = {}
    for i, c in enumerate(comps):
        for v in c:
            comp_of[v] = i
    report = []
    paired = {}
    for i, c in enumerate(comps):
        img = {comp_of[sw[v]] for v in c}
        if len(img) != 1:
            raise AssertionError("switch map does not permute components")
        j = img.pop()
        if j == i:
            report.append({"component": sorted(c), "kind": "M", "partner": i})
        else:
            report.append({"component": sorted(c), "kind": "S", "partner": j})
    return report


def vertex_classification(jc, g):
    """Per vertex: separating? and type-1/type-2 (raag complexes)."""
    if jc.kind != "raag":
        raise ValueError("vertex classification is defined for raag complexes")
    adj = skeleton_adjacency(jc)
    out = {}
    for vid in jc.vertex_ids:
        rest = set(jc.vertex_ids) - {vid}
        separating = False
        if rest:
            start = min(rest)
            seen = {start}
            stack = [start]
            while stack:
                for w in adj[stack.pop()]:
                    if w != vid and w not in seen:
                        seen.add(w)
                        stack.append(w)
            separating = seen != rest
        nb_support = set()
        for w in adj[vid]:
            nb_support |= jc.vertex_label[w].support
        generated = jc.vertex_label[vid].support <= nb_support
        out[vid] = {"separating": separating,
                    "type": 1 if (not separating and generated) else 2}
    return out


# --- validator ------------------------------------------------------------

def _label_intersection(l1, l2):
    """Join-label intersection of two labels, or None."""
    if l1.kind != l2.kind:
        return None
    if l1.kind == "braid":
        got = intersect_products([l1.braid, l2.braid])
        return got or None
    common = l1.raag.edge_pairs() & l2.raag.edge_pairs()
    if not common:
        return None
    verts = {x for e in common for x in e}
    u, v = tuple(sorted(next(iter(common))))
    side_u = {x for x in verts if frozenset((x, v)) in common} | {u}
    side_v = {x for x in verts if frozenset((x, u)) in common} | {v}
    if side_u & side_v:
        return None
    if frozenset(frozenset((x, y)) for x in side_u for y in side_v) != common:
        return None
    return [JoinSubgraph(side_u, side_v)]


def maximal_simplices(jc):
    """Simplices that are nobody's face."""
    face_ids = set()
    for s in jc.simplices:
        face_ids.update(jc.face_map.get(s.sid, ()))
    return [s for s in jc.simplices if s.sid not in face_ids]


def validate_cjoin(jc):
    """Check the label-level join-group complex axioms; violations as data."""
    violations = []

    # (i) face containment
    for s in jc.simplices:
        for fid in jc.face_map.get(s.sid, ()):
            f = jc._by_id[fid]
            if f.label.contains(s.label) is None:
                violations.append(("i", s.sid, fid))

    # (iv) no generator on both sides of any label
    for s in jc.simplices:
        a, b = s.label.sides()
        if a & b:
            violations.append(("iv", s.sid, sorted(a & b)))

    # (ii) labels intersecting in a join label must span a simplex
    for s, t in combinations(jc.simplices, 2):
        if s.verts == t.verts:
            continue
        inter = _label_intersection(s.label, t.label)
        if inter is None:
            continue
        union = s.verts | t.verts
        if not any(x.verts == union for x in jc._by_verts.get(union, [])):
            if not any(union <= x.verts for x in jc.simplices):
                violations.append(("ii", s.sid, t.sid))

    # (iii) distinct maximal simplices sharing a face: strict containment
    maxes = maximal_simplices(jc)
    for s, t in combinations(maxes, 2):
        shared = s.verts & t.verts
        if not shared:
            continue
        for f in jc.simplices:
            if f.verts <= shared:
                for m in (s, t):
                    align = f.label.contains(m.label)
                    if align is None:
                        continue
                    fa, fb = f.label.sides()
                    ma, mb = m.label.sides()
                    if align == "flipped":
                        ma, mb = mb, ma
                    if ma == fa and mb == fb:
                        violations.append(("iii", m.sid, f.sid))

    # (v) families with common nontrivial intersection: the full subcomplex
    # spanned by their vertices is connected and lies in a closed star
    adj = skeleton_adjacency(jc)
    gens = _generator_families(jc)
    for gen, family in gens:
        if len(family) < 2:
            continue
        union = set()
        for s in family:
            union |= s.verts
        if not _induced_connected(union, adj):
            violations.append(("v-connected", str(gen), sorted(union)))
            continue
        in_star = any(union <= ({u} | adj[u]) for u in jc.vertex_ids)
        if not in_star:
            violations.append(("v-star", str(gen), sorted(union)))

    return violations


def _induced_connected(verts, adj):
    verts = set(verts)
    if not verts:
        return True
    start = min(verts)
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for w in adj[x]:
            if w in verts and w not in seen:
                seen.add(w)
                stack.append(w)
    return seen == verts


def _generator_families(jc):
    """Families of simplices whose assigned groups share an element.

    raag: one family per generator (special subgroups intersect in the
    special subgroup of the common support).  braid: one family per
    (cycle, coordinate) pair, cycles taken as induced cycles of the
    source graph; the global frame keeps coordinates comparable.
    """
    fams = []
    if jc.kind == "raag":
        gens = set()
        for s in jc.simplices:
            gens |= s.label.support
        for x in sorted(gens):
            fam = [s for s in jc.simplices if x in s.label.support]
            fams.append((x, fam))
        return fams
    g = jc.source_graph
    cyc = []
    if jc.cycles is not None:
        cyc = list(jc.cycles)
    elif g is not None:
        for n in range(3, len(g.vertices) + 1):
            for c in detect_induced_cycles(g, n):
                vs = set(c)
                es = {frozenset((c[i], c[(i + 1) % len(c)])) for i in range(len(c))}
                cyc.append(Subgraph(g, vs, es))
    # a common nontrivial element needs a cycle in the common part of one
    # coordinate AND a common position (vertex) for the other strand
    verts = sorted(g.vertices) if g is not None else []
    for ci, c in enumerate(cyc):
        for pos in (0, 1):
            for w in verts:
                if w in c.vertex_set:
                    continue
                fam = []
                for s in jc.simplices:
                    coord = s.label.braid.first if pos == 0 else s.label.braid.second
                    other = s.label.braid.second if pos == 0 else s.label.braid.first
                    if coord.contains(c) and w in other.vertex_set:
                        fam.append(s)
                if len(fam) >= 2:
                    fams.append(("cycle%d/pr%d/at:%s" % (ci, pos + 1, w), fam))
    return fams


# --- exports ---------------------------------------------------------------

def jc_to_json(jc):
    return json.dumps({
        "kind": jc.kind,
        "vertices": [{"id": vid,
                      "label": jc.vertex_label[vid].pretty(),
                      "ranks": list(jc.vertex_label[vid].ranks),
                      "qi_type": jc.vertex_label[vid].qi_type}
                     for vid in jc.vertex_ids],
        "simplices": [{"verts": sorted(s.verts), "label": s.label.pretty(),
                       "ranks": list(s.label.ranks)}
                      for s in jc.simplices if s.dim >= 1],
        "faces": [{"simplex": sid, "face": fid,
                   "sig": list(jc.signatures[(sid, fid)][0]),
                   "align": jc.signatures[(sid, fid)][1]}
                  for sid in sorted(jc.face_map)
                  for fid in jc.face_map[sid]],
        "notes": jc.notes,
    }, indent=2, sort_keys=True)


_QI_COLOR = {"ZxZ": "gray", "ZxF": "lightblue", "FxF": "salmon"}


def jc_to_dot(jc):
    lines = ["graph ri {"]
    for vid in jc.vertex_ids:
        lab = jc.vertex_label[vid]
        lines.append('  "%s" [label="%s\\n%s", style=filled, fillcolor=%s];'
                     % (vid, vid, lab.pretty(), _QI_COLOR[lab.qi_type]))
    for s in jc.simplices:
        if s.dim == 1:
            a, b = sorted(s.verts)
            lines.append('  "%s" -- "%s" [label="%s"];' % (a, b, s.label.pretty()))
    lines.append("}")
    return "\n".join(lines) + "\n"


def ri_betti1(jc):
    """First Betti number of the underlying complex (2-skeleton suffices)."""
    from .complexes import _int_rank
    edges = sorted({tuple(sorted(s.verts)) for s in jc.simplices if s.dim == 1})
    eindex = {e: i for i, e in enumerate(edges)}
    tris = sorted({tuple(sorted(s.verts)) for s in jc.simplices if s.dim == 2})
    rows = []
    for (a, b, c) in tris:
        row = [0] * len(edges)
        row[eindex[(a, b)]] += 1
        row[eindex[(b, c)]] += 1
        row[eindex[(a, c)]] -= 1
        rows.append(row)
    rank = _int_rank(rows)
    ncomp = len(components_of(jc))
    return len(edges) - len(jc.vertex_ids) + ncomp - rank
