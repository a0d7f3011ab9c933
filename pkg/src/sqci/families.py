"""Constructors for the graph families used throughout: paths, cycles,
trees, Petersen, and the cactus families built from cycles attached to
star or path trees."""

from __future__ import annotations

from .graphs import SimplicialGraph


def _graph(vertices, edges):
    return SimplicialGraph(vertices, [frozenset(e) for e in edges])


def path_graph(n, prefix="a"):
    vs = ["%s%d" % (prefix, i) for i in range(n)]
    return _graph(vs, [(vs[i], vs[i + 1]) for i in range(n - 1)])


def cycle_graph(n, prefix="a"):
    if n < 3:
        raise ValueError("cycle needs >= 3 vertices")
    vs = ["%s%d" % (prefix, i) for i in range(n)]
    return _graph(vs, [(vs[i], vs[(i + 1) % n]) for i in range(n)])


def star_graph(k, center="c", prefix="a"):
    vs = [center] + ["%s%d" % (prefix, i) for i in range(k)]
    return _graph(vs, [(center, v) for v in vs[1:]])


def complete_bipartite(m, n):
    a = ["a%d" % i for i in range(m)]
    b = ["b%d" % i for i in range(n)]
    return _graph(a + b, [(x, y) for x in a for y in b])


def spider(legs, leg_length=2, center="c"):
    """Tree: `legs` paths of length leg_length glued at a center."""
    vs, es = [center], []
    for i in range(legs):
        prev = center
        for j in range(leg_length):
            v = "l%d_%d" % (i, j)
            vs.append(v)
            es.append((prev, v))
            prev = v
    return _graph(vs, es)


def petersen_graph():
    outer = ["o%d" % i for i in range(5)]
    inner = ["i%d" % i for i in range(5)]
    es = [(outer[i], outer[(i + 1) % 5]) for i in range(5)]
    es += [(inner[i], inner[(i + 2) % 5]) for i in range(5)]
    es += [(outer[i], inner[i]) for i in range(5)]
    return _graph(outer + inner, es)


def cube_graph():
    """The 3-cube: two nested 4-cycles joined by a perfect matching."""
    outer = ["p%d" % i for i in range(4)]
    inner = ["q%d" % i for i in range(4)]
    es = [(outer[i], outer[(i + 1) % 4]) for i in range(4)]
    es += [(inner[i], inner[(i + 1) % 4]) for i in range(4)]
    es += [(outer[i], inner[i]) for i in range(4)]
    return _graph(outer + inner, es)


def _attach_cycle(vs, es, anchor, name, length, by_edge=True):
    """Attach a cycle; by_edge=True hangs it off anchor by a new edge,
    otherwise the anchor itself is a vertex of the cycle."""
    cyc = ["%s_%d" % (name, i) for i in range(length if by_edge else length - 1)]
    vs.extend(cyc)
    ring = cyc if by_edge else [anchor] + cyc
    es.extend((ring[i], ring[(i + 1) % len(ring)]) for i in range(len(ring)))
    if by_edge:
        es.append((anchor, cyc[0]))


def o_k(k, cycle_length=3):
    """k cycles hung by edges off the leaves of a k-star (spine = star)."""
    if k < 3:
        raise ValueError("o_k needs k >= 3")
    vs, es = ["c"], []
    for i in range(k):
        leaf = "s%d" % i
        vs.append(leaf)
        es.append(("c", leaf))
        # leaf is a vertex of the attached cycle
        _attach_cycle(vs, es, leaf, "a%d" % (i + 1), cycle_length, by_edge=False)
    return _graph(vs, es)


def chain_cactus(lengths):
    """Cycles in a row, consecutive ones joined by a bridge edge."""
    vs, es = [], []
    anchors = []
    for i, ln in enumerate(lengths):
        cyc = ["a%d_%d" % (i + 1, j) for j in range(ln)]
        vs.extend(cyc)
        es.extend((cyc[j], cyc[(j + 1) % ln]) for j in range(ln))
        anchors.append(cyc[0])
    for i in range(len(anchors) - 1):
        es.append((anchors[i], anchors[i + 1]))
    return _graph(vs, es)


def o_prime_4(cycle_length=3):
    """Two cycles hung off each end of an edge (spine = double star)."""
    vs, es = ["x", "y"], [("x", "y")]
    for i, anchor in ((1, "x"), (2, "x"), (3, "y"), (4, "y")):
        _attach_cycle(vs, es, anchor, "a%d" % i, cycle_length, by_edge=True)
    return _graph(vs, es)


def o_prime_4_n(n, cycle_length=3):
    """o_prime_4 with the middle edge subdivided n times and a cycle
    through each subdivision vertex."""
    vs, es = ["x", "y"], []
    mids = ["m%d" % (i + 1) for i in range(n)]
    vs.extend(mids)
    chain = ["x"] + mids + ["y"]
    es.extend((chain[i], chain[i + 1]) for i in range(len(chain) - 1))
    for i, anchor in ((1, "x"), (2, "x"), (3, "y"), (4, "y")):
        _attach_cycle(vs, es, anchor, "a%d" % i, cycle_length, by_edge=True)
    for i, m in enumerate(mids):
        _attach_cycle(vs, es, m, "a%d" % (5 + i), cycle_length, by_edge=False)
    return _graph(vs, es)


def tripod():
    return star_graph(3, center="c", prefix="t")
