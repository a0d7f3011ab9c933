from conftest import load

from sqci.families import (chain_cactus, cycle_graph, o_k, o_prime_4,
                           path_graph, petersen_graph, tripod)
from sqci.graphs import (analyze_cactus, core, graph_isomorphic,
                         is_triangle_free, parse_graph, serialize_graph)


def test_parse_serialize_round_trip():
    g = load("o_prime_4")
    text = serialize_graph(g)
    g2 = parse_graph(text)
    assert g2.vertices == g.vertices
    assert g2.edges == g.edges
    assert serialize_graph(g2) == text


def test_core_deletes_leaves_to_fixed_point():
    # triangle with a pendant path: the path is pruned, the cycle stays
    g = parse_graph("v a\nv b\nv c\nv p\nv q\n"
                    "e a b\ne b c\ne c a\ne a p\ne p q\n")
    c = core(g.full_subgraph())
    assert c.vertex_set == {"a", "b", "c"}
    # a leafless graph is its own core
    g2 = o_k(3)
    assert core(g2.full_subgraph()).vertex_set == set(g2.vertices)


def test_triangle_free():
    assert is_triangle_free(path_graph(4))
    assert is_triangle_free(cycle_graph(5))
    assert not is_triangle_free(cycle_graph(3))


def test_graph_isomorphic_basic():
    assert graph_isomorphic(cycle_graph(5), cycle_graph(5, prefix="b"))
    assert not graph_isomorphic(cycle_graph(5), cycle_graph(6))
    assert not graph_isomorphic(path_graph(4), cycle_graph(4))
    assert graph_isomorphic(petersen_graph(), petersen_graph())


def test_cactus_analysis_types():
    an = analyze_cactus(o_k(3))
    assert an.is_special and an.cactus_type == "M"
    assert len(an.cycles) == 3
    an = analyze_cactus(chain_cactus([3, 3, 3]))
    assert an.is_special and an.cactus_type == "S"
    an = analyze_cactus(o_prime_4())
    assert an.is_special and an.cactus_type == "M"
    an = analyze_cactus(tripod())
    assert not an.is_special or not an.cycles  # trees carry no cycles


def test_spine_contracts_cycles():
    an = analyze_cactus(o_k(4))
    # spine of O_4 is a star with 4 joint leaves
    deg = {v: len(an.spine.adjacent(v)) for v in an.spine.vertices}
    assert sorted(deg.values()) == [1, 1, 1, 1, 4]
    joints = set(an.joints.values())
    assert all(deg[j] == 1 for j in joints)


def test_non_special_cactus_detected():
    # two triangles sharing a vertex: a cactus but not special
    g = parse_graph("""
v x
v p0
v p1
v q0
v q1
e x p0
e x p1
e p0 p1
e x q0
e x q1
e q0 q1
""")
    an = analyze_cactus(g)
    assert an.is_cactus and not an.is_special
