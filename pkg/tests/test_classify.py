import pytest

from conftest import load

from sqci.classify import (GroupDescriptor, block_compare, classify_qi,
                           detect_obstruction_pattern, diameter, is_tree,
                           join_decomposition, out_finite, star_cactus_arms)
from sqci.families import (complete_bipartite, cycle_graph, o_k, path_graph,
                           petersen_graph, spider, star_graph)
from sqci.graphs import analyze_cactus


def d_raag(g):
    return GroupDescriptor("raag", g)


def d_pb2(g):
    return GroupDescriptor("pb2", g)


def test_tree_helpers():
    assert is_tree(path_graph(4))
    assert not is_tree(cycle_graph(4))
    assert diameter(path_graph(5)) == 4
    sides = join_decomposition(complete_bipartite(2, 3))
    assert sides is not None and sorted(len(s) for s in sides) == [2, 3]
    assert join_decomposition(path_graph(4)) is None


def test_out_finite():
    ok, ev = out_finite(cycle_graph(5))
    assert ok
    ok, ev = out_finite(path_graph(4))
    assert not ok  # leaves give transvections
    assert ev["transvections"] or ev["separating_stars"]
    assert out_finite(petersen_graph())[0]


def test_classifier_tree_pairs():
    v = classify_qi(d_raag(path_graph(4)), d_raag(path_graph(6)))
    assert v.relation == "QI"
    v = classify_qi(d_raag(path_graph(4)), d_raag(spider(3)))
    assert v.relation == "QI"
    v = classify_qi(d_raag(path_graph(4)), d_raag(cycle_graph(5)))
    assert v.relation == "NOT_QI"
    v = classify_qi(d_raag(star_graph(3)), d_raag(path_graph(4)))
    assert v.relation == "NOT_QI"  # F_3 x Z vs a diameter-3 tree group


def test_classifier_finite_out():
    v = classify_qi(d_raag(cycle_graph(5)), d_raag(cycle_graph(6)))
    assert v.relation == "NOT_QI"
    assert v.rule == "finite-out-nonisomorphic"
    v = classify_qi(d_raag(cycle_graph(7)), d_raag(cycle_graph(7, prefix="b")))
    assert v.relation == "QI"


def test_classifier_symmetry():
    a, b = d_raag(cycle_graph(5)), d_raag(cycle_graph(6))
    assert classify_qi(a, b).relation == classify_qi(b, a).relation


def test_braid_vs_raag():
    v = classify_qi(d_pb2(load("o3")), d_raag(path_graph(4)))
    assert v.relation == "QI"
    v = classify_qi(d_pb2(load("o_prime_4")), d_raag(path_graph(4)))
    assert v.relation == "NOT_QI"


def test_obstruction_pattern_witness():
    for name in ("o_prime_4", "o_prime_4_1"):
        jc = GroupDescriptor("pb2", load(name)).ri
        found, witness = detect_obstruction_pattern(jc)
        assert found
        assert len(witness) == 4
    found, _ = detect_obstruction_pattern(
        GroupDescriptor("pb2", load("o3")).ri)
    assert not found


def test_star_cactus_arms():
    assert star_cactus_arms(analyze_cactus(o_k(3))) == 3
    assert star_cactus_arms(analyze_cactus(o_k(5))) == 5
    assert star_cactus_arms(analyze_cactus(load("chain3"))) is None


def test_braid_braid_verdicts():
    v = classify_qi(d_pb2(load("o3")), d_pb2(o_k(3, cycle_length=4)))
    assert v.relation == "QI"  # both star cacti with 3 arms
    v = classify_qi(d_pb2(load("o3")), d_pb2(load("chain3")))
    assert v.relation == "NOT_QI"  # M vs S component census


def test_block_compare():
    g1 = cycle_graph(5)
    g2 = cycle_graph(5, prefix="b")
    g3 = cycle_graph(6)
    r = block_compare(g1, g2, [set(g1.vertices)], [set(g2.vertices)])
    assert r is None or r.relation != "NOT_QI"
    r = block_compare(g1, g3, [set(g1.vertices)], [set(g3.vertices)])
    assert r is not None and r.relation == "NOT_QI"


def test_verdicts_are_well_formed():
    pairs = [
        (d_raag(path_graph(2)), d_raag(path_graph(4))),
        (d_pb2(load("o3")), d_raag(path_graph(2))),
        (d_pb2(load("o4")), d_pb2(load("o_prime_4"))),
    ]
    for a, b in pairs:
        v = classify_qi(a, b)
        assert v.relation in {"QI", "NOT_QI", "UNKNOWN"}
        assert isinstance(v.rule, str) and v.rule
        assert classify_qi(b, a).relation == v.relation
