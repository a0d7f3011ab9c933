from sqci.complexes import betti1, build_d2, d2_involution, hyperplanes, npc_check
from sqci.families import cycle_graph, path_graph, star_graph, tripod


def test_d2_tripod_is_a_circle():
    d2 = build_d2(tripod())
    assert len(d2.vertices) == 12
    assert len(d2.edges) == 12
    assert len(d2.squares) == 0
    assert betti1(d2) == 1
    assert npc_check(d2) == []


def test_d2_segment_counts():
    # two disjoint closed cells of P_4: a small complex with squares
    d2 = build_d2(path_graph(4))
    assert len(d2.vertices) == 4 * 3
    assert betti1(d2) == 0
    assert npc_check(d2) == []


def test_d2_cycle5():
    d2 = build_d2(cycle_graph(5))
    assert len(d2.vertices) == 5 * 4
    assert npc_check(d2) == []
    # D_2(C_5) deformation retracts to a circle
    assert betti1(d2) == 1


def test_swap_involution():
    d2 = build_d2(star_graph(4))
    sigma = d2_involution(d2)
    assert sorted(sigma) == sorted(d2.vertices)
    assert all(sigma[sigma[v]] == v for v in d2.vertices)
    assert all(sigma[v] != v for v in d2.vertices)


def test_hyperplanes_partition_edges():
    d2 = build_d2(path_graph(5))
    hs = hyperplanes(d2)
    seen = set()
    for h in hs:
        assert not (h.edge_class & seen)
        seen |= h.edge_class
    assert seen == set(d2.edge_ids)


def test_betti1_wedge_of_circles():
    d2 = build_d2(cycle_graph(6))
    assert betti1(d2) >= 1
