from sqci.families import (chain_cactus, complete_bipartite, cube_graph,
                           cycle_graph, o_k, o_prime_4, o_prime_4_n,
                           path_graph, petersen_graph, spider, star_graph,
                           tripod)
from sqci.graphs import analyze_cactus


def test_basic_shapes():
    assert len(path_graph(5).vertices) == 5
    assert len(cycle_graph(6).edges) == 6
    assert len(star_graph(4).edges) == 4
    assert len(complete_bipartite(2, 3).edges) == 6
    g = petersen_graph()
    assert len(g.vertices) == 10 and len(g.edges) == 15
    assert all(len(g.adjacent(v)) == 3 for v in g.vertices)
    assert len(tripod().vertices) == 4
    assert len(spider(3).vertices) == 7


def test_cactus_families_are_special():
    for g, typ, ncyc in [
        (o_k(3), "M", 3),
        (o_k(5, cycle_length=4), "M", 5),
        (chain_cactus([3, 4, 5]), "S", 3),
        (o_prime_4(), "M", 4),
        (o_prime_4_n(2), "M", 6),
    ]:
        an = analyze_cactus(g)
        assert an.is_special, (typ, ncyc)
        assert an.cactus_type == typ
        assert len(an.cycles) == ncyc


def test_cube_graph_is_not_a_cactus_but_has_s_components():
    from sqci.joincomplex import (build_ri_braid_from_pairs,
                                  components_and_switch)
    from sqci.products import maximal_products_bruteforce

    g = cube_graph()
    assert not analyze_cactus(g).is_cactus
    jc = build_ri_braid_from_pairs(g, maximal_products_bruteforce(g))
    comps = components_and_switch(jc)
    assert len(comps) == 6
    assert all(c["kind"] == "S" for c in comps)


def test_o_prime_4_n_cycle_names():
    g = o_prime_4_n(1)
    names = {v.split("_")[0] for v in g.vertices if v.startswith("a")}
    assert names == {"a1", "a2", "a3", "a4", "a5"}
