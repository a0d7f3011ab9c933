import copy

from conftest import load

from sqci.families import cycle_graph, o_k, path_graph
from sqci.graphs import analyze_cactus
from sqci.joincomplex import (build_ri_braid, build_ri_raag,
                              components_and_switch, jc_to_dot, jc_to_json,
                              maximal_simplices, ri_betti1, switch_map,
                              validate_cjoin, vertex_classification)


def _ri(name):
    return build_ri_braid(analyze_cactus(load(name)))


def test_ri_raag_p4_shape():
    jc = build_ri_raag(path_graph(4))
    assert len(jc.vertex_ids) == 2
    assert len([s for s in jc.simplices if s.dim == 1]) == 1
    types = sorted(l.qi_type for l in jc.vertex_label.values())
    assert types == ["FxZ", "ZxF"] or types == ["ZxF", "ZxF"]


def test_ri_raag_cycles_are_cycles():
    for n in (5, 6):
        jc = build_ri_raag(cycle_graph(n))
        assert len(jc.vertex_ids) == n
        edges = [s for s in jc.simplices if s.dim == 1]
        assert len(edges) == n
        deg = {v: 0 for v in jc.vertex_ids}
        for e in edges:
            for v in e.verts:
                deg[v] += 1
        assert set(deg.values()) == {2}


def test_switch_map_is_involution():
    jc = _ri("o4")
    sw = switch_map(jc)
    assert all(sw[sw[v]] == v for v in jc.vertex_ids)


def test_components_m_vs_s():
    comps = components_and_switch(_ri("o3"))
    assert [c["kind"] for c in comps] == ["M"]
    comps = components_and_switch(_ri("chain3"))
    assert sorted(c["kind"] for c in comps) == ["S", "S"]


def test_betti1_of_ri():
    assert ri_betti1(_ri("o3")) == 1
    assert ri_betti1(_ri("chain4")) == 0
    assert ri_betti1(_ri("o_prime_4")) == 3


def test_vertex_classification_runs():
    g = path_graph(4)
    jc = build_ri_raag(g)
    cls = vertex_classification(jc, g)
    assert set(cls) == set(jc.vertex_ids)
    for info in cls.values():
        assert info["type"] in (1, 2)
        assert isinstance(info["separating"], bool)


def test_validator_clean_on_builders():
    for name in ("o3", "o4", "o_prime_4", "chain2", "o_prime_4_1"):
        assert validate_cjoin(_ri(name)) == []
    assert validate_cjoin(build_ri_raag(path_graph(6))) == []


def test_validator_catches_injected_iii_violation():
    # degrade a maximal edge label to equal one endpoint's label: the
    # strict-containment requirement between maximal simplices sharing a
    # face is then violated
    jc = build_ri_raag(cycle_graph(5))
    bad = copy.deepcopy(jc)
    edge = next(s for s in bad.simplices if s.dim == 1)
    v0 = sorted(edge.verts)[0]
    object.__setattr__(edge, "label", bad.vertex_label[v0])
    tags = {v[0] for v in validate_cjoin(bad)}
    assert "iii" in tags


def test_validator_catches_injected_iv_violation():
    # forge a label whose two sides share a generator
    from sqci.products import JoinSubgraph
    from sqci.joincomplex import JoinLabel

    jc = build_ri_raag(path_graph(4))
    bad = copy.deepcopy(jc)
    forged = object.__new__(JoinSubgraph)
    object.__setattr__(forged, "side_a", frozenset({"a1"}))
    object.__setattr__(forged, "side_b", frozenset({"a1", "a2"}))
    edge = next(s for s in bad.simplices if s.dim == 1)
    object.__setattr__(edge, "label", JoinLabel(kind="raag", raag=forged))
    tags = {v[0] for v in validate_cjoin(bad)}
    assert "iv" in tags


def test_json_and_dot_are_deterministic():
    jc = _ri("o4")
    assert jc_to_json(jc) == jc_to_json(_ri("o4"))
    assert jc_to_dot(jc) == jc_to_dot(_ri("o4"))


def test_maximal_simplices_cover():
    jc = _ri("o_prime_4")
    maxes = maximal_simplices(jc)
    for s in jc.simplices:
        assert any(s.verts <= m.verts for m in maxes)
