import pytest

from conftest import load

from sqci.development import (ball_raag, check_local_pattern, development_gog)
from sqci.families import cycle_graph, path_graph
from sqci.graphs import analyze_cactus
from sqci.joincomplex import build_ri_braid, build_ri_raag


def _ri(name):
    return build_ri_braid(analyze_cactus(load(name)))


def test_ball_radius_zero_is_one_fiber():
    ball = ball_raag(path_graph(4), 0, 2)
    # one copy of RI, all boundary
    assert len(ball.vertices) == 2
    assert ball.interior() == []


def test_ball_grows_with_radius():
    b1 = ball_raag(path_graph(4), 1, 2)
    b2 = ball_raag(path_graph(4), 2, 3)
    assert len(b2.vertices) > len(b1.vertices)
    assert len(b1.interior()) >= 1


def test_ball_is_tree_like():
    ball = ball_raag(path_graph(4), 2, 3)
    assert ball.skeleton_betti1() == 0


def test_ball_local_pattern_clean():
    ball = ball_raag(path_graph(4), 1, 2)
    assert check_local_pattern(ball) == []


def test_ball_fibers_project_to_base():
    ball = ball_raag(path_graph(4), 1, 2)
    assert set(ball.vertex_fiber.values()) <= set(ball.base.vertex_ids)
    for a, b, sid in ball.edges:
        base = ball.base.simplex(sid)
        assert {ball.vertex_fiber[a], ball.vertex_fiber[b]} == set(base.verts)


def test_gog_requires_one_dimensional_base():
    jc = _ri("o_prime_4")  # has 2-simplices
    with pytest.raises(ValueError):
        development_gog(jc, 2, 2)


def test_gog_hexagon_tree():
    jc = _ri("o3")
    ball = development_gog(jc, 3, 2)
    assert ball.skeleton_betti1() == 0
    assert check_local_pattern(ball) == []
    # boundary vertices are exactly the deepest layer
    assert ball.boundary_mark <= set(ball.vertices)


def test_gog_fiber_adjacency_matches_base():
    jc = _ri("o3")
    ball = development_gog(jc, 2, 2)
    base_adj = {v: set() for v in jc.vertex_ids}
    for s in jc.simplices:
        if s.dim == 1:
            a, b = sorted(s.verts)
            base_adj[a].add(b)
            base_adj[b].add(a)
    for a, b, _ in ball.edges:
        fa, fb = ball.vertex_fiber[a], ball.vertex_fiber[b]
        assert fb in base_adj[fa]


def test_cap_respected():
    with pytest.raises(ValueError):
        ball_raag(path_graph(4), 3, 4, cap=10)
