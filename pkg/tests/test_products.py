import pytest

from conftest import load

from sqci.families import (chain_cactus, cycle_graph, o_k, o_prime_4,
                           path_graph)
from sqci.graphs import analyze_cactus
from sqci.products import (CapExceeded, intersect_products,
                           maximal_join_subgraphs, maximal_products_bruteforce,
                           maximal_products_cactus)


def _pair_keys(pairs):
    return {(p.first.key(), p.second.key()) for p in pairs}


def test_maximal_joins_path():
    joins = maximal_join_subgraphs(path_graph(4))
    sides = {(frozenset(j.side_a), frozenset(j.side_b)) for j in joins}
    assert sides == {
        (frozenset({"a0", "a2"}), frozenset({"a1"})),
        (frozenset({"a1", "a3"}), frozenset({"a2"})),
    }


def test_maximal_joins_cycle5():
    joins = maximal_join_subgraphs(cycle_graph(5))
    assert len(joins) == 5
    assert all(sorted(j.ranks) == [1, 2] for j in joins)


def test_cactus_matches_bruteforce_small():
    for g in (o_k(3), chain_cactus([3, 3]), o_prime_4()):
        an = analyze_cactus(g)
        assert _pair_keys(maximal_products_cactus(an)) == \
            _pair_keys(maximal_products_bruteforce(g))


def test_o3_product_count_and_symmetry():
    an = analyze_cactus(load("o3"))
    pairs = maximal_products_cactus(an)
    assert len(pairs) == 6
    keys = _pair_keys(pairs)
    assert {(b, a) for a, b in keys} == keys  # closed under the swap


def test_intersection_of_products_is_product_list():
    an = analyze_cactus(load("o_prime_4"))
    pairs = maximal_products_cactus(an)
    hits = 0
    for i in range(len(pairs)):
        for j in range(i + 1, len(pairs)):
            for p in intersect_products([pairs[i], pairs[j]]):
                hits += 1
                for q in (pairs[i], pairs[j]):
                    assert q.first.contains(p.first)
                    assert q.second.contains(p.second)
    assert hits > 0


def test_bruteforce_cap():
    with pytest.raises(CapExceeded):
        maximal_products_bruteforce(load("o_prime_4_2"), cap=2)
