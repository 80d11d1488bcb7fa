import pytest

from hyperrho.errors import InvalidParams
from hyperrho.families import (
    broom_S,
    cactus_H,
    cone,
    generate,
    hyperstar,
    loose_path,
    loose_path_links,
    spider_leg_lengths,
    spider_T,
)
from hyperrho.hypergraph import build, classify, degrees, diameter, is_connected, pendant_edge_count


@pytest.mark.parametrize("m, k", [(1, 2), (3, 3), (5, 4)])
def test_star_shape(m, k):
    G = hyperstar(m, k)
    assert G.n == 1 + m * (k - 1)
    assert degrees(G)[0] == m
    assert classify(G).is_hypertree
    assert diameter(G) == min(m, 2)


@pytest.mark.parametrize("m, k", [(1, 3), (4, 3), (3, 2)])
def test_loose_path_shape(m, k):
    G = loose_path(m, k)
    assert G.n == 1 + m * (k - 1)
    assert diameter(G) == m
    links = loose_path_links(m, k)
    for i in range(m):
        assert links[i] in G.edges[i] and links[i + 1] in G.edges[i]


@pytest.mark.parametrize("m, r", [(2, 1), (3, 1), (4, 2), (5, 2)])
def test_cactus_shape(m, r):
    G = cactus_H(m, r, 3)
    c = classify(G)
    assert c.cycle_count == r and c.is_hypercactus
    assert degrees(G)[0] == m


def test_cactus_needs_k3():
    with pytest.raises(InvalidParams):
        cactus_H(2, 1, 2)


@pytest.mark.parametrize("m, d", [(5, 2), (5, 3), (5, 4), (5, 5), (4, 3)])
def test_broom_shape(m, d):
    G = broom_S(m, d, 3)
    assert G.m == m and classify(G).is_hypertree
    assert diameter(G) == d
    hub = loose_path_links(d, 3)[d // 2]
    assert degrees(G)[hub] == m - d + (2 if 0 < d // 2 < d else 1)


def test_broom_full_diameter_is_path():
    assert broom_S(4, 4, 3) == loose_path(4, 3)


@pytest.mark.parametrize("m, t", [(4, 2), (5, 3), (4, 4), (7, 3)])
def test_spider_shape(m, t):
    legs = spider_leg_lengths(m, t)
    assert sum(legs) == m and max(legs) - min(legs) <= 1
    G = spider_T(m, t, 3)
    assert degrees(G)[0] == t
    assert pendant_edge_count(G) == t
    assert diameter(G) == legs[0] + legs[1]


def test_spider_all_legs_one_is_star():
    assert spider_T(4, 4, 3) == hyperstar(4, 3)


def test_cone_structure():
    H = build(2, 3, [(0, 1), (1, 2), (0, 2)])
    G = cone(H)
    assert G.k == 3 and G.n == 4
    assert degrees(G) == [3, 2, 2, 2]
    assert is_connected(G)


@pytest.mark.parametrize("name, params", [("star", (3, 3)), ("path", (3, 3)), ("cactus", (4, 1, 3)),
                                          ("broom", (5, 3, 3)), ("spider", (5, 2, 3))])
def test_generate_dispatch(name, params):
    assert generate(name, *params).m == params[0]


@pytest.mark.parametrize("name, params", [("nope", (1, 2)), ("star", (3,)), ("broom", (3, 4, 3)),
                                          ("spider", (3, 1, 3)), ("star", (0, 3)), ("path", (2, 1))])
def test_generate_rejects(name, params):
    with pytest.raises(InvalidParams):
        generate(name, *params)
