"""Generators for the named extremal families.

Labelling is deterministic: the hub / centre / path start is vertex 0 and
fresh vertices are numbered in the order they are created.
"""

from __future__ import annotations

from .errors import InvalidParams
from .hypergraph import UniformHypergraph


def _check_k(k: int):
    if k < 2:
        raise InvalidParams(f"k must be >= 2, got {k}")


def append_path(edges: list, n: int, u: int, s: int, k: int) -> int:
    """Append a pendant path of length ``s`` at ``u``; returns the new vertex count.

    Each edge brings k-1 fresh vertices; the last of them links to the next edge.
    """
    link = u
    for _ in range(s):
        fresh = list(range(n, n + k - 1))
        edges.append((link, *fresh))
        n += k - 1
        link = fresh[-1]
    return n


def hyperstar(m: int, k: int) -> UniformHypergraph:
    """S_{m,k}: m edges sharing the centre 0."""
    _check_k(k)
    if m < 1:
        raise InvalidParams(f"hyperstar needs m >= 1, got {m}")
    edges: list = []
    n = 1
    for _ in range(m):
        n = append_path(edges, n, 0, 1, k)
    return UniformHypergraph(k, n, tuple(edges))


def loose_path(m: int, k: int) -> UniformHypergraph:
    """P_{m,k}: consecutive edges share exactly one vertex, starting at 0."""
    _check_k(k)
    if m < 1:
        raise InvalidParams(f"loose path needs m >= 1, got {m}")
    edges: list = []
    n = append_path(edges, 1, 0, m, k)
    return UniformHypergraph(k, n, tuple(edges))


def cactus_H(m: int, r: int, k: int) -> UniformHypergraph:
    """H_{m,r,k}: r two-edge cycles and m-2r pendant edges through hub 0.

    Each 2-cycle is a pair of edges meeting in exactly {0, a_i}.
    """
    _check_k(k)
    if m < 1 or not 0 <= r <= m // 2:
        raise InvalidParams(f"need m >= 1 and 0 <= r <= m//2, got m={m}, r={r}")
    if r >= 1 and k < 3:
        raise InvalidParams("2-cycles need k >= 3 in a simple hypergraph")
    edges: list = []
    n = 1
    for _ in range(r):
        a = n
        n += 1
        for _ in range(2):
            edges.append((0, a, *range(n, n + k - 2)))
            n += k - 2
    for _ in range(m - 2 * r):
        n = append_path(edges, n, 0, 1, k)
    return UniformHypergraph(k, n, tuple(edges))


def loose_path_links(d: int, k: int) -> list[int]:
    """Labels of v_0, ..., v_d in :func:`loose_path` (d, k)."""
    return [0] + [i * (k - 1) for i in range(1, d + 1)]


def broom_S(m: int, d: int, k: int) -> UniformHypergraph:
    """S_{m,d,k}: P_{d,k} with m-d pendant edges at v_{floor(d/2)}."""
    _check_k(k)
    if not 2 <= d <= m:
        raise InvalidParams(f"need 2 <= d <= m, got d={d}, m={m}")
    edges: list = []
    n = append_path(edges, 1, 0, d, k)
    hub = loose_path_links(d, k)[d // 2]
    for _ in range(m - d):
        n = append_path(edges, n, hub, 1, k)
    return UniformHypergraph(k, n, tuple(edges))


def spider_leg_lengths(m: int, t: int) -> list[int]:
    """Leg lengths of T_{m,t,k}, longest first."""
    q, extra = divmod(m, t)
    return [q + 1] * extra + [q] * (t - extra)


def spider_T(m: int, t: int, k: int) -> UniformHypergraph:
    """T_{m,t,k}: t pendant paths of almost equal lengths at centre 0."""
    _check_k(k)
    if not 2 <= t <= m:
        raise InvalidParams(f"need 2 <= t <= m, got t={t}, m={m}")
    edges: list = []
    n = 1
    for length in spider_leg_lengths(m, t):
        n = append_path(edges, n, 0, length, k)
    return UniformHypergraph(k, n, tuple(edges))


def cone(H: UniformHypergraph) -> UniformHypergraph:
    """Join a new apex (vertex 0) to every edge of a (k-1)-uniform H.

    Cones over regular H are the non-regular equality cases of the
    max/second-max degree bound.
    """
    edges = tuple((0, *(v + 1 for v in e)) for e in H.edges)
    return UniformHypergraph(H.k + 1, H.n + 1, edges)


FAMILIES = {
    "star": (hyperstar, ("m", "k")),
    "path": (loose_path, ("m", "k")),
    "cactus": (cactus_H, ("m", "r", "k")),
    "broom": (broom_S, ("m", "d", "k")),
    "spider": (spider_T, ("m", "t", "k")),
}


def generate(family: str, *params: int) -> UniformHypergraph:
    """Dispatch by family name, e.g. ``generate("broom", 5, 3, 3)``."""
    try:
        fn, names = FAMILIES[family]
    except KeyError:
        raise InvalidParams(f"unknown family {family!r}; choose from {sorted(FAMILIES)}") from None
    if len(params) != len(names):
        raise InvalidParams(f"{family} takes parameters {' '.join(names)}")
    return fn(*params)
