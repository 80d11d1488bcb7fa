"""Independent reference computations used by the test-suite.

Nothing here calls the power iteration or the library's isomorphism code.
"""

from itertools import combinations, permutations

import networkx as nx
import numpy as np

from hyperrho.hypergraph import UniformHypergraph


def graph_alpha_matrix_rho(G: UniformHypergraph, alpha: float) -> float:
    """k = 2 only: largest eigenvalue of the symmetric matrix alpha*D + (1-alpha)*A."""
    assert G.k == 2
    A = np.zeros((G.n, G.n))
    for u, v in G.edges:
        A[u, v] = A[v, u] = 1.0
    M = alpha * np.diag(A.sum(axis=1)) + (1 - alpha) * A
    return float(np.linalg.eigvalsh(M)[-1])


def power_hypergraph(G2: UniformHypergraph, k: int) -> UniformHypergraph:
    """Add k-2 fresh vertices to every edge of a graph."""
    edges, n = [], G2.n
    for u, v in G2.edges:
        edges.append((u, v, *range(n, n + k - 2)))
        n += k - 2
    return UniformHypergraph(k, n, tuple(edges))


def power_rho0(G2: UniformHypergraph, k: int) -> float:
    """rho_0 of the k-th power of a graph equals rho(graph)^(2/k)."""
    return graph_alpha_matrix_rho(G2, 0.0) ** (2.0 / k)


def nx_incidence(G: UniformHypergraph) -> nx.Graph:
    B = nx.Graph()
    for v in range(G.n):
        B.add_node(("v", v), side="v")
    for j, e in enumerate(G.edges):
        B.add_node(("e", j), side="e")
        for v in e:
            B.add_edge(("e", j), ("v", v))
    return B


def nx_isomorphic(G: UniformHypergraph, H: UniformHypergraph) -> bool:
    """VF2 on the incidence graphs with the bipartition as node label."""
    if (G.k, G.n, G.m) != (H.k, H.n, H.m):
        return False
    match = nx.algorithms.isomorphism.categorical_node_match("side", None)
    return nx.is_isomorphic(nx_incidence(G), nx_incidence(H), node_match=match)


def brute_isomorphic(G: UniformHypergraph, H: UniformHypergraph) -> bool:
    """Try every vertex permutation (n <= 8)."""
    if (G.k, G.n, G.m) != (H.k, H.n, H.m):
        return False
    target = H.edge_set
    for perm in permutations(range(G.n)):
        if all(tuple(sorted(perm[v] for v in e)) in target for e in G.edges):
            return True
    return False


def nx_dedupe_count(graphs) -> int:
    reps = []
    for G in graphs:
        if not any(nx_isomorphic(G, H) for H in reps):
            reps.append(G)
    return len(reps)


def brute_cycles(G: UniformHypergraph) -> set:
    """All cycles (v0, e1, v1, ..., es, v0), s >= 2, up to rotation and reversal.

    A cycle is returned as a frozenset of its (vertex, edge, vertex) steps,
    which identifies it uniquely for s >= 2.
    """
    found = set()

    def walk(start, v, used_e, used_v, steps):
        for j in G.incidence[v]:
            if j in used_e:
                continue
            for w in G.edges[j]:
                if w == v:
                    continue
                step = frozenset({(v, j, w), (w, j, v)})
                if w == start and len(steps) >= 1:
                    found.add(frozenset(steps + [step]))
                elif w not in used_v:
                    walk(start, w, used_e | {j}, used_v | {w}, steps + [step])

    for s in range(G.n):
        walk(s, s, frozenset(), frozenset({s}), [])
    return found


def cycle_vertex_set(G: UniformHypergraph, cycle) -> set:
    edges = {j for step in cycle for (_, j, _) in step}
    return {v for j in edges for v in G.edges[j]}


def brute_is_hypercactus(G: UniformHypergraph) -> bool:
    cycles = list(brute_cycles(G))
    for a, b in combinations(cycles, 2):
        if len(cycle_vertex_set(G, a) & cycle_vertex_set(G, b)) > 1:
            return False
    return True


def bfs_distances(G: UniformHypergraph):
    adj = {v: set() for v in range(G.n)}
    for e in G.edges:
        for u in e:
            adj[u].update(w for w in e if w != u)
    return dict(nx.all_pairs_shortest_path_length(nx.Graph(adj)))


def bisect_poly_root(coeffs, lo, hi):
    """Plain bisection on a polynomial (highest degree first)."""
    f = np.poly1d(coeffs)
    assert f(lo) < 0 < f(hi)
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if f(mid) < 0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)
