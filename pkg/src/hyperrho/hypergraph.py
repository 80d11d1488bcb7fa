"""k-uniform hypergraphs: representation, combinatorial queries, isomorphism, I/O.

Vertices are the integers ``0..n-1``.  Every edge is stored as a sorted
k-tuple and the edge list itself is kept lexicographically sorted, so two
hypergraphs with the same labelled structure compare (and hash) equal.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import networkx as nx
import numpy as np

from .errors import (
    Disconnected,
    DuplicateEdge,
    EdgeWrongSize,
    HypergraphSyntaxError,
    VertexOutOfRange,
)

Edge = tuple[int, ...]


@dataclass(frozen=True)
class UniformHypergraph:
    """Immutable k-uniform hypergraph on vertices ``0..n-1``.

    ``edges`` may be given as any iterable of vertex collections; they are
    validated and normalised on construction.  Edge *indices* used across the
    library refer to positions in the normalised (sorted) edge tuple.
    """

    k: int
    n: int
    edges: tuple[Edge, ...]
    incidence: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        k, n = int(self.k), int(self.n)
        if k < 2:
            raise EdgeWrongSize(f"edge size k must be >= 2, got {k}")
        if n < 1:
            raise VertexOutOfRange(f"vertex count must be >= 1, got {n}")
        normalised = []
        for raw in self.edges:
            verts = [int(v) for v in raw]
            if len(set(verts)) != len(verts) or len(verts) != k:
                raise EdgeWrongSize(f"edge {tuple(raw)} is not a set of {k} distinct vertices")
            for v in verts:
                if not 0 <= v < n:
                    raise VertexOutOfRange(f"vertex {v} of edge {tuple(raw)} outside 0..{n - 1}")
            normalised.append(tuple(sorted(verts)))
        normalised.sort()
        for a, b in zip(normalised, normalised[1:]):
            if a == b:
                raise DuplicateEdge(f"edge {a} appears more than once")
        inc: list[list[int]] = [[] for _ in range(n)]
        for idx, e in enumerate(normalised):
            for v in e:
                inc[v].append(idx)
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", tuple(normalised))
        object.__setattr__(self, "incidence", tuple(tuple(lst) for lst in inc))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def edge_array(self) -> np.ndarray:
        """Edges as an ``(m, k)`` integer array."""
        return np.array(self.edges, dtype=np.intp).reshape(len(self.edges), self.k)

    @cached_property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    @cached_property
    def degree_array(self) -> np.ndarray:
        return np.array([len(lst) for lst in self.incidence], dtype=float)

    def degree(self, v: int) -> int:
        return len(self.incidence[v])

    def has_edge(self, edge: Iterable[int]) -> bool:
        return tuple(sorted(edge)) in self.edge_set

    def edge_index(self, edge: Iterable[int]) -> int:
        """Position of ``edge`` in the normalised edge list."""
        key = tuple(sorted(edge))
        lo, hi = 0, len(self.edges)
        while lo < hi:
            mid = (lo + hi) // 2
            if self.edges[mid] < key:
                lo = mid + 1
            else:
                hi = mid
        if lo == len(self.edges) or self.edges[lo] != key:
            raise KeyError(f"{key} is not an edge")
        return lo

    def __str__(self):
        return serialize(self).strip().replace("\n", "; ")


def build(k: int, n: int, edges: Iterable[Iterable[int]]) -> UniformHypergraph:
    """Validate and construct a k-uniform hypergraph."""
    return UniformHypergraph(k, n, tuple(tuple(e) for e in edges))


# --- degrees ----------------------------------------------------------------

def degrees(G: UniformHypergraph) -> list[int]:
    return [len(lst) for lst in G.incidence]


def max_degree(G: UniformHypergraph) -> int:
    return max(degrees(G))


def second_max_degree(G: UniformHypergraph) -> int:
    """Second entry of the non-increasing degree sequence (ties counted)."""
    ds = sorted(degrees(G), reverse=True)
    return ds[1] if len(ds) > 1 else ds[0]


def is_regular(G: UniformHypergraph) -> bool:
    return len(set(degrees(G))) == 1


# --- connectivity and distance ----------------------------------------------

def neighbors(G: UniformHypergraph, v: int) -> set[int]:
    out = set()
    for idx in G.incidence[v]:
        out.update(G.edges[idx])
    out.discard(v)
    return out


def _bfs(G: UniformHypergraph, source: int) -> tuple[list[int], list[tuple[int, int]]]:
    """Distances from ``source`` (-1 if unreachable) and BFS parent (vertex, edge)."""
    dist = [-1] * G.n
    parent: list[tuple[int, int]] = [(-1, -1)] * G.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for idx in G.incidence[v]:
            for w in G.edges[idx]:
                if dist[w] < 0:
                    dist[w] = dist[v] + 1
                    parent[w] = (v, idx)
                    queue.append(w)
    return dist, parent


def is_connected(G: UniformHypergraph) -> bool:
    dist, _ = _bfs(G, 0)
    return min(dist) >= 0


def components(G: UniformHypergraph) -> list[tuple[UniformHypergraph, list[int]]]:
    """Connected components as relabelled hypergraphs with their vertex maps.

    Each entry is ``(H, verts)`` where ``verts[i]`` is the original label of
    vertex ``i`` of ``H``.  Isolated vertices become 1-vertex, 0-edge parts.
    """
    seen = [False] * G.n
    out = []
    for s in range(G.n):
        if seen[s]:
            continue
        dist, _ = _bfs(G, s)
        verts = [v for v in range(G.n) if dist[v] >= 0]
        for v in verts:
            seen[v] = True
        local = {v: i for i, v in enumerate(verts)}
        eidx = sorted({idx for v in verts for idx in G.incidence[v]})
        H = UniformHypergraph(G.k, len(verts), tuple(tuple(local[v] for v in G.edges[i]) for i in eidx))
        out.append((H, verts))
    return out


@dataclass(frozen=True)
class PathWitness:
    """Alternating vertex/edge sequence ``v0, e1, v1, ..., es, vs``."""

    vertices: tuple[int, ...]
    edge_indices: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.edge_indices)


def shortest_path(G: UniformHypergraph, u: int, v: int) -> PathWitness:
    dist, parent = _bfs(G, u)
    if dist[v] < 0:
        raise Disconnected(f"no path from {u} to {v}")
    verts, eds = [v], []
    while verts[-1] != u:
        p, idx = parent[verts[-1]]
        eds.append(idx)
        verts.append(p)
    return PathWitness(tuple(reversed(verts)), tuple(reversed(eds)))


def distance(G: UniformHypergraph, u: int, v: int) -> int:
    dist, _ = _bfs(G, u)
    if dist[v] < 0:
        raise Disconnected(f"no path from {u} to {v}")
    return dist[v]


def distance_matrix(G: UniformHypergraph) -> list[list[int]]:
    rows = [_bfs(G, s)[0] for s in range(G.n)]
    if any(d < 0 for row in rows for d in row):
        raise Disconnected("hypergraph is not connected")
    return rows


def diameter(G: UniformHypergraph) -> int:
    return max(max(row) for row in distance_matrix(G))


# --- cycle structure --------------------------------------------------------

@dataclass(frozen=True)
class Classification:
    is_hypertree: bool
    cycle_count: int
    is_hypercactus: bool


def incidence_graph(G: UniformHypergraph) -> nx.Graph:
    """Bipartite vertex/edge incidence graph; nodes ``("v", i)`` and ``("e", j)``."""
    B = nx.Graph()
    B.add_nodes_from(("v", v) for v in range(G.n))
    B.add_nodes_from(("e", j) for j in range(G.m))
    for j, e in enumerate(G.edges):
        B.add_edges_from((("e", j), ("v", v)) for v in e)
    return B


def classify(G: UniformHypergraph) -> Classification:
    """Hypertree / hypercactus recognition and independent cycle count.

    Cycles of G are exactly the cycles of the incidence graph B, so the cycle
    count is B's cyclomatic number ``km - (n + m) + 1``.  G is a hypercactus
    when every block of B is a bridge or a simple cycle and no hyperedge lies
    on two different cycles (two such cycles would share all k vertices of it).
    """
    if not is_connected(G):
        raise Disconnected("classify requires a connected hypergraph")
    r = G.k * G.m - (G.n + G.m) + 1
    if r == 0:
        return Classification(True, 0, True)
    B = incidence_graph(G)
    cactus = True
    cyclic_edges: Counter = Counter()
    for block in nx.biconnected_component_edges(B):
        nodes = {x for pair in block for x in pair}
        if len(block) == 1:
            continue
        if len(block) != len(nodes):
            cactus = False
            break
        cyclic_edges.update(x for x in nodes if x[0] == "e")
    if cactus and any(c > 1 for c in cyclic_edges.values()):
        cactus = False
    return Classification(False, r, cactus)


def pendant_edge_count(G: UniformHypergraph) -> int:
    """Number of edges with k-1 vertices of degree 1 attached at a vertex of degree >= 2."""
    ds = degrees(G)
    count = 0
    for e in G.edges:
        ones = sum(1 for v in e if ds[v] == 1)
        if ones == G.k - 1:
            count += 1
    return count


# --- isomorphism ------------------------------------------------------------

def refine_colors(G: UniformHypergraph) -> tuple[list[int], list[int]]:
    """Colour refinement on the incidence graph.

    Colours are hashes of (old colour, sorted neighbour colours), so they are
    comparable across different hypergraphs.  Iteration stops once the
    partition of vertices and edges no longer splits.
    """
    vcol = [hash(("v", len(inc))) for inc in G.incidence]
    ecol = [hash(("e",)) for _ in G.edges]
    classes = -1
    while True:
        new_e = [hash((ecol[j], tuple(sorted(vcol[v] for v in e)))) for j, e in enumerate(G.edges)]
        new_v = [hash((vcol[v], tuple(sorted(new_e[j] for j in G.incidence[v])))) for v in range(G.n)]
        count = len(set(new_v)) + len(set(new_e))
        vcol, ecol = new_v, new_e
        if count == classes:
            return vcol, ecol
        classes = count


def invariant(G: UniformHypergraph) -> tuple:
    """Isomorphism invariant used to bucket candidates before exact checks."""
    vcol, ecol = refine_colors(G)
    return (G.k, G.n, G.m, tuple(sorted(vcol)), tuple(sorted(ecol)))


def _codegree(G: UniformHypergraph) -> np.ndarray:
    C = np.zeros((G.n, G.n), dtype=np.int64)
    for e in G.edges:
        idx = np.array(e)
        C[np.ix_(idx, idx)] += 1
    return C


def find_isomorphism(G: UniformHypergraph, H: UniformHypergraph) -> list[int] | None:
    """A vertex bijection ``phi`` with ``phi(E(G)) = E(H)``, or ``None``."""
    if (G.k, G.n, G.m) != (H.k, H.n, H.m):
        return None
    if sorted(degrees(G)) != sorted(degrees(H)):
        return None
    gcol, _ = refine_colors(G)
    hcol, _ = refine_colors(H)
    if sorted(gcol) != sorted(hcol):
        return None
    by_color: dict[int, list[int]] = {}
    for w, c in enumerate(hcol):
        by_color.setdefault(c, []).append(w)

    # rarest colour first, then grow along adjacency so pruning bites early
    order: list[int] = []
    placed = [False] * G.n
    size = Counter(gcol)
    while len(order) < G.n:
        start = min((v for v in range(G.n) if not placed[v]), key=lambda v: (size[gcol[v]], v))
        placed[start] = True
        queue = deque([start])
        while queue:
            v = queue.popleft()
            order.append(v)
            for w in sorted(neighbors(G, v), key=lambda w: (size[gcol[w]], w)):
                if not placed[w]:
                    placed[w] = True
                    queue.append(w)

    pos = {v: i for i, v in enumerate(order)}
    # edges of G that become fully mapped once order[i] is placed
    closing: list[list[Edge]] = [[] for _ in range(G.n)]
    for e in G.edges:
        closing[max(pos[v] for v in e)].append(e)
    CG, CH = _codegree(G), _codegree(H)
    hedges = H.edge_set
    phi = [-1] * G.n
    used = [False] * H.n

    def extend(i: int) -> bool:
        if i == G.n:
            return True
        v = order[i]
        earlier = order[:i]
        for w in by_color[gcol[v]]:
            if used[w]:
                continue
            if any(CG[v, u] != CH[w, phi[u]] for u in earlier):
                continue
            phi[v] = w
            if all(tuple(sorted(phi[x] for x in e)) in hedges for e in closing[i]):
                used[w] = True
                if extend(i + 1):
                    return True
                used[w] = False
            phi[v] = -1
        return False

    return list(phi) if extend(0) else None


def isomorphic(G: UniformHypergraph, H: UniformHypergraph) -> bool:
    return find_isomorphism(G, H) is not None


def relabel(G: UniformHypergraph, perm: Sequence[int]) -> UniformHypergraph:
    """Image of G under the vertex map ``v -> perm[v]``."""
    return UniformHypergraph(G.k, G.n, tuple(tuple(perm[v] for v in e) for e in G.edges))


def dedupe(graphs: Iterable[UniformHypergraph]) -> list[UniformHypergraph]:
    """One representative per isomorphism class, in first-seen order."""
    buckets: dict[tuple, list[UniformHypergraph]] = {}
    out = []
    for G in graphs:
        bucket = buckets.setdefault(invariant(G), [])
        if any(isomorphic(G, H) for H in bucket):
            continue
        bucket.append(G)
        out.append(G)
    return out


# --- text format ------------------------------------------------------------

def serialize(G: UniformHypergraph) -> str:
    """Canonical ``.uhg`` text: header ``k n m`` then one sorted edge per line."""
    lines = [f"{G.k} {G.n} {G.m}"]
    lines.extend(" ".join(str(v) for v in e) for e in G.edges)
    return "\n".join(lines) + "\n"


def parse(text: str) -> UniformHypergraph:
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            rows.append((lineno, [int(tok) for tok in line.split()]))
        except ValueError:
            raise HypergraphSyntaxError(f"line {lineno}: non-integer token in {raw!r}") from None
    if not rows:
        raise HypergraphSyntaxError("empty input: expected header 'k n m'")
    lineno, header = rows[0]
    if len(header) != 3:
        raise HypergraphSyntaxError(f"line {lineno}: header must be 'k n m', got {header}")
    k, n, m = header
    body = rows[1:]
    if len(body) != m:
        raise HypergraphSyntaxError(f"header declares {m} edges but {len(body)} edge lines follow")
    for lineno, row in body:
        if len(row) != k:
            raise EdgeWrongSize(f"line {lineno}: expected {k} vertices, got {len(row)}")
    return build(k, n, [row for _, row in body])


def read_uhg(path) -> UniformHypergraph:
    with open(path) as fh:
        return parse(fh.read())


def write_uhg(G: UniformHypergraph, path) -> None:
    with open(path, "w") as fh:
        fh.write(serialize(G))
