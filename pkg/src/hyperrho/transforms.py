"""Edge rewirings that increase the alpha-spectral radius.

Constructors (:func:`move_edges`, :func:`switch_edges`, :func:`attach_path`,
:func:`graft`, :func:`consolidate_branches`) are pure and only validate the
combinatorial preconditions.  The ``check_*`` helpers additionally compute
Perron vectors, record the hypothesis evidence, and raise
:class:`TheoremViolation` if a verified hypothesis fails to produce a strict
increase.  Vertex labels are never changed, so Perron entries before and
after a rewiring are comparable by index.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    DegreePatternViolated,
    Disconnected,
    EdgeCollision,
    OverlappingEdges,
    SizeMismatch,
    TheoremViolation,
    VertexInEdge,
    VertexNotInEdge,
    VertexOutOfRange,
)
from .families import append_path
from .hypergraph import UniformHypergraph, is_connected
from .spectral import check_alpha, rayleigh_vertex_form, rho_any, spectral_radius

HYPOTHESIS_MARGIN = 1e-9
INCREASE_TOL = 1e-10


@dataclass(frozen=True)
class TransformOutcome:
    result: UniformHypergraph
    precondition_evidence: dict = field(default_factory=dict)
    rho_before: float = 0.0
    rho_after: float = 0.0
    hypothesis: str = "not_required"  # holds | tie | violated | not_required | not_applicable
    asserted: bool = False

    @property
    def strict_increase(self) -> bool:
        return self.rho_after > self.rho_before + INCREASE_TOL


def _replace_edges(G: UniformHypergraph, removed: Iterable[int], added: Sequence[tuple]) -> UniformHypergraph:
    removed = set(removed)
    keep = [e for i, e in enumerate(G.edges) if i not in removed]
    return UniformHypergraph(G.k, G.n, tuple(keep) + tuple(added))


def _check_new_edges(G: UniformHypergraph, new_edges: Sequence[tuple]):
    seen = set()
    for e in new_edges:
        key = tuple(sorted(e))
        if key in G.edge_set:
            raise EdgeCollision(f"rewired edge {key} is already an edge")
        if key in seen:
            raise EdgeCollision(f"rewiring produces {key} twice")
        seen.add(key)


def _check_vertex(G: UniformHypergraph, v: int):
    if not 0 <= v < G.n:
        raise VertexOutOfRange(f"vertex {v} outside 0..{G.n - 1}")


def _classify_margin(margin: float) -> str:
    if margin > HYPOTHESIS_MARGIN:
        return "holds"
    if margin >= -HYPOTHESIS_MARGIN:
        return "tie"
    return "violated"


# --- moving edges -----------------------------------------------------------

def move_edges(G: UniformHypergraph, u: int, moves: Sequence[tuple[int, int]]) -> UniformHypergraph:
    """Replace each edge ``e_i`` by ``(e_i - {v_i}) | {u}``.

    ``moves`` is a list of ``(edge index, v_i)`` pairs; the v_i need not be
    distinct but the edges must be.
    """
    _check_vertex(G, u)
    if not moves:
        raise ValueError("at least one move is required")
    indices = [i for i, _ in moves]
    if len(set(indices)) != len(indices):
        raise EdgeCollision("an edge may be moved only once")
    new = []
    for idx, v in moves:
        e = G.edges[idx]
        if u in e:
            raise VertexInEdge(f"u={u} already lies in edge {e}")
        if v not in e:
            raise VertexNotInEdge(f"v={v} is not in edge {e}")
        new.append(tuple(w for w in e if w != v) + (u,))
    _check_new_edges(G, new)
    return _replace_edges(G, indices, new)


def check_move_increase(G: UniformHypergraph, alpha: float, u: int,
                        moves: Sequence[tuple[int, int]], **opts) -> TransformOutcome:
    """Move edges to ``u``; if ``x_u >= max x_{v_i}`` the radius must rise strictly."""
    alpha = check_alpha(alpha)
    after = move_edges(G, u, moves)
    before = spectral_radius(G, alpha, **opts)
    x = before.perron
    vmax = max(x[v] for _, v in moves)
    margin = float(x[u] - vmax)
    hyp = _classify_margin(margin)
    rho_after = rho_any(after, alpha, **opts)
    evidence = {
        "x_u": float(x[u]),
        "max_x_v": float(vmax),
        "margin": margin,
        "rayleigh_gain": rayleigh_vertex_form(after, alpha, x) - before.rho,
    }
    out = TransformOutcome(after, evidence, before.rho, rho_after, hyp, hyp in ("holds", "tie"))
    if out.asserted and not out.strict_increase:
        raise TheoremViolation(f"moving edges to {u}: rho {before.rho!r} -> {rho_after!r}")
    return out


# --- switching edges --------------------------------------------------------

def switch_edges(G: UniformHypergraph, e: int, f: int, U: Iterable[int], V: Iterable[int]) -> UniformHypergraph:
    """Replace disjoint edges e, f by ``U | (f - V)`` and ``V | (e - U)``."""
    E, F = set(G.edges[e]), set(G.edges[f])
    U, V = set(U), set(V)
    if E & F:
        raise OverlappingEdges(f"edges {G.edges[e]} and {G.edges[f]} intersect")
    if not U <= E:
        raise VertexNotInEdge(f"U={sorted(U)} is not contained in {G.edges[e]}")
    if not V <= F:
        raise VertexNotInEdge(f"V={sorted(V)} is not contained in {G.edges[f]}")
    if len(U) != len(V) or not 1 <= len(U) <= G.k - 1:
        raise SizeMismatch(f"need 1 <= |U| = |V| <= k-1, got {len(U)}, {len(V)}")
    e_new = tuple(sorted(U | (F - V)))
    f_new = tuple(sorted(V | (E - U)))
    _check_new_edges(G, [e_new, f_new])
    return _replace_edges(G, [e, f], [e_new, f_new])


def check_switch_increase(G: UniformHypergraph, alpha: float, e: int, f: int,
                          U: Iterable[int], V: Iterable[int], **opts) -> TransformOutcome:
    """Switch; if ``x_U >= x_V`` and ``x_{e-U} <= x_{f-V}`` with one strict, rho rises."""
    alpha = check_alpha(alpha)
    U, V = set(U), set(V)
    after = switch_edges(G, e, f, U, V)
    before = spectral_radius(G, alpha, **opts)
    x = before.perron
    E, F = set(G.edges[e]), set(G.edges[f])
    xU, xV = np.prod([x[w] for w in U]), np.prod([x[w] for w in V])
    xEU, xFV = np.prod([x[w] for w in E - U]), np.prod([x[w] for w in F - V])
    first, second = _classify_margin(float(xU - xV)), _classify_margin(float(xFV - xEU))
    if "violated" in (first, second):
        hyp = "violated"
    elif "holds" in (first, second):
        hyp = "holds"
    else:
        hyp = "tie"
    rho_after = rho_any(after, alpha, **opts)
    evidence = {"x_U": float(xU), "x_V": float(xV), "x_e_minus_U": float(xEU), "x_f_minus_V": float(xFV)}
    out = TransformOutcome(after, evidence, before.rho, rho_after, hyp, hyp == "holds")
    if out.asserted and not out.strict_increase:
        raise TheoremViolation(f"switching edges: rho {before.rho!r} -> {rho_after!r}")
    return out


# --- pendant paths ----------------------------------------------------------

def attach_path(G: UniformHypergraph, u: int, s: int) -> UniformHypergraph:
    """G_u(s): attach a pendant path of length s at u (s = 0 returns G)."""
    _check_vertex(G, u)
    if s < 0:
        raise ValueError(f"path length must be >= 0, got {s}")
    if s == 0:
        return G
    edges = list(G.edges)
    n = append_path(edges, G.n, u, s, G.k)
    return UniformHypergraph(G.k, n, tuple(edges))


def graft(G: UniformHypergraph, u: int, p: int, q: int) -> UniformHypergraph:
    """G_u(p, q) = (G_u(p))_u(q) for p >= q >= 0."""
    if not p >= q >= 0:
        raise ValueError(f"need p >= q >= 0, got p={p}, q={q}")
    return attach_path(attach_path(G, u, p), u, q)


def check_graft_compare(G: UniformHypergraph, alpha: float, u: int, p: int, q: int, **opts) -> TransformOutcome:
    """Compare G_u(p, q) against the less balanced G_u(p+1, q-1).

    ``rho_before`` is the radius of G_u(p+1, q-1) and ``result`` / ``rho_after``
    belong to G_u(p, q); for connected G with an edge and p >= q >= 1 the
    balanced graft must be strictly larger.
    """
    alpha = check_alpha(alpha)
    balanced = graft(G, u, p, q)
    if q < 1 or G.m < 1 or not is_connected(G):
        r = rho_any(balanced, alpha, **opts)
        evidence = {"p": p, "q": q, "precondition": False}
        return TransformOutcome(balanced, evidence, r, r, "not_applicable", False)
    skewed = graft(G, u, p + 1, q - 1)
    rb = spectral_radius(skewed, alpha, **opts).rho
    ra = spectral_radius(balanced, alpha, **opts).rho
    out = TransformOutcome(balanced, {"p": p, "q": q, "precondition": True}, rb, ra, "not_required", True)
    if not out.strict_increase:
        raise TheoremViolation(f"G_u({p},{q}) = {ra!r} not above G_u({p + 1},{q - 1}) = {rb!r}")
    return out


# --- consolidating branches of an edge --------------------------------------

def consolidate_branches(G: UniformHypergraph, e: int, keep: int, spare: int | None = None) -> UniformHypergraph:
    """Rehome the branches hanging off an edge onto one of its vertices.

    Let v_1 = ``keep``, v_2 = ``spare`` and v_3..v_r the remaining vertices of
    edge ``e`` with degree >= 2 (r >= 3 required).  Every other edge meeting
    some v_i (i >= 3) but not v_1 is moved from v_i to v_1.  An edge meeting
    several of v_3..v_r is moved once, from the smallest such label.
    ``spare`` defaults to the smallest-labelled eligible vertex.
    """
    edge = G.edges[e]
    if keep not in edge:
        raise VertexNotInEdge(f"keep={keep} is not in edge {edge}")
    heavy = [v for v in edge if G.degree(v) >= 2]
    if len(heavy) < 3 or keep not in heavy:
        raise DegreePatternViolated(
            f"need keep plus at least two more vertices of degree >= 2 in {edge}, found {heavy}")
    if spare is None:
        spare = min(v for v in heavy if v != keep)
    elif spare == keep or spare not in heavy:
        raise DegreePatternViolated(f"spare={spare} must be a different degree >= 2 vertex of {edge}")
    movers = set(heavy) - {keep, spare}
    moves = []
    for idx in sorted({i for v in movers for i in G.incidence[v]} - {e}):
        f = G.edges[idx]
        if keep in f:
            continue
        moves.append((idx, min(movers & set(f))))
    new = [tuple(w for w in G.edges[i] if w != v) + (keep,) for i, v in moves]
    _check_new_edges(G, new)
    return _replace_edges(G, [i for i, _ in moves], new)


def check_consolidate_increase(G: UniformHypergraph, alpha: float, e: int, keep: int,
                               spare: int | None = None, **opts) -> TransformOutcome:
    """Consolidation always increases rho strictly; no Perron hypothesis needed."""
    alpha = check_alpha(alpha)
    if not is_connected(G):
        raise Disconnected("consolidation check requires a connected hypergraph")
    after = consolidate_branches(G, e, keep, spare)
    before = spectral_radius(G, alpha, **opts).rho
    rho_after = rho_any(after, alpha, **opts)
    out = TransformOutcome(after, {"edge": list(G.edges[e]), "keep": keep}, before, rho_after,
                           "not_required", True)
    if not out.strict_increase:
        raise TheoremViolation(f"consolidation: rho {before!r} -> {rho_after!r}")
    return out
