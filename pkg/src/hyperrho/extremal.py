"""Exhaustive small-scale enumeration and the extremal-hypergraph harness.

The harness can only falsify: it enumerates every isomorphism class of a
constrained family at desk scale, ranks the classes by alpha-spectral radius
on a grid of alpha values, and checks that the unique winner is the expected
family member.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Iterable, Sequence

import numpy as np

from ._roots import bisect
from .errors import ChainViolation, ExtremalMismatch, InvalidParams, ScaleExceeded
from .families import broom_S, cactus_H, hyperstar, spider_T
from .hypergraph import (
    UniformHypergraph,
    classify,
    dedupe,
    diameter,
    isomorphic,
    pendant_edge_count,
    serialize,
)
from .spectral import check_alpha, spectral_radius

DEFAULT_ALPHAS = (0.0, 0.25, 0.5, 0.75)
UNIQUENESS_GAP = 1e-9

MAX_TREE_EDGES, MAX_TREE_K = 6, 4
MAX_CACTUS_EDGES = 4
CACTUS_K = (3, 4)


# --- enumeration ------------------------------------------------------------

def _extensions(G: UniformHypergraph, max_shared: int) -> Iterable[UniformHypergraph]:
    """G plus one new edge meeting G in j existing vertices, 1 <= j <= max_shared."""
    k, n = G.k, G.n
    for j in range(1, max_shared + 1):
        fresh = tuple(range(n, n + k - j))
        for S in combinations(range(n), j):
            e = S + fresh
            if j == k and G.has_edge(e):
                continue
            yield UniformHypergraph(k, n + k - j, G.edges + (e,))


def _canonical_order(graphs: Iterable[UniformHypergraph]) -> list[UniformHypergraph]:
    return sorted(graphs, key=lambda G: (G.n, serialize(G)))


def _single_edge(k: int) -> UniformHypergraph:
    return UniformHypergraph(k, k, (tuple(range(k)),))


def enumerate_hypertrees(m: int, k: int) -> list[UniformHypergraph]:
    """One representative of every k-uniform hypertree with m edges.

    Grown edge by edge, each new edge meeting the current tree in exactly one
    vertex, with isomorphic duplicates removed after every step.
    """
    if m < 1 or k < 2:
        raise InvalidParams(f"need m >= 1 and k >= 2, got m={m}, k={k}")
    if m > MAX_TREE_EDGES or k > MAX_TREE_K:
        raise ScaleExceeded(f"hypertree enumeration limited to m <= {MAX_TREE_EDGES}, k <= {MAX_TREE_K}")
    level = [_single_edge(k)]
    for _ in range(m - 1):
        level = dedupe(H for G in level for H in _extensions(G, 1))
    return _canonical_order(level)


def enumerate_hypercacti(m: int, k: int, r: int) -> list[UniformHypergraph]:
    """One representative of every k-uniform hypercactus with m edges and r cycles.

    Every connected hypergraph has an edge order whose prefixes are connected;
    prefixes of a hypercactus are hypercacti with no more cycles, so growing
    by one edge at a time (new edge meeting the current graph in any number of
    vertices) and pruning anything else reaches every class.
    """
    if m < 1 or r < 0:
        raise InvalidParams(f"need m >= 1 and r >= 0, got m={m}, r={r}")
    if r == 0:
        return enumerate_hypertrees(m, k)
    if m > MAX_CACTUS_EDGES or k not in CACTUS_K:
        raise ScaleExceeded(f"hypercactus enumeration limited to m <= {MAX_CACTUS_EDGES}, k in {CACTUS_K}")

    def keep(G):
        c = classify(G)
        return c.is_hypercactus and c.cycle_count <= r

    level = [_single_edge(k)]
    for _ in range(m - 1):
        level = dedupe(H for G in level for H in _extensions(G, k) if keep(H))
    return _canonical_order(G for G in level if classify(G).cycle_count == r)


# --- analytic oracles ---------------------------------------------------------

def star_rho_oracle(m: int, k: int, alpha: float) -> float:
    """alpha-spectral radius of S_{m,k} from the reduced scalar equation.

    By symmetry the Perron vector takes one value at the centre and one on the
    leaves; eliminating them from the two eigenequations gives

        (rho - alpha*m) * (rho - alpha)^(k-1) = (1 - alpha)^k * m,

    whose left side increases on (alpha*m, inf).
    """
    alpha = check_alpha(alpha)
    if m < 1:
        raise InvalidParams("star needs m >= 1")
    if alpha == 0:
        return m ** (1.0 / k)

    def f(r):
        return (r - alpha * m) * (r - alpha) ** (k - 1) - (1 - alpha) ** k * m

    return bisect(f, alpha * m, m + 1.0)


# --- the harness --------------------------------------------------------------

@dataclass(frozen=True)
class FamilyConstraint:
    """A class of hypergraphs with a conjectured unique maximiser.

    kind: ``hypertree`` | ``diameter`` (param d) | ``pendant`` (param t) |
    ``unicyclic`` | ``hypercactus`` (param r).
    """

    kind: str
    m: int
    k: int
    param: int | None = None

    def describe(self) -> str:
        tag = {"diameter": "d", "pendant": "t", "hypercactus": "r"}.get(self.kind)
        extra = f", {tag}={self.param}" if tag else ""
        return f"{self.kind}(m={self.m}, k={self.k}{extra})"

    def pool(self) -> list[UniformHypergraph]:
        if self.kind == "hypertree":
            return enumerate_hypertrees(self.m, self.k)
        if self.kind == "diameter":
            return [G for G in enumerate_hypertrees(self.m, self.k) if diameter(G) == self.param]
        if self.kind == "pendant":
            return [G for G in enumerate_hypertrees(self.m, self.k) if pendant_edge_count(G) == self.param]
        if self.kind == "unicyclic":
            return enumerate_hypercacti(self.m, self.k, 1)
        if self.kind == "hypercactus":
            return enumerate_hypercacti(self.m, self.k, self.param)
        raise InvalidParams(f"unknown constraint kind {self.kind!r}")

    def expected(self) -> UniformHypergraph:
        if self.kind == "hypertree":
            return hyperstar(self.m, self.k)
        if self.kind == "diameter":
            return broom_S(self.m, self.param, self.k)
        if self.kind == "pendant":
            return spider_T(self.m, self.param, self.k)
        if self.kind == "unicyclic":
            return cactus_H(self.m, 1, self.k)
        if self.kind == "hypercactus":
            return cactus_H(self.m, self.param, self.k)
        raise InvalidParams(f"unknown constraint kind {self.kind!r}")


@dataclass(frozen=True)
class AlphaVerdict:
    alpha: float
    winner: int
    rho_winner: float
    rho_runner_up: float | None
    match: bool
    unique: bool


@dataclass(frozen=True)
class EnumerationReport:
    constraint: FamilyConstraint
    alphas: tuple[float, ...]
    classes: list[UniformHypergraph]
    rhos: np.ndarray  # shape (len(classes), len(alphas))
    expected: UniformHypergraph
    verdicts: list[AlphaVerdict] = field(default_factory=list)

    @property
    def match(self) -> bool:
        return all(v.match for v in self.verdicts)

    @property
    def unique(self) -> bool:
        return all(v.unique for v in self.verdicts)

    @property
    def ok(self) -> bool:
        return self.match and self.unique

    def winner(self, alpha_index: int = 0) -> UniformHypergraph:
        return self.classes[self.verdicts[alpha_index].winner]


def rho_table(graphs: Sequence[UniformHypergraph], alphas: Sequence[float], **opts) -> np.ndarray:
    return np.array([[spectral_radius(G, a, **opts).rho for a in alphas] for G in graphs]).reshape(
        len(graphs), len(alphas))


def verify_extremal(constraint: FamilyConstraint, alphas: Sequence[float] = DEFAULT_ALPHAS,
                    strict: bool = True, **opts) -> EnumerationReport:
    """Rank every class in ``constraint`` and compare the winner to the expected member.

    Raises :class:`ExtremalMismatch` when ``strict`` and, for some alpha, the
    winner is not isomorphic to the expected hypergraph or is not ahead of the
    runner-up by more than 1e-9.
    """
    alphas = tuple(check_alpha(a) for a in alphas)
    classes = constraint.pool()
    if not classes:
        raise InvalidParams(f"{constraint.describe()} is empty")
    expected = constraint.expected()
    table = rho_table(classes, alphas, **opts)
    expected_idx = next((i for i, G in enumerate(classes) if isomorphic(G, expected)), None)
    verdicts = []
    for j, a in enumerate(alphas):
        col = table[:, j]
        order = np.argsort(-col, kind="stable")
        w = int(order[0])
        runner = float(col[order[1]]) if len(classes) > 1 else None
        unique = runner is None or col[w] - runner > UNIQUENESS_GAP
        verdicts.append(AlphaVerdict(a, w, float(col[w]), runner, w == expected_idx, bool(unique)))
    report = EnumerationReport(constraint, alphas, classes, table, expected, verdicts)
    if strict and not report.ok:
        bad = [v for v in verdicts if not (v.match and v.unique)]
        raise ExtremalMismatch(f"{constraint.describe()}: unexpected winner at alpha="
                               f"{[v.alpha for v in bad]}", report)
    return report


def verify_broom_chain(m: int, k: int, alphas: Sequence[float] = (0.0, 0.5), **opts) -> bool:
    """Check rho(S_{m,d,k}) strictly decreases as d runs from 2 to m."""
    for a in alphas:
        values = [spectral_radius(broom_S(m, d, k), a, **opts).rho for d in range(2, m + 1)]
        for d, (hi, lo) in enumerate(zip(values, values[1:]), start=3):
            if not lo < hi:
                raise ChainViolation(f"alpha={a}: rho(S_{{{m},{d},{k}}}) = {lo!r} >= "
                                     f"rho(S_{{{m},{d - 1},{k}}}) = {hi!r}")
    return True


def feasible_params(kind: str, m: int, k: int) -> list[int]:
    """Parameter values for which the constrained class is non-empty."""
    if kind == "diameter":
        return sorted({diameter(G) for G in enumerate_hypertrees(m, k)} - {1})
    if kind == "pendant":
        return sorted({pendant_edge_count(G) for G in enumerate_hypertrees(m, k)} - {0, 1})
    if kind == "hypercactus":
        return [r for r in range(1, m // 2 + 1) if enumerate_hypercacti(m, k, r)]
    raise InvalidParams(f"{kind!r} has no parameter")


def standard_constraints() -> list[FamilyConstraint]:
    """The regression grid: hypertrees, diameter and pendant restrictions,
    unicyclic and hypercactus classes."""
    out = []
    for k, ms in ((3, (2, 3, 4)), (2, (3, 4, 5))):
        for m in ms:
            out.append(FamilyConstraint("hypertree", m, k))
            out.extend(FamilyConstraint("diameter", m, k, d) for d in feasible_params("diameter", m, k))
            out.extend(FamilyConstraint("pendant", m, k, t) for t in feasible_params("pendant", m, k))
    out.extend(FamilyConstraint("unicyclic", m, 3) for m in (2, 3))
    out.extend(FamilyConstraint("hypercactus", 4, 3, r) for r in (1, 2))
    return out


def run_suite(constraints: Iterable[FamilyConstraint] | None = None,
              alphas: Sequence[float] = DEFAULT_ALPHAS,
              progress: Callable[[EnumerationReport], None] | None = None,
              **opts) -> list[EnumerationReport]:
    """Run :func:`verify_extremal` non-strictly over a list of constraints."""
    reports = []
    for c in constraints if constraints is not None else standard_constraints():
        rep = verify_extremal(c, alphas, strict=False, **opts)
        if progress is not None:
            progress(rep)
        reports.append(rep)
    return reports


# --- random instances ---------------------------------------------------------

def random_connected(m: int, k: int, seed: int) -> UniformHypergraph:
    """Seeded random connected k-uniform hypergraph with m edges.

    Every new edge reuses j >= 1 existing vertices (j uniform in 1..k) and
    fills up with fresh ones, so connectivity holds by construction.
    """
    if m < 1 or k < 2:
        raise InvalidParams(f"need m >= 1 and k >= 2, got m={m}, k={k}")
    rng = random.Random(seed)
    edges = [tuple(range(k))]
    present = set(edges)
    n = k
    while len(edges) < m:
        j = rng.randint(1, min(k, n))
        e = tuple(sorted(rng.sample(range(n), j) + list(range(n, n + k - j))))
        if e in present:
            continue
        edges.append(e)
        present.add(e)
        n += k - j
    return UniformHypergraph(k, n, tuple(edges))
