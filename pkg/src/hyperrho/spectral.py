"""alpha-spectral radius and alpha-Perron vector of k-uniform hypergraphs.

The tensor ``A_alpha(G) = alpha*D(G) + (1-alpha)*A(G)`` is never materialised:
because the adjacency tensor carries ``1/(k-1)!`` on every permutation of an
edge, component ``v`` of ``A_alpha x`` collapses to

    alpha * d_v * x_v^(k-1) + (1-alpha) * sum_{e ∋ v} prod_{u in e, u != v} x_u

which is what :func:`alpha_apply` evaluates.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    DimensionMismatch,
    Disconnected,
    InvalidAlpha,
    NegativeEntry,
    NoConvergence,
    NotKUnit,
)
from .hypergraph import UniformHypergraph, components, is_connected

DEFAULT_TOL = 1e-12
DEFAULT_MAX_ITER = 1_000_000
DEFAULT_SHIFT = 1.0
KUNIT_TOL = 1e-9


def check_alpha(alpha: float) -> float:
    alpha = float(alpha)
    if not 0.0 <= alpha < 1.0:
        raise InvalidAlpha(f"alpha must lie in [0, 1), got {alpha}")
    return alpha


@dataclass(frozen=True)
class SpectralResult:
    rho: float
    perron: np.ndarray
    iterations: int
    residual_inf: float
    bracket: tuple[float, float]
    alpha: float = 0.0
    tol: float = DEFAULT_TOL


def _check_vector(G: UniformHypergraph, x) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    if x.shape != (G.n,):
        raise DimensionMismatch(f"vector of shape {x.shape} for a hypergraph on {G.n} vertices")
    if np.any(x < 0):
        raise NegativeEntry("vector has negative entries")
    return x


def _others_products(G: UniformHypergraph, x: np.ndarray) -> np.ndarray:
    """``out[v] = sum over edges e ∋ v of prod_{u in e - v} x_u``."""
    if G.m == 0:
        return np.zeros(G.n)
    E = G.edge_array
    X = x[E]
    out = np.zeros(G.n)
    for j in range(G.k):
        rest = np.prod(np.delete(X, j, axis=1), axis=1)
        out += np.bincount(E[:, j], weights=rest, minlength=G.n)
    return out


def _apply(G: UniformHypergraph, alpha: float, x: np.ndarray) -> np.ndarray:
    return alpha * G.degree_array * x ** (G.k - 1) + (1.0 - alpha) * _others_products(G, x)


def alpha_apply(G: UniformHypergraph, alpha: float, x) -> np.ndarray:
    """The vector ``A_alpha(G) x`` for a nonnegative ``x``."""
    alpha = check_alpha(alpha)
    return _apply(G, alpha, _check_vector(G, x))


def k_norm(x, k: int) -> float:
    return float(np.sum(np.asarray(x, dtype=float) ** k) ** (1.0 / k))


def rayleigh_vertex_form(G: UniformHypergraph, alpha: float, x) -> float:
    """``alpha * sum_v d_v x_v^k + (1-alpha) * k * sum_e x_e``."""
    x = np.asarray(x, dtype=float)
    edge_products = np.prod(x[G.edge_array], axis=1).sum() if G.m else 0.0
    return float(alpha * np.dot(G.degree_array, x ** G.k) + (1 - alpha) * G.k * edge_products)


def rayleigh_edge_form(G: UniformHypergraph, alpha: float, x) -> float:
    """``sum_e (alpha * sum_{u in e} x_u^k + (1-alpha) * k * x_e)``."""
    if G.m == 0:
        return 0.0
    X = np.asarray(x, dtype=float)[G.edge_array]
    return float(np.sum(alpha * np.sum(X ** G.k, axis=1) + (1 - alpha) * G.k * np.prod(X, axis=1)))


def rayleigh(G: UniformHypergraph, alpha: float, x) -> float:
    """``x^T (A_alpha(G) x)`` for a k-unit nonnegative ``x``.

    Both the per-vertex and the per-edge expansion are evaluated and must
    agree to 1e-12 (relative to max(1, |value|)).
    """
    alpha = check_alpha(alpha)
    x = _check_vector(G, x)
    norm = k_norm(x, G.k)
    if abs(norm - 1.0) > KUNIT_TOL:
        raise NotKUnit(f"||x||_{G.k} = {norm!r} is not 1")
    a = rayleigh_vertex_form(G, alpha, x)
    b = rayleigh_edge_form(G, alpha, x)
    if abs(a - b) > 1e-12 * max(1.0, abs(a)):
        raise ArithmeticError(f"rayleigh forms disagree: {a!r} vs {b!r}")
    return a


def eigen_residual(G: UniformHypergraph, alpha: float, rho: float, x) -> float:
    """``||A_alpha x - rho * x^[k-1]||_inf``."""
    alpha = check_alpha(alpha)
    x = _check_vector(G, x)
    return float(np.max(np.abs(_apply(G, alpha, x) - rho * x ** (G.k - 1))))


def spectral_radius(
    G: UniformHypergraph,
    alpha: float,
    *,
    tol: float = DEFAULT_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
    shift: float = DEFAULT_SHIFT,
) -> SpectralResult:
    """Shifted power iteration on ``A_alpha(G) + shift * I``.

    Each step maps ``x -> (B x)^[1/(k-1)]`` followed by k-unit normalisation;
    the ratios ``(B x)_v / x_v^(k-1)`` bracket the spectral radius of B
    (Collatz-Wielandt), and iteration stops once the bracket's relative width
    drops below ``tol``.
    """
    alpha = check_alpha(alpha)
    if tol <= 0:
        raise ValueError("tol must be positive")
    if shift <= 0:
        raise ValueError("shift must be positive")
    if not is_connected(G):
        raise Disconnected("spectral_radius requires a connected hypergraph")
    k = G.k
    if G.m == 0:
        return SpectralResult(0.0, np.ones(1), 0, 0.0, (0.0, 0.0), alpha, tol)

    x = np.full(G.n, G.n ** (-1.0 / k))
    for it in range(1, max_iter + 1):
        xp = x ** (k - 1)
        y = _apply(G, alpha, x) + shift * xp
        ratio = y / xp
        lo, hi = float(ratio.min()), float(ratio.max())
        x = y ** (1.0 / (k - 1))
        x /= np.sum(x ** k) ** (1.0 / k)
        if hi - lo < tol * hi:
            break
    else:
        raise NoConvergence(max_iter, hi - lo)

    rho = 0.5 * (lo + hi) - shift
    residual = eigen_residual(G, alpha, rho, x)
    return SpectralResult(rho, x, it, residual, (lo - shift, hi - shift), alpha, tol)


def rho(G: UniformHypergraph, alpha: float, **opts) -> float:
    """alpha-spectral radius of a connected hypergraph."""
    return spectral_radius(G, alpha, **opts).rho


def rho_any(G: UniformHypergraph, alpha: float, **opts) -> float:
    """alpha-spectral radius of an arbitrary hypergraph: max over components."""
    if is_connected(G):
        return spectral_radius(G, alpha, **opts).rho
    return max(spectral_radius(H, alpha, **opts).rho for H, _ in components(G))
