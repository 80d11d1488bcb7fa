"""Upper bounds on the alpha-spectral radius and their equality diagnostics."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from ._roots import bisect, expand_upper
from .errors import Disconnected, InvalidDegrees, RegularInput, StaleCertificate
from .hypergraph import (
    UniformHypergraph,
    degrees,
    diameter,
    is_connected,
    is_regular,
    max_degree,
    second_max_degree,
)
from .spectral import SpectralResult, check_alpha, spectral_radius

EQUALITY_GAP = 1e-8
CERTIFICATE_RESIDUAL = 1e-9


class BoundName(str, Enum):
    MAX_DEGREE = "MaxDegree"
    THM31 = "Thm31"
    THM31_WEAK = "Thm31Weak"
    THM32A = "Thm32a"
    THM32B = "Thm32b"
    LGZ_IRREGULAR = "LGZIrregular"
    LGZ_XMAX_DIAM = "LGZXmaxDiam"
    LGZ_XMAX_D1 = "LGZXmaxD1"


class Equality(str, Enum):
    HOLDS = "Holds"
    FAILS_STRICT = "FailsStrict"
    NOT_CHARACTERIZED = "NotCharacterized"


@dataclass(frozen=True)
class BoundReport:
    name: BoundName
    value: float
    inputs: dict = field(default_factory=dict)
    equality_case: Equality = Equality.NOT_CHARACTERIZED
    certificate: bool = False
    rho: float | None = None
    note: str = ""

    @property
    def slack(self) -> float | None:
        return None if self.rho is None else self.value - self.rho


# --- delta ------------------------------------------------------------------

def h_poly(t: float, Dmax: float, Dsec: float, k: int, alpha: float) -> float:
    """``(1-a) D' t^k + a (D' - D) t^(k-1) - (1-a) D``."""
    return (1 - alpha) * Dsec * t ** k + alpha * (Dsec - Dmax) * t ** (k - 1) - (1 - alpha) * Dmax


def solve_delta(Dmax: float, Dsec: float, k: int, alpha: float) -> float:
    """The auxiliary root delta for the max/second-max degree bound.

    ``delta = 1`` when the two largest degrees coincide; ``(D/D')^(1/k)`` at
    ``alpha = 0``; otherwise the unique root of ``h`` beyond ``(D/D')^(1/k)``.
    ``h`` is negative at that point and decreases then increases, so the
    bracket found by doubling contains exactly one root.
    """
    alpha = check_alpha(alpha)
    if Dsec < 1 or Dmax < Dsec:
        raise InvalidDegrees(f"need max degree >= second max degree >= 1, got {Dmax}, {Dsec}")
    if Dmax == Dsec:
        return 1.0
    lower = (Dmax / Dsec) ** (1.0 / k)
    if alpha == 0:
        return lower

    def h(t):
        return h_poly(t, Dmax, Dsec, k, alpha)

    upper = expand_upper(h, max(2 * lower, 2.0))
    return bisect(h, lower, upper)


# --- structure tests --------------------------------------------------------

def is_cone_over_regular(G: UniformHypergraph) -> bool:
    """True if some vertex lies in every edge and deleting it leaves a regular
    (k-1)-uniform hypergraph on the remaining n-1 vertices."""
    if G.m == 0:
        return False
    ds = degrees(G)
    for v in range(G.n):
        if ds[v] != G.m:
            continue
        rest = [ds[u] for u in range(G.n) if u != v]
        if rest and len(set(rest)) == 1 and rest[0] >= 1:
            return True
    return False


def _resolve(G, alpha, result):
    if result is not None:
        return result
    if is_connected(G):
        return spectral_radius(G, alpha)
    return None


def _equality(value, rho, structural, connected):
    if not connected or rho is None:
        return Equality.NOT_CHARACTERIZED, "equality characterised for connected hypergraphs only"
    gap = value - rho
    if structural and abs(gap) <= EQUALITY_GAP:
        return Equality.HOLDS, ""
    if structural:
        return Equality.FAILS_STRICT, f"structure matches but gap {gap:.3e} exceeds {EQUALITY_GAP:g}"
    if abs(gap) <= EQUALITY_GAP:
        return Equality.FAILS_STRICT, f"numeric near-equality (gap {gap:.3e}) without structural match"
    return Equality.FAILS_STRICT, ""


# --- degree bounds ----------------------------------------------------------

def bound_max_degree(G: UniformHypergraph, alpha: float = 0.0,
                     result: SpectralResult | None = None) -> BoundReport:
    """rho <= Delta (row sums of A_alpha are the degrees)."""
    alpha = check_alpha(alpha)
    connected = is_connected(G)
    result = _resolve(G, alpha, result)
    rho = None if result is None else result.rho
    value = float(max_degree(G))
    eq, note = _equality(value, rho, is_regular(G), connected)
    return BoundReport(BoundName.MAX_DEGREE, value, {"Delta": value}, eq, False, rho, note)


def bound_thm31(G: UniformHypergraph, alpha: float,
                result: SpectralResult | None = None) -> BoundReport:
    """rho <= alpha*Delta + (1-alpha)*Delta*delta^-(k-1).

    Equality (connected G): G regular, or G is a cone over a regular
    (k-1)-uniform hypergraph.
    """
    alpha = check_alpha(alpha)
    D, D2, k = max_degree(G), second_max_degree(G), G.k
    if G.m == 0:
        raise InvalidDegrees("bound needs at least one edge")
    delta = solve_delta(D, D2, k, alpha)
    value = alpha * D + (1 - alpha) * D * delta ** (-(k - 1))
    connected = is_connected(G)
    result = _resolve(G, alpha, result)
    rho = None if result is None else result.rho
    structural = is_regular(G) or is_cone_over_regular(G)
    eq, note = _equality(value, rho, structural, connected)
    inputs = {"Delta": D, "Delta2": D2, "delta": delta, "k": k, "alpha": alpha}
    return BoundReport(BoundName.THM31, value, inputs, eq, False, rho, note)


def bound_thm31_weak(G: UniformHypergraph, alpha: float,
                     result: SpectralResult | None = None) -> BoundReport:
    """rho <= alpha*Delta + (1-alpha)*Delta^(1/k)*Delta'^(1-1/k).

    Equality holds for regular G; at alpha = 0 this coincides with
    :func:`bound_thm31`, so cones over regular hypergraphs are tight as well.
    """
    alpha = check_alpha(alpha)
    D, D2, k = max_degree(G), second_max_degree(G), G.k
    value = alpha * D + (1 - alpha) * D ** (1.0 / k) * D2 ** (1.0 - 1.0 / k)
    connected = is_connected(G)
    result = _resolve(G, alpha, result)
    rho = None if result is None else result.rho
    structural = is_regular(G) or (alpha == 0 and is_cone_over_regular(G))
    eq, note = _equality(value, rho, structural, connected)
    inputs = {"Delta": D, "Delta2": D2, "k": k, "alpha": alpha}
    return BoundReport(BoundName.THM31_WEAK, value, inputs, eq, False, rho, note)


# --- Perron-certificate bounds ----------------------------------------------

def _require_fresh(result: SpectralResult, tol: float):
    if result.residual_inf > tol:
        raise StaleCertificate(f"Perron certificate residual {result.residual_inf:.3e} > {tol:g}")


def certificates_thm32(G: UniformHypergraph, alpha: float, result: SpectralResult,
                       tol: float = CERTIFICATE_RESIDUAL) -> tuple[BoundReport, BoundReport]:
    """The two bounds driven by the largest Perron entry ``xbar``::

        rho <= alpha*Delta + (1-alpha)*k*m*xbar^k
        rho <= alpha*Delta + (1-alpha)*(sum_i d_i^(k/(k-1)))^((k-1)/k) * xbar^(k-1)
    """
    alpha = check_alpha(alpha)
    _require_fresh(result, tol)
    k, m = G.k, G.m
    D = max_degree(G)
    xbar = float(np.max(result.perron))
    dsum = float(np.sum(G.degree_array ** (k / (k - 1))))
    a = alpha * D + (1 - alpha) * k * m * xbar ** k
    b = alpha * D + (1 - alpha) * dsum ** ((k - 1) / k) * xbar ** (k - 1)
    regular = is_regular(G)
    rho = result.rho
    eq_a, note_a = _equality(a, rho, regular, True)
    eq_b, note_b = _equality(b, rho, regular, True)
    inputs = {"Delta": D, "k": k, "m": m, "xbar": xbar, "alpha": alpha}
    return (
        BoundReport(BoundName.THM32A, a, inputs, eq_a, True, rho, note_a),
        BoundReport(BoundName.THM32B, b, {**inputs, "degree_power_sum": dsum}, eq_b, True, rho, note_b),
    )


def perron_max_lower_bound(G: UniformHypergraph, rho0: float) -> float:
    """At alpha = 0: ``xbar >= rho0^(1/(k-1)) / (sum_i d_i^(k/(k-1)))^(1/k)``."""
    k = G.k
    dsum = float(np.sum(G.degree_array ** (k / (k - 1))))
    return rho0 ** (1.0 / (k - 1)) / dsum ** (1.0 / k)


# --- bounds for connected irregular hypergraphs -----------------------------

def bound_lgz_irregular(G: UniformHypergraph, alpha: float, D: int | None = None) -> BoundReport:
    """rho < Delta - 4(1-alpha) / (((4D - 1 - 2 alpha)(k-1) + 1) n), D the diameter."""
    alpha = check_alpha(alpha)
    if is_regular(G):
        raise RegularInput("the irregular-hypergraph bound is undefined for regular input")
    if D is None:
        D = diameter(G)
    k, n, Delta = G.k, G.n, max_degree(G)
    value = Delta - 4 * (1 - alpha) / (((4 * D - 1 - 2 * alpha) * (k - 1) + 1) * n)
    inputs = {"Delta": Delta, "D": D, "k": k, "n": n, "alpha": alpha}
    return BoundReport(BoundName.LGZ_IRREGULAR, value, inputs, Equality.NOT_CHARACTERIZED, False)


def bounds_lgz(G: UniformHypergraph, alpha: float,
               result: SpectralResult | None = None) -> list[BoundReport]:
    """The diameter bound for irregular G plus, given a Perron result, the two
    ``xbar``-based refinements (the second only when D = 1 and k >= 3)."""
    alpha = check_alpha(alpha)
    if not is_connected(G):
        raise Disconnected("bounds_lgz requires a connected hypergraph")
    D = diameter(G)
    rho = None if result is None else result.rho
    first = bound_lgz_irregular(G, alpha, D)
    reports = [BoundReport(first.name, first.value, first.inputs, first.equality_case, False, rho)]
    if result is None:
        return reports
    _require_fresh(result, CERTIFICATE_RESIDUAL)
    k, n, m, Delta = G.k, G.n, G.m, max_degree(G)
    xbar = float(np.max(result.perron))
    surplus = n * Delta - k * m
    inputs = {"Delta": Delta, "D": D, "k": k, "n": n, "m": m, "xbar": xbar, "alpha": alpha}
    value = Delta - (1 - alpha) * k * surplus / (2 * surplus * (k - 1) * D + (1 - alpha) * k) * xbar ** k
    reports.append(BoundReport(BoundName.LGZ_XMAX_DIAM, value, inputs, Equality.NOT_CHARACTERIZED, True, rho))
    if D == 1 and k >= 3:
        value = Delta - (1 - alpha) * surplus * n / (2 * surplus * (k - 1) + (1 - alpha) * n) * xbar ** k
        reports.append(BoundReport(BoundName.LGZ_XMAX_D1, value, inputs, Equality.NOT_CHARACTERIZED, True, rho))
    return reports


def all_bounds(G: UniformHypergraph, alpha: float,
               result: SpectralResult | None = None) -> list[BoundReport]:
    """Every bound applicable to a connected G, evaluated against one Perron result."""
    alpha = check_alpha(alpha)
    if result is None:
        result = spectral_radius(G, alpha)
    reports = [
        bound_max_degree(G, alpha, result),
        bound_thm31(G, alpha, result),
        bound_thm31_weak(G, alpha, result),
        *certificates_thm32(G, alpha, result),
    ]
    if not is_regular(G) and G.k < G.n:
        reports.extend(bounds_lgz(G, alpha, result))
    return reports
