import math
import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hyperrho.errors import DimensionMismatch, Disconnected, InvalidAlpha, NegativeEntry, NoConvergence, NotKUnit
from hyperrho.extremal import enumerate_hypertrees, random_connected, star_rho_oracle
from hyperrho.families import hyperstar, loose_path
from hyperrho.hypergraph import UniformHypergraph, build, max_degree, relabel
from hyperrho.spectral import (
    alpha_apply,
    eigen_residual,
    k_norm,
    rayleigh,
    rayleigh_edge_form,
    rayleigh_vertex_form,
    rho_any,
    spectral_radius,
)

from oracles import bisect_poly_root, graph_alpha_matrix_rho, power_hypergraph, power_rho0

ALPHAS = (0.0, 0.25, 0.5, 0.75)
STAR_4_3_HALF = 2.17765069880406  # root of r^3 - 3r^2 + 2.25r - 1 on [2, 3]
PATH_3_3 = ((1 + 5 ** 0.5) / 2) ** (2 / 3)


def _k_unit(rng, n, k):
    x = np.array([rng.uniform(0.05, 1.0) for _ in range(n)])
    return x / np.sum(x ** k) ** (1 / k)


@pytest.mark.parametrize("m, k", [(2, 3), (3, 3), (4, 3), (3, 4), (5, 2)])
def test_star_alpha_zero(m, k):
    assert spectral_radius(hyperstar(m, k), 0).rho == pytest.approx(m ** (1 / k), abs=1e-9)


def test_star_half_frozen():
    assert spectral_radius(hyperstar(4, 3), 0.5).rho == pytest.approx(STAR_4_3_HALF, abs=1e-9)
    assert bisect_poly_root([1, -3, 2.25, -1], 2, 3) == pytest.approx(STAR_4_3_HALF, abs=1e-13)


def test_loose_path_frozen():
    assert spectral_radius(loose_path(3, 3), 0).rho == pytest.approx(PATH_3_3, abs=1e-9)


def test_single_edge_is_one():
    for k in (2, 3, 4):
        for a in ALPHAS:
            assert spectral_radius(build(k, k, [range(k)]), a).rho == pytest.approx(1, abs=1e-12)


def test_star_perron_entries_symmetric():
    res = spectral_radius(hyperstar(3, 3), 0.25)
    x = res.perron
    assert x.argmax() == 0
    assert np.allclose(x[1:], x[1])


def test_result_fields():
    res = spectral_radius(loose_path(4, 3), 0.5)
    assert res.alpha == 0.5 and res.iterations >= 1
    lo, hi = res.bracket
    assert lo <= res.rho <= hi
    assert res.residual_inf <= 1e-10
    assert k_norm(res.perron, 3) == pytest.approx(1, abs=1e-12)
    assert np.all(res.perron > 0)


def test_alpha_apply_by_hand():
    G = build(3, 5, [(0, 1, 2), (2, 3, 4)])
    x = np.arange(1, 6, dtype=float)
    y = alpha_apply(G, 0.5, x)
    # vertex 2: alpha*2*9 + (1-alpha)*(1*2 + 4*5)
    assert y[2] == pytest.approx(0.5 * 18 + 0.5 * 22)
    assert y[0] == pytest.approx(0.5 * 1 + 0.5 * 6)


def test_rayleigh_forms_agree():
    rng = random.Random(0)
    G = random_connected(5, 3, 1)
    for a in ALPHAS:
        x = _k_unit(rng, G.n, 3)
        assert rayleigh_vertex_form(G, a, x) == pytest.approx(rayleigh_edge_form(G, a, x), abs=1e-12)


def test_rayleigh_requires_k_unit():
    G = hyperstar(2, 3)
    with pytest.raises(NotKUnit):
        rayleigh(G, 0.0, np.ones(G.n))


@pytest.mark.parametrize("bad, exc", [(np.ones(3), DimensionMismatch), (-np.ones(5), NegativeEntry)])
def test_vector_validation(bad, exc):
    with pytest.raises(exc):
        alpha_apply(hyperstar(2, 3), 0.0, bad)


@pytest.mark.parametrize("a", [-0.1, 1.0, 1.5, float("nan")])
def test_invalid_alpha(a):
    with pytest.raises(InvalidAlpha):
        spectral_radius(hyperstar(2, 3), a)


def test_disconnected_rejected():
    G = build(3, 6, [(0, 1, 2), (3, 4, 5)])
    with pytest.raises(Disconnected):
        spectral_radius(G, 0.0)
    assert rho_any(G, 0.3) == pytest.approx(1, abs=1e-12)


def test_no_convergence():
    with pytest.raises(NoConvergence):
        spectral_radius(loose_path(6, 3), 0.0, max_iter=3)


def test_degree_sandwich_and_rayleigh_maximality():
    rng = random.Random(42)
    for seed in range(12):
        G = random_connected(2 + seed % 5, 2 + seed % 3, seed)
        for a in ALPHAS:
            res = spectral_radius(G, a)
            assert a * max_degree(G) - 1e-12 <= res.rho <= max_degree(G) + 1e-12
            for _ in range(100):
                x = _k_unit(rng, G.n, G.k)
                assert rayleigh(G, a, x) <= res.rho + 1e-10


def test_relabel_invariance():
    G = random_connected(6, 3, 7)
    perm = random.Random(1).sample(range(G.n), G.n)
    H = relabel(G, perm)
    for a in ALPHAS:
        rg, rh = spectral_radius(G, a), spectral_radius(H, a)
        assert rg.rho == pytest.approx(rh.rho, abs=1e-10)
        assert np.allclose(rg.perron, rh.perron[perm], atol=1e-8)


def test_edge_addition_increases_rho():
    G = loose_path(3, 3)
    extra = UniformHypergraph(3, G.n, G.edges + ((0, 3, 6),))
    for a in ALPHAS:
        assert spectral_radius(extra, a).rho > spectral_radius(G, a).rho + 1e-9


def test_monotone_in_alpha_for_irregular():
    G = hyperstar(4, 3)
    values = [spectral_radius(G, a).rho for a in ALPHAS]
    assert values == sorted(values)


def test_graph_case_matches_matrix_eigenvalue():
    for seed in range(20):
        G = random_connected(3 + seed % 6, 2, seed)
        for a in ALPHAS:
            assert spectral_radius(G, a).rho == pytest.approx(graph_alpha_matrix_rho(G, a), abs=1e-9)


@pytest.mark.parametrize("k", [3, 4])
def test_power_hypergraph_oracle(k):
    for m in (3, 4, 5):
        for T in enumerate_hypertrees(m, 2):
            P = power_hypergraph(T, k)
            assert spectral_radius(P, 0).rho == pytest.approx(power_rho0(T, k), abs=1e-9)


@pytest.mark.parametrize("m", range(1, 7))
@pytest.mark.parametrize("k", [2, 3, 4])
@pytest.mark.parametrize("a", [0.0, 0.3, 0.6, 0.9])
def test_star_scalar_oracle(m, k, a):
    assert spectral_radius(hyperstar(m, k), a).rho == pytest.approx(star_rho_oracle(m, k, a), abs=1e-9)


@settings(max_examples=60, deadline=None)
@given(seed=st.integers(0, 100_000), m=st.integers(1, 8), k=st.integers(2, 4),
       a=st.sampled_from(ALPHAS))
def test_converged_result_is_certified(seed, m, k, a):
    G = random_connected(m, k, seed)
    res = spectral_radius(G, a)
    assert res.residual_inf <= 1e-10
    assert np.all(res.perron > 0)
    assert math.isclose(k_norm(res.perron, k), 1, abs_tol=1e-12)
    assert eigen_residual(G, a, res.rho, res.perron) == pytest.approx(res.residual_inf)
    assert rayleigh(G, a, res.perron) == pytest.approx(res.rho, abs=1e-10)


@settings(max_examples=40, deadline=None)
@given(seed=st.integers(0, 100_000), m=st.integers(1, 6), k=st.integers(2, 4))
def test_shift_does_not_change_answer(seed, m, k):
    G = random_connected(m, k, seed)
    assert spectral_radius(G, 0.25, shift=0.5).rho == pytest.approx(
        spectral_radius(G, 0.25, shift=3.0).rho, abs=1e-10)
