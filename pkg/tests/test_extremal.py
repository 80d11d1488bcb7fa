import pytest

from hyperrho.errors import ChainViolation, ExtremalMismatch, InvalidParams, ScaleExceeded
from hyperrho.extremal import (
    FamilyConstraint,
    enumerate_hypercacti,
    enumerate_hypertrees,
    feasible_params,
    random_connected,
    star_rho_oracle,
    verify_broom_chain,
    verify_extremal,
)
from hyperrho.families import broom_S, hyperstar, loose_path
from hyperrho.hypergraph import classify, is_connected, isomorphic
from hyperrho.spectral import spectral_radius

from oracles import nx_dedupe_count

# unlabeled trees with m edges (k = 2)
TREE_COUNTS = {1: 1, 2: 1, 3: 2, 4: 3, 5: 6, 6: 11}


@pytest.mark.parametrize("m", sorted(TREE_COUNTS))
def test_graph_tree_counts(m):
    assert len(enumerate_hypertrees(m, 2)) == TREE_COUNTS[m]


@pytest.mark.parametrize("m, k", [(2, 3), (3, 3), (4, 3), (5, 3), (3, 4), (4, 4)])
def test_hypertree_classes_match_vf2_dedupe(m, k):
    classes = enumerate_hypertrees(m, k)
    assert nx_dedupe_count(classes) == len(classes)
    for G in classes:
        assert classify(G).is_hypertree and G.m == m


def test_hypertree_count_frozen():
    assert [len(enumerate_hypertrees(m, 3)) for m in range(2, 7)] == [1, 2, 4, 8, 19]


@pytest.mark.parametrize("m, r, count", [(2, 1, 1), (3, 1, 3), (4, 1, 10), (4, 2, 3)])
def test_cactus_counts(m, r, count):
    classes = enumerate_hypercacti(m, 3, r)
    assert len(classes) == count
    assert nx_dedupe_count(classes) == count
    for G in classes:
        c = classify(G)
        assert c.is_hypercactus and c.cycle_count == r


def test_scale_guard():
    with pytest.raises(ScaleExceeded):
        enumerate_hypertrees(9, 3)
    with pytest.raises(ScaleExceeded):
        enumerate_hypercacti(6, 3, 1)


def test_star_oracle_alpha_zero():
    assert star_rho_oracle(4, 3, 0.0) == pytest.approx(4 ** (1 / 3))


def test_verify_hypertrees_report():
    rep = verify_extremal(FamilyConstraint("hypertree", 4, 3))
    assert rep.ok and len(rep.classes) == 4
    assert isomorphic(rep.winner(), hyperstar(4, 3))
    assert rep.rhos.shape == (4, 4)


def test_verify_diameter_and_pendant():
    for d in feasible_params("diameter", 5, 3):
        assert verify_extremal(FamilyConstraint("diameter", 5, 3, d)).ok
    for t in feasible_params("pendant", 5, 3):
        assert verify_extremal(FamilyConstraint("pendant", 5, 3, t)).ok


def test_feasible_params():
    assert feasible_params("diameter", 4, 3) == [2, 3, 4]
    assert feasible_params("pendant", 4, 3) == [2, 3, 4]
    assert feasible_params("hypercactus", 4, 3) == [1, 2]
    with pytest.raises(InvalidParams):
        feasible_params("hypertree", 4, 3)


def test_wrong_expectation_raises(monkeypatch):
    c = FamilyConstraint("hypertree", 3, 3)
    monkeypatch.setattr(FamilyConstraint, "expected", lambda self: loose_path(3, 3))
    with pytest.raises(ExtremalMismatch) as info:
        verify_extremal(c)
    assert not info.value.report.match
    assert not verify_extremal(c, strict=False).ok


def test_empty_class_rejected():
    with pytest.raises(InvalidParams):
        verify_extremal(FamilyConstraint("diameter", 3, 3, 5))


def test_broom_chain_and_violation(monkeypatch):
    assert verify_broom_chain(5, 3)
    import hyperrho.extremal as ext
    monkeypatch.setattr(ext, "broom_S", lambda m, d, k: broom_S(m, m + 2 - d, k))
    with pytest.raises(ChainViolation):
        verify_broom_chain(5, 3)


def test_random_connected_deterministic_and_connected():
    assert random_connected(6, 3, 17) == random_connected(6, 3, 17)
    for seed in range(1000):
        G = random_connected(1 + seed % 8, 2 + seed % 3, seed)
        assert G.m == 1 + seed % 8
        assert is_connected(G)


def test_unicyclic_winner():
    for m in (2, 3):
        rep = verify_extremal(FamilyConstraint("unicyclic", m, 3))
        assert rep.ok
        for v in rep.verdicts:
            assert v.rho_winner == pytest.approx(spectral_radius(rep.expected, v.alpha).rho)
