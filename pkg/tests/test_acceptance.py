"""
End-to-end checks over the generated families and the oracle
"""

import random

import pytest

from app.models.graph import ClusterLabeling, Sign
from app.services.generator_service import GeneratorService
from app.services.graph_service import GraphService
from app.services.measure_service import MeasureService
from app.services.oracle_service import OracleService
from app.services.spectral_service import SpectralService


def qd_values(labeled):
    return {s: MeasureService.qd(*labeled, s).qd_total for s in Sign}


ZERO = {Sign.LAPLACIAN: 0, Sign.SIGNLESS: 0}


def test_measures_match_matrix_algebra():
    summary = OracleService.exhaustive_equivalence(10, trials=1429, seed=2024)
    assert summary.passed, summary.failures
    assert summary.mode == "sampled"


@pytest.mark.parametrize("m,n", [(2, 2), (2, 3), (3, 2), (2, 4), (3, 3), (4, 2), (4, 3), (4, 4)])
def test_qd_matches_block_oracle(m, n):
    summary = OracleService.qd_equivalence(100, m, n, seed=m * 100 + n)
    assert summary.passed, summary.failures
    assert summary.checked == 200


@pytest.mark.parametrize("m,n", [(m, n) for m in range(2, 6) for n in range(2, 6)])
def test_complete_graphs_under_any_labeling(m, n):
    g, _ = GeneratorService.complete_graph(m, n)
    rng = random.Random(m * 10 + n)
    for _ in range(20):
        lab = ClusterLabeling(m=m, n=n, order=tuple(rng.sample(range(1, m * n + 1), m * n)))
        assert qd_values((g, lab)) == ZERO


@pytest.mark.parametrize("n", range(1, 9))
def test_complete_bipartite(n):
    assert qd_values(GeneratorService.complete_bipartite(n)) == ZERO


def test_relabeled_complete_bipartite():
    assert qd_values(GeneratorService.figure3_h()) == {Sign.LAPLACIAN: 80, Sign.SIGNLESS: 80}


@pytest.mark.parametrize("n,r", [(n, r) for n in range(1, 9) for r in range(1, n + 1)])
def test_regular_families(n, r):
    assert qd_values(GeneratorService.partially_symmetric_regular(n, r)) == ZERO
    assert qd_values(GeneratorService.partially_symmetric_regular(n, r, seed=n * r)) == ZERO
    assert qd_values(GeneratorService.regular_normal_block(n, r)) == ZERO
    assert qd_values(GeneratorService.regular_normal_block(n, r, seed=n * r)) == ZERO


@pytest.mark.parametrize("d", range(2, 7))
def test_werner_graphs_are_discordant(d):
    labeled = GeneratorService.werner_graph(d)
    assert all(value > 0 for value in qd_values(labeled).values())
    assert not GraphService.is_partially_symmetric(GraphService.block_decompose(*labeled))


@pytest.mark.parametrize("m,n", [(2, 2), (2, 3), (3, 2), (3, 3), (2, 4), (4, 2), (3, 4), (4, 3), (4, 4)])
def test_local_relabeling_invariance(m, n):
    rng = random.Random(m * n)
    compared = 0
    while compared < 100:
        labeled = GeneratorService.random_graph(m, n, rng.uniform(0.2, 0.8), seed=rng.randrange(2 ** 32))
        if labeled[0].edge_count == 0:
            continue
        permutation = rng.sample(range(1, n + 1), n)
        assert qd_values(GeneratorService.local_relabel(*labeled, permutation)) == qd_values(labeled)
        compared += 1


def test_final_example():
    labeled = GeneratorService.final_example()
    decomp = GraphService.block_decompose(*labeled)
    assert GraphService.is_partially_symmetric(decomp)
    for s in Sign:
        report = MeasureService.qd(*labeled, s)
        assert report.qd_total == 8
        assert not report.zero_discord
        rho = GraphService.density_matrix(decomp, s)
        assert SpectralService.pointer_discord(rho, 2, 2).discord_fixed_basis > 1e-3


@pytest.mark.parametrize("labeled", [
    GeneratorService.complete_graph(2, 3),
    GeneratorService.complete_bipartite(4),
    GeneratorService.partially_symmetric_regular(4, 2, seed=1),
    GeneratorService.regular_normal_block(4, 2),
    GeneratorService.regular_normal_block(5, 1),
])
def test_zero_qd_states_have_zero_pointer_discord(labeled):
    _, lab = labeled
    decomp = GraphService.block_decompose(*labeled)
    for s in Sign:
        assert MeasureService.qd(*labeled, s).zero_discord
        rho = GraphService.density_matrix(decomp, s)
        assert SpectralService.validate_density(rho)
        report = SpectralService.pointer_discord(rho, lab.m, lab.n)
        assert report.discord_fixed_basis == pytest.approx(0.0, abs=1e-8)


def generated_graphs():
    yield "final_example", GeneratorService.final_example()
    yield "figure3_h", GeneratorService.figure3_h()
    for d in range(2, 7):
        yield f"werner({d})", GeneratorService.werner_graph(d)
    for m in range(2, 5):
        for n in range(2, 5):
            yield f"complete({m},{n})", GeneratorService.complete_graph(m, n)
    for n in range(1, 7):
        yield f"complete_bipartite({n})", GeneratorService.complete_bipartite(n)
        for r in range(1, n + 1):
            yield f"psr({n},{r})", GeneratorService.partially_symmetric_regular(n, r, seed=n + r)
            yield f"rnb({n},{r})", GeneratorService.regular_normal_block(n, r)
    rng = random.Random(99)
    drawn = 0
    while drawn < 150:
        m, n = rng.randint(1, 4), rng.randint(2, 4)
        labeled = GeneratorService.random_graph(m, n, rng.uniform(0.1, 0.9), seed=rng.randrange(2 ** 32))
        if labeled[0].edge_count:
            drawn += 1
            yield f"random#{drawn}", labeled


@pytest.mark.parametrize("s", list(Sign))
def test_every_generated_state_is_a_density_matrix(s):
    for name, labeled in generated_graphs():
        rho = GraphService.density_matrix(GraphService.block_decompose(*labeled), s)
        check = SpectralService.validate_density(rho)
        assert check, f"{name}: {check.reason}"
