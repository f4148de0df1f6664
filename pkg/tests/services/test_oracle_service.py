"""
Tests for the matrix oracle and its agreement with the counting measures
"""

import pytest
from hypothesis import given
from hypothesis import settings as hypothesis_settings

from app.core.exceptions import DimensionError, GraphInputError, SearchSpaceError
from app.models.graph import Sign
from app.models.matrix import BinaryMatrix, IntMatrix
from app.services.generator_service import GeneratorService
from app.services.graph_service import GraphService
from app.services.measure_service import MeasureService
from app.services.oracle_service import OracleService, all_binary_matrices
from tests.strategies import binary_matrices, labeled_graphs, matrix_pairs


class TestCommutator:
    def test_self(self):
        a = BinaryMatrix.from_rows([[1, 0, 1], [0, 0, 1], [1, 1, 0]])
        assert OracleService.commutator_l1(a, a) == 0

    def test_diagonal_against_cross_block(self):
        d = IntMatrix(entries=((2, 0), (0, 1)))
        a = BinaryMatrix.from_rows([[1, 1], [1, 0]])
        assert OracleService.commutator_l1(d, a) == 2

    def test_path_and_ends(self):
        p3 = BinaryMatrix.from_rows([[0, 1, 0], [1, 0, 1], [0, 1, 0]])
        ends = BinaryMatrix.from_rows([[0, 0, 1], [0, 0, 0], [1, 0, 0]])
        assert OracleService.commutator_l1(p3, ends) == 4

    def test_order_mismatch(self):
        with pytest.raises(DimensionError):
            OracleService.commutator_l1(BinaryMatrix.zeros(2), BinaryMatrix.zeros(3))


class TestNormalityDefect:
    def test_symmetric(self, example_matrix):
        assert OracleService.normality_defect_l1(example_matrix) == 0

    def test_single_entry(self):
        assert OracleService.normality_defect_l1(BinaryMatrix.from_rows([[0, 0], [1, 0]])) == 2

    def test_permutation_pattern(self):
        cycle = BinaryMatrix.from_rows([[0, 1, 0], [0, 0, 1], [1, 0, 0]])
        assert OracleService.normality_defect_l1(cycle) == 0


class TestBlockConditions:
    def test_complete_graph(self, k4):
        d = GraphService.block_decompose(*k4)
        for s in Sign:
            assert OracleService.check_block_conditions(d, s).all_hold

    def test_werner(self):
        d = GraphService.block_decompose(*GeneratorService.werner_graph(3))
        conditions = OracleService.check_block_conditions(d, Sign.LAPLACIAN)
        assert not conditions.prop2
        assert conditions.prop1

    def test_final_example(self, final_decomposition):
        conditions = OracleService.check_block_conditions(final_decomposition, Sign.LAPLACIAN)
        assert not conditions.prop4
        assert conditions.prop1 and conditions.prop2 and conditions.prop3 and conditions.prop5

    @pytest.mark.parametrize("s", list(Sign))
    def test_oracle_total_relabeled_complete_bipartite(self, figure3_h, s):
        assert OracleService.qd_oracle_total(GraphService.block_decompose(*figure3_h), s) == 80

    @hypothesis_settings(max_examples=60, deadline=None)
    @given(labeled_graphs(loops=True))
    def test_prop1_always_holds(self, labeled):
        d = GraphService.block_decompose(*labeled)
        assert OracleService.check_block_conditions(d, Sign.SIGNLESS).prop1

    @hypothesis_settings(max_examples=80, deadline=None)
    @given(labeled_graphs(loops=True))
    def test_qd_matches_oracle(self, labeled):
        g, lab = labeled
        d = GraphService.block_decompose(g, lab)
        for s in Sign:
            assert MeasureService.qd(g, lab, s).qd_total == OracleService.qd_oracle_total(d, s)


class TestMeasureEquivalence:
    @hypothesis_settings(max_examples=200, deadline=None)
    @given(binary_matrices())
    def test_nn(self, m):
        assert MeasureService.nn(m) == OracleService.normality_defect_l1(m)

    @hypothesis_settings(max_examples=200, deadline=None)
    @given(matrix_pairs())
    def test_nc1(self, pair):
        assert MeasureService.nc1(*pair) == OracleService.commutator_l1(*pair)

    @hypothesis_settings(max_examples=200, deadline=None)
    @given(matrix_pairs(symmetric_a=True))
    def test_nc2(self, pair):
        assert MeasureService.nc2(*pair) == OracleService.commutator_l1(*pair)

    @hypothesis_settings(max_examples=200, deadline=None)
    @given(matrix_pairs(symmetric_a=True, symmetric_b=True))
    def test_nc3(self, pair):
        assert MeasureService.nc3(*pair) == OracleService.commutator_l1(*pair)


class TestExhaustiveEquivalence:
    def test_order_one_is_vacuous(self):
        summary = OracleService.exhaustive_equivalence(1)
        assert summary.passed
        assert summary.mode == "exhaustive"
        assert summary.by_measure == {"nn": 2, "nc1": 4, "nc2": 4, "nc3": 4}

    def test_order_two(self):
        summary = OracleService.exhaustive_equivalence(2)
        assert summary.mismatches == 0
        assert summary.by_measure["nn"] == 2 + 16
        assert summary.by_measure["nc1"] == 4 + 256
        assert summary.by_measure["nc2"] == 2 * 2 + 8 * 16
        assert summary.by_measure["nc3"] == 2 * 2 + 8 * 8
        assert summary.checked == sum(summary.by_measure.values())

    def test_matrix_enumeration(self):
        assert len(all_binary_matrices(3)) == 512
        assert sum(1 for matrix, _ in all_binary_matrices(3) if matrix.is_symmetric) == 64

    def test_sampled_orders(self):
        summary = OracleService.exhaustive_equivalence(5, trials=40, seed=11)
        assert summary.passed
        assert summary.mode == "sampled"
        assert summary.seed == 11
        assert summary.by_measure["nn"] == 2 + 16 + 512 + 2 * 40

    def test_sampling_is_seeded(self):
        first = OracleService.exhaustive_equivalence(4, trials=20, seed=3)
        second = OracleService.exhaustive_equivalence(4, trials=20, seed=3)
        assert first == second

    def test_bound_above_limit(self):
        with pytest.raises(SearchSpaceError):
            OracleService.exhaustive_equivalence(11)

    def test_bound_must_be_positive(self):
        with pytest.raises(GraphInputError):
            OracleService.exhaustive_equivalence(0)

    def test_record_shape(self):
        record = OracleService.exhaustive_equivalence(1, seed=5).to_record()
        assert record == {"checked": 14, "mismatches": 0, "mode": "exhaustive", "seed": 5}


class TestQDEquivalence:
    def test_random_graphs(self):
        summary = OracleService.qd_equivalence(30, 2, 3, seed=4)
        assert summary.passed
        assert summary.checked == 60

    def test_single_sign(self):
        summary = OracleService.qd_equivalence(10, 3, 2, seed=9, signs=[Sign.SIGNLESS])
        assert summary.checked == 10

    def test_tiny_shape_rejected(self):
        with pytest.raises(GraphInputError):
            OracleService.qd_equivalence(5, 1, 1)


class TestDiscordConverse:
    @pytest.mark.parametrize("m,n", [(2, 2), (2, 3), (3, 2)])
    def test_positive_qd_states_carry_discord(self, m, n):
        summary = OracleService.discord_converse(60, m, n, seed=m * 10 + n)
        assert summary.passed, summary.failures
        assert summary.checked > 0
        assert summary.by_measure == {"qd_positive": summary.checked}

    def test_zero_qd_states_are_not_counted(self):
        summary = OracleService.discord_converse(1, 1, 2, seed=3)
        assert summary.checked == 0
        assert summary.passed
