"""
Tests for the labeling search
"""

import pytest

from app.core.exceptions import DimensionError, EmptyGraphError, SearchSpaceError
from app.models.graph import Sign
from app.services.generator_service import GeneratorService
from app.services.graph_service import GraphService
from app.services.measure_service import MeasureService
from app.services.search_service import EXHAUSTIVE, SAMPLED, LabelingSearchService


class TestExhaustive:
    def test_complete_bipartite(self, figure3_g):
        g, _ = figure3_g
        report = LabelingSearchService.search(g, 2, 3, Sign.LAPLACIAN, mode=EXHAUSTIVE)
        assert report.searched == 720
        assert report.min_qd == 0
        assert report.zero_found
        assert report.max_qd >= 80
        assert report.seed is None

    def test_witnesses_reproduce_extremes(self, figure3_h):
        g, _ = figure3_h
        report = LabelingSearchService.search(g, 2, 3, Sign.SIGNLESS)
        assert report.mode == EXHAUSTIVE
        assert MeasureService.qd(g, report.min_witness, Sign.SIGNLESS).qd_total == report.min_qd
        assert MeasureService.qd(g, report.max_witness, Sign.SIGNLESS).qd_total == report.max_qd

    def test_complete_graph_is_labeling_free(self, k4):
        report = LabelingSearchService.search(k4[0], 2, 2, Sign.LAPLACIAN)
        assert report.min_qd == report.max_qd == 0
        assert report.min_witness.is_natural

    def test_final_example_brackets_natural(self, final_example):
        report = LabelingSearchService.search(final_example[0], 2, 2, Sign.LAPLACIAN)
        assert report.searched == 24
        assert report.min_qd <= 8 <= report.max_qd

    def test_above_vertex_cap(self):
        g, _ = GeneratorService.werner_graph(3)
        with pytest.raises(SearchSpaceError):
            LabelingSearchService.search(g, 3, 3, Sign.LAPLACIAN, mode=EXHAUSTIVE)


class TestSampled:
    def test_default_mode_above_cap(self):
        assert LabelingSearchService.default_mode(8) == EXHAUSTIVE
        assert LabelingSearchService.default_mode(9) == SAMPLED

    def test_natural_order_comes_first(self):
        orders = LabelingSearchService.candidate_orders(4, SAMPLED, trials=3, seed=1)
        assert orders[0] == (1, 2, 3, 4)
        assert len(orders) == 4

    def test_seeded(self):
        g, _ = GeneratorService.werner_graph(3)
        first = LabelingSearchService.search(g, 3, 3, Sign.LAPLACIAN, trials=25, seed=5)
        second = LabelingSearchService.search(g, 3, 3, Sign.LAPLACIAN, trials=25, seed=5)
        assert first == second
        assert first.mode == SAMPLED
        assert first.searched == 26
        assert first.seed == 5

    def test_never_worse_than_natural(self, figure3_h):
        g, lab = figure3_h
        natural = MeasureService.qd(g, GraphService.make_labeling(2, 3), Sign.LAPLACIAN).qd_total
        report = LabelingSearchService.search(g, 2, 3, Sign.LAPLACIAN, mode=SAMPLED, trials=10, seed=2)
        assert report.min_qd <= natural <= report.max_qd


class TestRejected:
    def test_edgeless(self):
        with pytest.raises(EmptyGraphError):
            LabelingSearchService.search(GraphService.build_graph(4, []), 2, 2, Sign.LAPLACIAN)

    def test_loops_only(self):
        with pytest.raises(EmptyGraphError):
            LabelingSearchService.search(GraphService.build_graph(4, [], [3]), 2, 2, Sign.SIGNLESS)

    def test_dimension_mismatch(self, k4):
        with pytest.raises(DimensionError):
            LabelingSearchService.search(k4[0], 3, 2, Sign.LAPLACIAN)

    def test_record(self, k4):
        record = LabelingSearchService.search(k4[0], 2, 2, Sign.SIGNLESS).to_record()
        assert record["s"] == 1
        assert record["searched"] == 24
        assert record["min_witness"] == [1, 2, 3, 4]
