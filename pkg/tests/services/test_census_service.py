"""
Tests for graph6 stream census
"""

from app.models.graph import Sign
from app.services.census_service import CensusService


class TestCensus:
    def test_mixed_stream(self):
        records, skipped = CensusService.census(["C~", "C?", "!bad", "", "E???"], 2, 2)
        assert skipped == 1
        assert [r.graph_id for r in records] == ["1", "2", "5"]
        complete, edgeless, wrong_size = records
        assert (complete.qd_l, complete.qd_q) == (0, 0)
        assert complete.zero_discord
        assert edgeless.note == "edgeless"
        assert edgeless.zero_discord is None
        assert wrong_size.note == "N=6 is not m*n=4"

    def test_single_edge_between_clusters(self):
        # edge 1-4 joins slot 1 of cluster 1 to slot 2 of cluster 2
        records, _ = CensusService.census(["CC"], 2, 2, signs=[Sign.LAPLACIAN])
        assert records[0].qd_q is None
        assert records[0].qd_l > 0

    def test_minimum_over_labelings(self):
        records, _ = CensusService.census(["CC"], 2, 2, with_min=True, trials=10, seed=1)
        assert records[0].min_qd == 0

    def test_record_shape(self):
        records, _ = CensusService.census(["C~"], 2, 2)
        assert records[0].to_record() == {
            "graph_id": "1", "graph6": "C~", "qd_l": 0, "qd_q": 0,
            "min_qd": None, "zero_discord": True, "note": "",
        }

    def test_empty_stream(self):
        assert CensusService.census([], 2, 2) == ([], 0)

    def test_four_cycle_across_clusters(self):
        # 1-3-2-4-1: every edge joins the two clusters, a natural K_{2,2}
        records, _ = CensusService.census(["C]"], 2, 2)
        assert (records[0].qd_l, records[0].qd_q) == (0, 0)
