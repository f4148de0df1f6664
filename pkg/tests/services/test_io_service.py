"""
Tests for edge-list and graph6 text, family parameters and renderings
"""

import json

import pytest

from app.core.exceptions import DimensionError, GraphInputError
from app.models.family import Family
from app.models.graph import ClusterLabeling
from app.models.run_config import OutputFormat
from app.services.generator_service import GeneratorService
from app.services.io_service import REPORT_COLUMNS, IOService, parse_permutation

FINAL_TEXT = "4 2 2\n1 3\n1 4\n2 3\n"


class TestEdgeList:
    def test_parse(self, final_example):
        document = IOService.parse_edge_list(FINAL_TEXT)
        assert document.graph == final_example[0]
        assert (document.m, document.n) == (2, 2)
        assert document.permutation is None
        assert document.labeling() == ClusterLabeling.natural(2, 2)

    def test_loops_and_labeling_line(self):
        document = IOService.parse_edge_list("4 2 2\n2 3\n1 1\n4 4\nperm: 1 3 2 4\n")
        assert document.graph.loops == {1, 4}
        assert document.graph.edges == {(2, 3)}
        assert document.labeling().clusters == ((1, 3), (2, 4))

    def test_comments_and_blank_lines(self):
        document = IOService.parse_edge_list("# final example\n\n4 2 2\n\n1 3\n1 4\n2 3\n")
        assert document.graph.edge_count == 3

    def test_header_mismatch(self):
        with pytest.raises(DimensionError):
            IOService.parse_edge_list("5 2 2\n1 2\n")

    @pytest.mark.parametrize("text", [
        "",
        "4 2\n1 2\n",
        "4 2 2\n1 x\n",
        "4 2 2\n1 2 3\n",
        "4 2 2\n1 5\n",
        "4 2 2\n1 2\nperm: 1 1 2 3\n",
        "4 2 2\nperm: 1 2 3 4\nperm: 1 2 3 4\n",
    ])
    def test_malformed(self, text):
        with pytest.raises(GraphInputError):
            IOService.parse_edge_list(text)

    @pytest.mark.parametrize("labeled", [
        GeneratorService.figure3_h(),
        GeneratorService.werner_graph(3),
        GeneratorService.partially_symmetric_regular(5, 2, seed=4),
    ])
    def test_emit_then_parse(self, labeled):
        g, lab = labeled
        document = IOService.parse_edge_list(IOService.format_edge_list(g, lab))
        assert document.graph == g
        assert document.labeling() == lab

    def test_format(self, final_example):
        assert IOService.format_edge_list(*final_example) == "4 2 2\n1 3\n1 4\n2 3\nperm: 1 2 3 4\n"


class TestGraph6:
    def test_complete_graph(self):
        g = IOService.parse_graph6("C~")
        assert g.vertex_count == 4
        assert g.edge_count == 6

    def test_edgeless(self):
        g = IOService.parse_graph6("C?")
        assert g.vertex_count == 4
        assert g.edge_count == 0

    def test_header_is_accepted(self):
        assert IOService.parse_graph6(">>graph6<<C~").edge_count == 6

    @pytest.mark.parametrize("line", ["C", "", "~?@?", "C!", "Cab"])
    def test_malformed(self, line):
        with pytest.raises(GraphInputError):
            IOService.parse_graph6(line)

    def test_format(self, k4):
        assert IOService.format_graph6(k4[0]) == "C~"

    def test_format_then_parse(self, figure3_h):
        g = figure3_h[0]
        assert IOService.parse_graph6(IOService.format_graph6(g)) == g

    def test_loops_cannot_be_encoded(self, werner2):
        with pytest.raises(GraphInputError):
            IOService.format_graph6(werner2[0])


class TestFamilyParameters:
    def test_werner(self):
        spec = IOService.parse_family("werner", "d=3")
        assert spec.family is Family.WERNER
        assert spec.d == 3

    def test_random(self):
        spec = IOService.parse_family("random", "m=2, n=3, p=0.25, seed=8")
        assert (spec.m, spec.n, spec.p, spec.seed) == (2, 3, 0.25, 8)

    def test_permutation(self):
        spec = IOService.parse_family("complete_bipartite", "n=3,permutation=1 4 5 2 3 6")
        assert spec.permutation == (1, 4, 5, 2, 3, 6)

    def test_no_parameters(self):
        assert IOService.parse_family("final_example").family is Family.FINAL_EXAMPLE

    @pytest.mark.parametrize("name,params", [
        ("hypercube", "n=3"),
        ("werner", "d=three"),
        ("werner", "q=3"),
        ("werner", "d"),
        ("werner", None),
        ("random", "m=2,n=2,p=2.0"),
    ])
    def test_rejected(self, name, params):
        with pytest.raises(GraphInputError):
            IOService.parse_family(name, params)

    def test_permutation_line(self):
        assert parse_permutation("perm: 2 1 3") == (2, 1, 3)
        with pytest.raises(GraphInputError):
            parse_permutation("perm:")


class TestRender:
    RECORDS = [
        {"graph_id": "g", "m": 2, "n": 2, "s": -1, "prop2": 0, "prop3": 0, "prop4": 8, "prop5": 0,
         "qd": 8, "zero_discord": False, "per_pair": []},
    ]

    def test_json(self):
        assert json.loads(IOService.render(self.RECORDS, OutputFormat.JSON)) == self.RECORDS

    def test_csv_columns(self):
        lines = IOService.render(self.RECORDS, OutputFormat.CSV, REPORT_COLUMNS).splitlines()
        assert lines[0] == "graph_id,m,n,s,prop2,prop3,prop4,prop5,qd,zero_discord"
        assert lines[1] == "g,2,2,-1,0,0,8,0,8,false"

    def test_plain(self):
        text = IOService.render({"checked": 14, "mismatches": 0, "witness": [1, 2]}, OutputFormat.PLAIN)
        assert text == "checked=14 mismatches=0 witness=1 2"
