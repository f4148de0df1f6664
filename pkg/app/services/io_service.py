"""
Text formats: edge lists, graph6, family parameters and report renderings
"""

import csv
import io
import json
import logging
from typing import Dict, List, Optional, Sequence, Tuple, Union

import networkx as nx
from pydantic import ValidationError

from app.core.exceptions import DimensionError, GraphInputError
from app.models.family import Family, FamilySpec
from app.models.graph import ClusterLabeling, EdgeListDocument, Graph
from app.models.run_config import OutputFormat
from app.services.graph_service import GraphService

logger = logging.getLogger(__name__)

REPORT_COLUMNS = ("graph_id", "m", "n", "s", "prop2", "prop3", "prop4", "prop5", "qd", "zero_discord")
ENTROPY_COLUMNS = ("discord_computational", "discord_pointer")

GRAPH6_HEADER = ">>graph6<<"

_INT_PARAMS = {"m", "n", "d", "r", "seed"}
_FLOAT_PARAMS = {"p"}


def _ints(tokens: Sequence[str], where: str) -> List[int]:
    try:
        return [int(token) for token in tokens]
    except ValueError:
        raise GraphInputError(f"expected integers in {where}, got {' '.join(tokens)!r}") from None


def parse_permutation(text: str) -> Tuple[int, ...]:
    """Whitespace separated vertices, optionally after a "perm:" prefix"""
    text = text.strip()
    if text.startswith("perm:"):
        text = text[len("perm:"):]
    values = _ints(text.split(), "permutation")
    if not values:
        raise GraphInputError("empty permutation")
    return tuple(values)


class IOService:
    """Parsing and emission of graphs and reports"""

    @staticmethod
    def parse_edge_list(text: str) -> EdgeListDocument:
        """First line "N m n", then "u v" per edge ("u u" for a loop), optional "perm: ..." line"""
        lines = [line.strip() for line in text.splitlines()]
        lines = [line for line in lines if line and not line.startswith("#")]
        if not lines:
            raise GraphInputError("edge list is empty")
        header = _ints(lines[0].split(), "header")
        if len(header) != 3:
            raise GraphInputError(f"header must be 'N m n', got {lines[0]!r}")
        vertex_count, m, n = header
        if m < 1 or n < 1:
            raise GraphInputError(f"m and n must be positive, got m={m}, n={n}")
        if vertex_count != m * n:
            raise DimensionError(f"header declares N={vertex_count} but m*n = {m}*{n} = {m * n}")
        edges, loops = [], []
        permutation = None
        for number, line in enumerate(lines[1:], start=2):
            if line.startswith("perm:"):
                if permutation is not None:
                    raise GraphInputError(f"line {number}: second labeling line")
                permutation = parse_permutation(line)
                continue
            pair = _ints(line.split(), f"line {number}")
            if len(pair) != 2:
                raise GraphInputError(f"line {number}: expected 'u v', got {line!r}")
            u, v = pair
            if u == v:
                loops.append(u)
            else:
                edges.append((u, v))
        graph = GraphService.build_graph(vertex_count, edges, loops)
        if permutation is not None:
            GraphService.make_labeling(m, n, permutation)
        try:
            return EdgeListDocument(graph=graph, m=m, n=n, permutation=permutation)
        except ValidationError as e:
            raise GraphInputError(f"Invalid edge list: {e.errors()[0]['msg']}") from e

    @staticmethod
    def format_edge_list(g: Graph, lab: ClusterLabeling) -> str:
        """Canonical edge-list text, labeling line included"""
        if g.vertex_count != lab.vertex_count:
            raise DimensionError(f"graph has {g.vertex_count} vertices but labeling covers {lab.vertex_count}")
        lines = [f"{g.vertex_count} {lab.m} {lab.n}"]
        lines.extend(f"{u} {v}" for u, v in sorted(g.edges))
        lines.extend(f"{v} {v}" for v in sorted(g.loops))
        lines.append("perm: " + " ".join(map(str, lab.order)))
        return "\n".join(lines) + "\n"

    @staticmethod
    def parse_graph6(line: str) -> Graph:
        """Decode a short-form graph6 line (N <= 62, no loops)"""
        text = line.strip()
        if text.startswith(GRAPH6_HEADER):
            text = text[len(GRAPH6_HEADER):]
        if not text:
            raise GraphInputError("empty graph6 line")
        if text[0] == "~":
            raise GraphInputError("long-form graph6 (N > 62) is not supported")
        if any(not 63 <= ord(c) <= 126 for c in text):
            raise GraphInputError(f"graph6 line {text!r} has characters outside '?'..'~'")
        try:
            decoded = nx.from_graph6_bytes(text.encode("ascii"))
        except (nx.NetworkXError, ValueError) as e:
            raise GraphInputError(f"malformed graph6 line {text!r}: {e}") from e
        edges = [(u + 1, v + 1) for u, v in decoded.edges()]
        return GraphService.build_graph(decoded.number_of_nodes(), edges)

    @staticmethod
    def format_graph6(g: Graph) -> str:
        if g.loops:
            raise GraphInputError("graph6 cannot carry loops; use the edge-list format")
        if g.vertex_count > 62:
            raise GraphInputError("graph6 short form holds at most 62 vertices")
        graph = nx.Graph()
        graph.add_nodes_from(range(g.vertex_count))
        graph.add_edges_from((u - 1, v - 1) for u, v in g.edges)
        return nx.to_graph6_bytes(graph, header=False).decode("ascii").strip()

    @staticmethod
    def parse_family(name: str, params: Optional[str] = None) -> FamilySpec:
        """Family name plus "k=v,k=v" parameters; a permutation is space separated"""
        try:
            family = Family(name)
        except ValueError:
            choices = ", ".join(f.value for f in Family)
            raise GraphInputError(f"unknown family {name!r}, expected one of: {choices}") from None
        values: Dict[str, object] = {}
        for item in (params or "").split(","):
            item = item.strip()
            if not item:
                continue
            key, sep, raw = item.partition("=")
            key, raw = key.strip(), raw.strip()
            if not sep:
                raise GraphInputError(f"parameter {item!r} is not key=value")
            if key in _INT_PARAMS:
                values[key] = _ints([raw], f"parameter {key}")[0]
            elif key in _FLOAT_PARAMS:
                try:
                    values[key] = float(raw)
                except ValueError:
                    raise GraphInputError(f"parameter {key} must be a number, got {raw!r}") from None
            elif key == "permutation":
                values[key] = parse_permutation(raw)
            else:
                raise GraphInputError(f"unknown parameter {key!r}")
        try:
            return FamilySpec(family=family, **values)
        except ValidationError as e:
            raise GraphInputError(f"Invalid family parameters: {e.errors()[0]['msg']}") from e

    @staticmethod
    def render(payload: Union[dict, List[dict]], fmt: OutputFormat, columns: Optional[Sequence[str]] = None) -> str:
        """Serialize one record or a list of records"""
        fmt = OutputFormat(fmt)
        if fmt is OutputFormat.JSON:
            return json.dumps(payload, indent=2)
        records = [payload] if isinstance(payload, dict) else list(payload)
        if columns is None:
            columns = list(records[0].keys()) if records else list(REPORT_COLUMNS)
        if fmt is OutputFormat.CSV:
            buffer = io.StringIO()
            writer = csv.DictWriter(buffer, fieldnames=list(columns), extrasaction="ignore", lineterminator="\n")
            writer.writeheader()
            for record in records:
                writer.writerow({key: _flat(record.get(key)) for key in columns})
            return buffer.getvalue().rstrip("\n")
        return "\n".join(
            " ".join(f"{key}={_flat(record.get(key))}" for key in columns)
            for record in records
        )


def _flat(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (list, tuple)):
        return " ".join(map(str, value))
    return str(value)
