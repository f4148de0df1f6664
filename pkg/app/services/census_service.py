"""
Census of graph6 streams: QD(G) of every graph under the natural labeling
"""

import logging
from functools import partial
from typing import Iterable, List, Optional, Tuple

from app.core.exceptions import GraphInputError
from app.core.workers import ordered_map
from app.models.graph import ClusterLabeling, Sign
from app.models.report import CensusRecord
from app.services.io_service import IOService
from app.services.measure_service import MeasureService
from app.services.search_service import LabelingSearchService

logger = logging.getLogger(__name__)


def _census_line(
    m: int,
    n: int,
    signs: Tuple[Sign, ...],
    with_min: bool,
    trials: int,
    seed: int,
    item: Tuple[int, str]
) -> Optional[CensusRecord]:
    number, line = item
    try:
        g = IOService.parse_graph6(line)
    except GraphInputError as e:
        logger.warning(f"Skipping line {number}: {e}")
        return None
    graph6 = line.strip()
    graph_id = str(number)
    if g.vertex_count != m * n:
        return CensusRecord(graph_id=graph_id, graph6=graph6, note=f"N={g.vertex_count} is not m*n={m * n}")
    if g.edge_count == 0:
        return CensusRecord(graph_id=graph_id, graph6=graph6, note="edgeless")
    lab = ClusterLabeling.natural(m, n)
    values = {s: MeasureService.qd(g, lab, s, graph_id).qd_total for s in signs}
    min_qd = None
    if with_min:
        min_qd = min(LabelingSearchService.search(g, m, n, s, trials=trials, seed=seed).min_qd for s in signs)
    return CensusRecord(
        graph_id=graph_id,
        graph6=graph6,
        qd_l=values.get(Sign.LAPLACIAN),
        qd_q=values.get(Sign.SIGNLESS),
        min_qd=min_qd,
    )


class CensusService:
    """Runs QD over a stream of graph6 lines, in input order"""

    @staticmethod
    def census(
        lines: Iterable[str],
        m: int,
        n: int,
        signs: Iterable[Sign] = (Sign.LAPLACIAN, Sign.SIGNLESS),
        with_min: bool = False,
        trials: int = None,
        seed: int = None
    ) -> Tuple[List[CensusRecord], int]:
        """Records for every decodable line, plus the number of skipped lines"""
        items = [
            (number, line)
            for number, line in enumerate(lines, start=1)
            if line.strip()
        ]
        worker = partial(_census_line, m, n, tuple(Sign(s) for s in signs), with_min, trials, seed)
        results = ordered_map(worker, items)
        records = [record for record in results if record is not None]
        skipped = len(results) - len(records)
        logger.info(f"Census of {len(items)} graphs: {len(records)} reported, {skipped} skipped")
        return records, skipped
