"""
Labeling search: min / max QD(G) over vertex-to-cluster assignments
"""

import itertools
import logging
import math
import random
from functools import partial
from typing import Iterable, Tuple

from app.core.config import settings
from app.core.exceptions import DimensionError, EmptyGraphError, SearchSpaceError
from app.core.workers import ordered_map
from app.models.graph import ClusterLabeling, Graph, Sign
from app.models.report import LabelingSearchReport
from app.services.measure_service import MeasureService

logger = logging.getLogger(__name__)

EXHAUSTIVE = "exhaustive"
SAMPLED = "random"


def _qd_for_order(g: Graph, m: int, n: int, s: Sign, order: Tuple[int, ...]) -> int:
    return MeasureService.qd(g, ClusterLabeling(m=m, n=n, order=order), s).qd_total


class LabelingSearchService:
    """Search over labelings of one unlabeled graph"""

    @staticmethod
    def default_mode(vertex_count: int) -> str:
        return EXHAUSTIVE if vertex_count <= settings.CLASSIFY_EXHAUSTIVE_MAX_VERTICES else SAMPLED

    @staticmethod
    def candidate_orders(vertex_count: int, mode: str, trials: int, seed: int) -> Iterable[Tuple[int, ...]]:
        """All N! orders, or the natural order followed by seeded random ones"""
        vertices = range(1, vertex_count + 1)
        if mode == EXHAUSTIVE:
            return itertools.permutations(vertices)
        rng = random.Random(seed)
        orders = [tuple(vertices)]
        orders.extend(tuple(rng.sample(vertices, vertex_count)) for _ in range(trials))
        return orders

    @staticmethod
    def search(
        g: Graph,
        m: int,
        n: int,
        s: Sign,
        mode: str = None,
        trials: int = None,
        seed: int = None
    ) -> LabelingSearchReport:
        """Min and max QD with the first witness of each in enumeration order"""
        s = Sign(s)
        trials = settings.DEFAULT_TRIALS if trials is None else trials
        seed = settings.DEFAULT_SEED if seed is None else seed
        if g.vertex_count != m * n:
            raise DimensionError(f"graph has {g.vertex_count} vertices but m*n = {m}*{n} = {m * n}")
        if g.edge_count == 0:
            raise EmptyGraphError("graph has no edges; QD is undefined for every labeling")
        mode = mode or LabelingSearchService.default_mode(g.vertex_count)
        if mode == EXHAUSTIVE and g.vertex_count > settings.CLASSIFY_EXHAUSTIVE_MAX_VERTICES:
            raise SearchSpaceError(
                f"exhaustive search over {g.vertex_count}! = {math.factorial(g.vertex_count)} labelings "
                f"exceeds the cap of {settings.CLASSIFY_EXHAUSTIVE_MAX_VERTICES} vertices"
            )
        orders = list(LabelingSearchService.candidate_orders(g.vertex_count, mode, trials, seed))
        values = ordered_map(partial(_qd_for_order, g, m, n, s), orders)
        min_index = max_index = 0
        for index, value in enumerate(values):
            if value < values[min_index]:
                min_index = index
            if value > values[max_index]:
                max_index = index
        report = LabelingSearchReport(
            sign=s,
            mode=mode,
            searched=len(orders),
            min_qd=values[min_index],
            max_qd=values[max_index],
            min_witness=ClusterLabeling(m=m, n=n, order=orders[min_index]),
            max_witness=ClusterLabeling(m=m, n=n, order=orders[max_index]),
            seed=seed if mode == SAMPLED else None,
        )
        logger.info(
            f"Searched {report.searched} labelings ({mode}, s={int(s):+d}): "
            f"min QD {report.min_qd}, max QD {report.max_qd}"
        )
        return report
