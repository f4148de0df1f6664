"""
Oracle service: direct matrix algebra that the combinatorial measures are checked against
"""

import itertools
import logging
import random
from typing import Dict, Iterator, List, Sequence, Tuple, Union

import numpy as np

from app.core.config import settings
from app.core.exceptions import DimensionError, GraphInputError, SearchSpaceError
from app.models.decomposition import BlockDecomposition
from app.models.graph import ClusterLabeling, Graph, Sign
from app.models.matrix import BinaryMatrix, IntMatrix
from app.models.report import BlockConditions, VerificationSummary
from app.services.generator_service import GeneratorService
from app.services.graph_service import GraphService
from app.services.measure_service import MeasureService
from app.services.spectral_service import SpectralService

logger = logging.getLogger(__name__)

AnyMatrix = Union[BinaryMatrix, IntMatrix, np.ndarray]


def _array(matrix: AnyMatrix) -> np.ndarray:
    if isinstance(matrix, np.ndarray):
        return matrix.astype(np.int64, copy=False)
    return matrix.to_array()


def _commutator_l1(a: np.ndarray, b: np.ndarray) -> int:
    return int(np.abs(a @ b - b @ a).sum())


def _normality_l1(a: np.ndarray) -> int:
    return int(np.abs(a @ a.T - a.T @ a).sum())


class OracleService:
    """Exact integer matrix algebra on blocks"""

    @staticmethod
    def commutator_l1(a: AnyMatrix, b: AnyMatrix) -> int:
        """Entrywise L1 norm of AB - BA"""
        a, b = _array(a), _array(b)
        if a.shape != b.shape:
            raise DimensionError(f"matrix orders differ: {a.shape[0]} vs {b.shape[0]}")
        return _commutator_l1(a, b)

    @staticmethod
    def normality_defect_l1(matrix: AnyMatrix) -> int:
        """Entrywise L1 norm of M M^t - M^t M"""
        return _normality_l1(_array(matrix))

    @staticmethod
    def block_matrices(decomp: BlockDecomposition, s: Sign) -> List[List[np.ndarray]]:
        """B_{mu mu} = D_mu + s A_{mu mu} and B_{mu nu} = A_{mu nu} as integer arrays"""
        s = int(Sign(s))
        grid = []
        for mu in range(decomp.m):
            row = []
            for nu in range(decomp.m):
                block = decomp.blocks[mu][nu].to_array()
                if mu == nu:
                    block = np.diag(np.array(decomp.degrees[mu], dtype=np.int64)) + s * block
                row.append(block)
            grid.append(row)
        return grid

    @staticmethod
    def condition_defects(decomp: BlockDecomposition, s: Sign) -> Dict[str, int]:
        """L1 size of every block condition's defect, summed over ordered index tuples"""
        grid = OracleService.block_matrices(decomp, s)
        m = decomp.m
        off = [(mu, nu) for mu in range(m) for nu in range(m) if mu != nu]
        return {
            "prop1": sum(_normality_l1(grid[mu][mu]) for mu in range(m)),
            "prop2": sum(_normality_l1(grid[mu][nu]) for mu, nu in off),
            "prop3": sum(
                _commutator_l1(grid[mu][nu], grid[alpha][beta])
                for mu, nu in off for alpha, beta in off
                if (mu, nu) != (alpha, beta)
            ),
            "prop4": sum(
                _commutator_l1(grid[mu][mu], grid[alpha][beta])
                for mu in range(m) for alpha, beta in off
            ),
            "prop5": sum(_commutator_l1(grid[mu][mu], grid[nu][nu]) for mu, nu in off),
        }

    @staticmethod
    def check_block_conditions(decomp: BlockDecomposition, s: Sign) -> BlockConditions:
        """Evaluate the five block conditions by direct multiplication"""
        defects = OracleService.condition_defects(decomp, s)
        return BlockConditions(**{name: value == 0 for name, value in defects.items()})

    @staticmethod
    def qd_oracle_total(decomp: BlockDecomposition, s: Sign) -> int:
        """QD(G) recomputed from block commutators and normality defects"""
        defects = OracleService.condition_defects(decomp, s)
        return defects["prop2"] + defects["prop3"] + defects["prop4"] + defects["prop5"]

    @staticmethod
    def exhaustive_equivalence(order_bound: int, trials: int = None, seed: int = None) -> VerificationSummary:
        """Check NN / NC1 / NC2 / NC3 against the oracle on every matrix (pair) of small
        order and on seeded random pairs above the exhaustive limit"""
        trials = settings.DEFAULT_TRIALS if trials is None else trials
        seed = settings.DEFAULT_SEED if seed is None else seed
        if order_bound < 1:
            raise GraphInputError(f"order bound must be positive, got {order_bound}")
        if order_bound > settings.SAMPLED_ORDER_LIMIT:
            raise SearchSpaceError(
                f"order bound {order_bound} exceeds the limit {settings.SAMPLED_ORDER_LIMIT}"
            )
        counts = {"nn": 0, "nc1": 0, "nc2": 0, "nc3": 0}
        failures: List[str] = []
        rng = np.random.default_rng(seed)
        for order in range(1, order_bound + 1):
            if order <= settings.EXHAUSTIVE_ORDER_LIMIT:
                matrices = all_binary_matrices(order)
                _check_exhaustive(matrices, counts, failures)
            else:
                _check_sampled(order, trials, rng, counts, failures)
        mode = "exhaustive" if order_bound <= settings.EXHAUSTIVE_ORDER_LIMIT else "sampled"
        summary = VerificationSummary(
            checked=sum(counts.values()),
            mismatches=len(failures),
            mode=mode,
            seed=seed,
            by_measure=counts,
            failures=failures[:20],
        )
        logger.info(
            f"Oracle equivalence up to order {order_bound}: "
            f"{summary.checked} checked, {summary.mismatches} mismatches ({mode})"
        )
        return summary

    @staticmethod
    def qd_equivalence(
        graph_count: int,
        m: int,
        n: int,
        seed: int = None,
        signs: Sequence[Sign] = (Sign.LAPLACIAN, Sign.SIGNLESS)
    ) -> VerificationSummary:
        """Compare QD(G) with the oracle sum on graph_count seeded random graphs with edges"""
        seed = settings.DEFAULT_SEED if seed is None else seed
        checked = 0
        failures: List[str] = []
        for index, (g, lab) in enumerate(_random_graphs_with_edges(graph_count, m, n, seed)):
            decomp = GraphService.block_decompose(g, lab)
            for s in signs:
                measured = MeasureService.qd_from_decomposition(decomp, lab, s).qd_total
                expected = OracleService.qd_oracle_total(decomp, s)
                checked += 1
                if measured != expected:
                    failures.append(f"graph {index} s={int(s):+d}: QD {measured} != oracle {expected}")
                    logger.error(failures[-1])
        summary = VerificationSummary(
            checked=checked,
            mismatches=len(failures),
            mode="sampled",
            seed=seed,
            by_measure={"qd": checked},
            failures=failures[:20],
        )
        logger.info(f"QD oracle check on {graph_count} random graphs: {checked} checked, {summary.mismatches} mismatches")
        return summary

    @staticmethod
    def discord_converse(
        graph_count: int,
        m: int,
        n: int,
        seed: int = None,
        signs: Sequence[Sign] = (Sign.LAPLACIAN, Sign.SIGNLESS),
        tolerance: float = None
    ) -> VerificationSummary:
        """Count states with QD(G) > 0 whose pointer-basis discord is still within tolerance of 0.

        Only the QD > 0 states are checked; each such state with no measurable
        discord counts as a mismatch.
        """
        seed = settings.DEFAULT_SEED if seed is None else seed
        tolerance = settings.ENTROPY_TOLERANCE if tolerance is None else tolerance
        checked = 0
        failures: List[str] = []
        for index, (g, lab) in enumerate(_random_graphs_with_edges(graph_count, m, n, seed)):
            decomp = GraphService.block_decompose(g, lab)
            for s in signs:
                qd = MeasureService.qd_from_decomposition(decomp, lab, s).qd_total
                if qd == 0:
                    continue
                checked += 1
                rho = GraphService.density_matrix(decomp, s)
                discord = SpectralService.pointer_discord(rho, m, n).discord_fixed_basis
                if discord <= tolerance:
                    failures.append(f"graph {index} s={int(s):+d}: QD {qd} but pointer discord {discord:.3g}")
                    logger.warning(failures[-1])
        summary = VerificationSummary(
            checked=checked,
            mismatches=len(failures),
            mode="sampled",
            seed=seed,
            by_measure={"qd_positive": checked},
            failures=failures[:20],
        )
        logger.info(f"Discord converse on {graph_count} random graphs: {checked} with QD > 0, {summary.mismatches} without discord")
        return summary


def _random_graphs_with_edges(graph_count: int, m: int, n: int, seed: int) -> Iterator[Tuple[Graph, ClusterLabeling]]:
    """graph_count seeded G(N, p) draws, redrawing edgeless ones"""
    if m * n < 2:
        raise GraphInputError(f"m*n = {m * n} leaves no room for an edge")
    rng = random.Random(seed)
    produced = 0
    while produced < graph_count:
        g, lab = GeneratorService.random_graph(m, n, rng.random(), seed=rng.randrange(2 ** 32))
        if g.edge_count == 0:
            continue
        produced += 1
        yield g, lab


def all_binary_matrices(order: int) -> List[Tuple[BinaryMatrix, np.ndarray]]:
    """Every order x order binary matrix, paired with its integer array"""
    size = order * order
    if size > 16:
        raise SearchSpaceError(f"2^{size} matrices is too many to enumerate")
    result = []
    for bits in itertools.product((0, 1), repeat=size):
        rows = tuple(tuple(bits[i * order:(i + 1) * order]) for i in range(order))
        matrix = BinaryMatrix(entries=rows)
        result.append((matrix, matrix.to_array()))
    return result


def _record(name: str, measured: int, expected: int, counts: Dict[str, int], failures: List[str], detail):
    counts[name] += 1
    if measured != expected:
        failures.append(f"{name} {detail}: combinatorial {measured} != oracle {expected}")
        logger.error(failures[-1])


def _check_exhaustive(matrices: Sequence[Tuple[BinaryMatrix, np.ndarray]], counts, failures):
    symmetric = [(mat, arr) for mat, arr in matrices if mat.is_symmetric]
    for mat, arr in matrices:
        _record("nn", MeasureService.nn(mat), _normality_l1(arr), counts, failures, mat.entries)
    for a, a_arr in matrices:
        for b, b_arr in matrices:
            _record("nc1", MeasureService.nc1(a, b), _commutator_l1(a_arr, b_arr), counts, failures,
                    (a.entries, b.entries))
    for a, a_arr in symmetric:
        for b, b_arr in matrices:
            _record("nc2", MeasureService.nc2(a, b), _commutator_l1(a_arr, b_arr), counts, failures,
                    (a.entries, b.entries))
        for b, b_arr in symmetric:
            _record("nc3", MeasureService.nc3(a, b), _commutator_l1(a_arr, b_arr), counts, failures,
                    (a.entries, b.entries))


def _random_binary(order: int, rng: np.random.Generator, symmetric: bool = False) -> np.ndarray:
    density = rng.uniform(0.1, 0.9)
    arr = (rng.random((order, order)) < density).astype(np.int64)
    if symmetric:
        upper = np.triu(arr)
        arr = upper + np.triu(upper, 1).T
    return arr


def _check_sampled(order: int, trials: int, rng: np.random.Generator, counts, failures):
    for _ in range(trials):
        a_arr = _random_binary(order, rng)
        b_arr = _random_binary(order, rng)
        s_arr = _random_binary(order, rng, symmetric=True)
        t_arr = _random_binary(order, rng, symmetric=True)
        a = BinaryMatrix.from_rows(a_arr)
        b = BinaryMatrix.from_rows(b_arr)
        s = BinaryMatrix.from_rows(s_arr)
        t = BinaryMatrix.from_rows(t_arr)
        _record("nn", MeasureService.nn(a), _normality_l1(a_arr), counts, failures, a.entries)
        _record("nc1", MeasureService.nc1(a, b), _commutator_l1(a_arr, b_arr), counts, failures,
                (a.entries, b.entries))
        _record("nc2", MeasureService.nc2(s, b), _commutator_l1(s_arr, b_arr), counts, failures,
                (s.entries, b.entries))
        _record("nc3", MeasureService.nc3(s, t), _commutator_l1(s_arr, t_arr), counts, failures,
                (s.entries, t.entries))
