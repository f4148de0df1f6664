"""
Neighborhood-counting measures of non-normality and non-commutativity, and QD(G)
"""

import logging
from typing import List, Tuple

from app.core.exceptions import DimensionError, EmptyGraphError, GraphInputError
from app.models.decomposition import BlockDecomposition
from app.models.graph import ClusterLabeling, Graph, Sign
from app.models.matrix import BinaryMatrix
from app.models.report import Condition, DiscordReport, PairContribution, ViolationBreakdown
from app.services.graph_service import GraphService

logger = logging.getLogger(__name__)

Entries = Tuple[Tuple[int, ...], ...]


def _check_orders(a: BinaryMatrix, b: BinaryMatrix):
    if a.order != b.order:
        raise DimensionError(f"matrix orders differ: {a.order} vs {b.order}")


def _check_symmetric(name: str, a: BinaryMatrix):
    if not a.is_symmetric:
        raise GraphInputError(f"{name} must be symmetric")


def _check_entry(a: BinaryMatrix, i: int, j: int):
    if not (1 <= i <= a.order and 1 <= j <= a.order):
        raise GraphInputError(f"entry ({i}, {j}) outside order {a.order}")


class MeasureService:
    """Combinatorial measures; every value is an exact integer"""

    # Entry grids. (AB)_ij = #(row_i(A) & col_j(B)), so each grid equals a
    # commutator or normality defect entrywise.

    @staticmethod
    def nn_entries(block: BinaryMatrix) -> Entries:
        """#(nbd(v_mu i) & nbd(v_mu j)) - #(nbd(v_nu i) & nbd(v_nu j))"""
        rows, cols = block.row_supports, block.column_supports
        n = block.order
        return tuple(
            tuple(len(rows[i] & rows[j]) - len(cols[i] & cols[j]) for j in range(n))
            for i in range(n)
        )

    @staticmethod
    def nc1_entries(a: BinaryMatrix, b: BinaryMatrix) -> Entries:
        """#(nbd(v_mu i) & nbd(v_beta j)) - #(nbd(v_nu j) & nbd(v_alpha i))"""
        _check_orders(a, b)
        a_rows, a_cols = a.row_supports, a.column_supports
        b_rows, b_cols = b.row_supports, b.column_supports
        n = a.order
        return tuple(
            tuple(len(a_rows[i] & b_cols[j]) - len(b_rows[i] & a_cols[j]) for j in range(n))
            for i in range(n)
        )

    @staticmethod
    def nc2_grid(a: BinaryMatrix, b: BinaryMatrix) -> Entries:
        """NC2(A, B)_ij for symmetric A, any B"""
        _check_orders(a, b)
        _check_symmetric("A", a)
        a_nbd = a.row_supports
        b_rows, b_cols = b.row_supports, b.column_supports
        n = a.order
        return tuple(
            tuple(len(a_nbd[i] & b_cols[j]) - len(a_nbd[j] & b_rows[i]) for j in range(n))
            for i in range(n)
        )

    @staticmethod
    def nc3_grid(a: BinaryMatrix, b: BinaryMatrix) -> Entries:
        """NC3(A, B)_ij for symmetric A and B"""
        _check_orders(a, b)
        _check_symmetric("A", a)
        _check_symmetric("B", b)
        a_nbd, b_nbd = a.row_supports, b.row_supports
        n = a.order
        return tuple(
            tuple(len(a_nbd[i] & b_nbd[j]) - len(a_nbd[j] & b_nbd[i]) for j in range(n))
            for i in range(n)
        )

    @staticmethod
    def nn(block: BinaryMatrix) -> int:
        """Non-normality NN(M); 0 iff M M^t = M^t M"""
        return sum(abs(x) for row in MeasureService.nn_entries(block) for x in row)

    @staticmethod
    def nc1(a: BinaryMatrix, b: BinaryMatrix) -> int:
        """Non-commutativity NC1(A, B); 0 iff AB = BA"""
        return sum(abs(x) for row in MeasureService.nc1_entries(a, b) for x in row)

    @staticmethod
    def nc2_entry(a: BinaryMatrix, b: BinaryMatrix, i: int, j: int) -> int:
        """NC2(A, B)_ij = (AB - BA)_ij for symmetric A, 1-based"""
        _check_orders(a, b)
        _check_symmetric("A", a)
        _check_entry(a, i, j)
        a_nbd = a.row_supports
        return len(a_nbd[i - 1] & b.column_supports[j - 1]) - len(a_nbd[j - 1] & b.row_supports[i - 1])

    @staticmethod
    def nc2(a: BinaryMatrix, b: BinaryMatrix) -> int:
        return sum(abs(x) for row in MeasureService.nc2_grid(a, b) for x in row)

    @staticmethod
    def nc3_entry(a: BinaryMatrix, b: BinaryMatrix, i: int, j: int) -> int:
        """NC3(A, B)_ij = (AB - BA)_ij for symmetric A and B, 1-based"""
        _check_orders(a, b)
        _check_symmetric("A", a)
        _check_symmetric("B", b)
        _check_entry(a, i, j)
        a_nbd, b_nbd = a.row_supports, b.row_supports
        return len(a_nbd[i - 1] & b_nbd[j - 1]) - len(a_nbd[j - 1] & b_nbd[i - 1])

    @staticmethod
    def nc3(a: BinaryMatrix, b: BinaryMatrix) -> int:
        return sum(abs(x) for row in MeasureService.nc3_grid(a, b) for x in row)

    # Violation sums over ordered block tuples

    @staticmethod
    def prop2_terms(decomp: BlockDecomposition) -> List[PairContribution]:
        terms = []
        m = decomp.m
        for mu in range(m):
            for nu in range(m):
                if mu == nu:
                    continue
                grid = MeasureService.nn_entries(decomp.blocks[mu][nu])
                terms.extend(_nonzero(Condition.PROP2, mu + 1, (nu + 1,), grid))
        return terms

    @staticmethod
    def prop3_terms(decomp: BlockDecomposition) -> List[PairContribution]:
        terms = []
        pairs = [(mu, nu) for mu in range(decomp.m) for nu in range(decomp.m) if mu != nu]
        for mu, nu in pairs:
            for alpha, beta in pairs:
                if (mu, nu) == (alpha, beta):
                    continue
                grid = MeasureService.nc1_entries(decomp.blocks[mu][nu], decomp.blocks[alpha][beta])
                terms.extend(_nonzero(Condition.PROP3, mu + 1, (nu + 1, alpha + 1, beta + 1), grid))
        return terms

    @staticmethod
    def prop4_terms(decomp: BlockDecomposition, s: Sign) -> List[PairContribution]:
        s = int(Sign(s))
        terms = []
        m, n = decomp.m, decomp.n
        for mu in range(m):
            cluster = decomp.blocks[mu][mu]
            d_mu = decomp.degrees[mu]
            for alpha in range(m):
                for beta in range(m):
                    if alpha == beta:
                        continue
                    cross = decomp.blocks[alpha][beta]
                    nc2 = MeasureService.nc2_grid(cluster, cross)
                    grid = tuple(
                        tuple(
                            cross.entries[i][j] * (d_mu[i] - d_mu[j]) + s * nc2[i][j]
                            for j in range(n)
                        )
                        for i in range(n)
                    )
                    terms.extend(_nonzero(Condition.PROP4, mu + 1, (alpha + 1, beta + 1), grid))
        return terms

    @staticmethod
    def prop5_terms(decomp: BlockDecomposition, s: Sign) -> List[PairContribution]:
        s = int(Sign(s))
        terms = []
        m, n = decomp.m, decomp.n
        for mu in range(m):
            for nu in range(m):
                if mu == nu:
                    continue
                a_mu, a_nu = decomp.blocks[mu][mu], decomp.blocks[nu][nu]
                d_mu, d_nu = decomp.degrees[mu], decomp.degrees[nu]
                nc3 = MeasureService.nc3_grid(a_mu, a_nu)
                grid = tuple(
                    tuple(
                        nc3[i][j] + s * (
                            a_nu.entries[i][j] * (d_mu[i] - d_mu[j])
                            + a_mu.entries[i][j] * (d_nu[j] - d_nu[i])
                        )
                        for j in range(n)
                    )
                    for i in range(n)
                )
                terms.extend(_nonzero(Condition.PROP5, mu + 1, (nu + 1,), grid))
        return terms

    @staticmethod
    def violation_prop2(decomp: BlockDecomposition) -> int:
        return _total(MeasureService.prop2_terms(decomp))

    @staticmethod
    def violation_prop3(decomp: BlockDecomposition) -> int:
        return _total(MeasureService.prop3_terms(decomp))

    @staticmethod
    def violation_prop4(decomp: BlockDecomposition, s: Sign) -> int:
        return _total(MeasureService.prop4_terms(decomp, s))

    @staticmethod
    def violation_prop5(decomp: BlockDecomposition, s: Sign) -> int:
        return _total(MeasureService.prop5_terms(decomp, s))

    @staticmethod
    def breakdown(decomp: BlockDecomposition, s: Sign) -> ViolationBreakdown:
        prop2 = MeasureService.prop2_terms(decomp)
        prop3 = MeasureService.prop3_terms(decomp)
        prop4 = MeasureService.prop4_terms(decomp, s)
        prop5 = MeasureService.prop5_terms(decomp, s)
        return ViolationBreakdown(
            prop2_total=_total(prop2),
            prop3_total=_total(prop3),
            prop4_total=_total(prop4),
            prop5_total=_total(prop5),
            per_pair=tuple(prop2 + prop3 + prop4 + prop5),
        )

    @staticmethod
    def qd_from_decomposition(
        decomp: BlockDecomposition,
        lab: ClusterLabeling,
        s: Sign,
        graph_id: str = ""
    ) -> DiscordReport:
        s = Sign(s)
        breakdown = MeasureService.breakdown(decomp, s)
        total = breakdown.prop2_total + breakdown.prop3_total + breakdown.prop4_total + breakdown.prop5_total
        return DiscordReport(breakdown=breakdown, qd_total=total, sign=s, labeling=lab, graph_id=graph_id)

    @staticmethod
    def qd(g: Graph, lab: ClusterLabeling, s: Sign, graph_id: str = "") -> DiscordReport:
        """Graph theoretic quantum discord QD(G) of rho(G) under the labeling"""
        if g.edge_count == 0:
            raise EmptyGraphError("graph has no edges; QD is defined only for graphs with a density matrix")
        decomp = GraphService.block_decompose(g, lab)
        report = MeasureService.qd_from_decomposition(decomp, lab, s, graph_id)
        logger.debug(f"QD={report.qd_total} for {g!r} (s={int(report.sign):+d})")
        return report

    @staticmethod
    def is_zero_discord(g: Graph, lab: ClusterLabeling, s: Sign) -> bool:
        return MeasureService.qd(g, lab, s).qd_total == 0


def _nonzero(condition: Condition, mu: int, rest: Tuple[int, ...], grid: Entries) -> List[PairContribution]:
    return [
        PairContribution(condition=condition, mu=mu, nu_or_alpha_beta=rest, i=i + 1, j=j + 1, value=value)
        for i, row in enumerate(grid)
        for j, value in enumerate(row)
        if value
    ]


def _total(terms: List[PairContribution]) -> int:
    return sum(abs(term.value) for term in terms)
