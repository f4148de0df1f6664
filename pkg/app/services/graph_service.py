"""
Graph service: construction, cluster labelings and the block / density-matrix decomposition
"""

import logging
from enum import Enum
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Set, Tuple

from pydantic import ValidationError

from app.core.exceptions import DimensionError, EmptyGraphError, GraphInputError
from app.models.decomposition import BlockDecomposition, DensityMatrix
from app.models.graph import ClusterLabeling, Graph, Sign
from app.models.matrix import BinaryMatrix, IntMatrix

logger = logging.getLogger(__name__)


class Side(str, Enum):
    """Which side of a block a neighborhood is read from"""
    ROW = "row"
    COLUMN = "column"


def _first_error(exc: ValidationError) -> str:
    errors = exc.errors()
    return errors[0]["msg"] if errors else str(exc)


class GraphService:
    """Graph construction and decomposition"""

    @staticmethod
    def build_graph(
        vertex_count: int,
        edge_list: Iterable[Tuple[int, int]],
        loop_list: Iterable[int] = ()
    ) -> Graph:
        """Build a graph, deduplicating unordered edges and loops"""
        edges = set()
        for u, v in edge_list:
            if u == v:
                raise GraphInputError(f"self-pair ({u}, {v}) in edge list; pass it as a loop")
            edges.add((min(u, v), max(u, v)))
        try:
            return Graph(vertex_count=vertex_count, edges=frozenset(edges), loops=frozenset(loop_list))
        except ValidationError as e:
            raise GraphInputError(f"Invalid graph: {_first_error(e)}") from e

    @staticmethod
    def make_labeling(m: int, n: int, permutation: Optional[Sequence[int]] = None) -> ClusterLabeling:
        """Fill clusters row-major from the permutation (identity when omitted)"""
        if permutation is None:
            permutation = range(1, m * n + 1)
        try:
            return ClusterLabeling(m=m, n=n, order=tuple(permutation))
        except ValidationError as e:
            raise GraphInputError(f"Invalid labeling: {_first_error(e)}") from e

    @staticmethod
    def block_decompose(g: Graph, lab: ClusterLabeling) -> BlockDecomposition:
        """Split A(G) into the m x m grid A_{mu nu} under the labeling"""
        if g.vertex_count != lab.vertex_count:
            raise DimensionError(
                f"graph has {g.vertex_count} vertices but m*n = {lab.m}*{lab.n} = {lab.vertex_count}"
            )
        m, n = lab.m, lab.n
        blocks = tuple(
            tuple(
                BinaryMatrix(entries=tuple(
                    tuple(
                        int(g.has_edge(lab.vertex_at(mu, i), lab.vertex_at(nu, j)))
                        for j in range(1, n + 1)
                    )
                    for i in range(1, n + 1)
                ))
                for nu in range(1, m + 1)
            )
            for mu in range(1, m + 1)
        )
        degrees = tuple(
            tuple(g.degree(lab.vertex_at(mu, i)) for i in range(1, n + 1))
            for mu in range(1, m + 1)
        )
        decomp = BlockDecomposition(
            m=m, n=n, blocks=blocks, degrees=degrees, total_degree=sum(map(sum, degrees))
        )
        logger.debug(f"Decomposed {g!r} into {decomp!r}")
        return decomp

    @staticmethod
    def neighborhood(block: BinaryMatrix, side: Side, index: int) -> Set[int]:
        """nbd(v_{mu i}) (row side) or nbd(v_{nu i}) (column side), 1-based"""
        if not 1 <= index <= block.order:
            raise GraphInputError(f"index {index} outside [1, {block.order}]")
        supports = block.row_supports if Side(side) is Side.ROW else block.column_supports
        return {j + 1 for j in supports[index - 1]}

    @staticmethod
    def edge_characteristic(decomp: BlockDecomposition, mu: int, nu: int, i: int, j: int) -> int:
        """X_{mu nu}(i, j): 1 iff (v_{mu i}, v_{nu j}) is an edge (or a loop when equal)"""
        m, n = decomp.m, decomp.n
        if not (1 <= mu <= m and 1 <= nu <= m and 1 <= i <= n and 1 <= j <= n):
            raise GraphInputError(f"index ({mu}, {nu}, {i}, {j}) outside m={m}, n={n}")
        return decomp.block(mu, nu).entries[i - 1][j - 1]

    @staticmethod
    def laplacian_matrix(decomp: BlockDecomposition, s: Sign) -> IntMatrix:
        """Integer matrix D + sA in labeling order"""
        s = int(Sign(s))
        m, n = decomp.m, decomp.n
        rows: List[List[int]] = []
        for mu in range(m):
            for i in range(n):
                row = []
                for nu in range(m):
                    block_row = decomp.blocks[mu][nu].entries[i]
                    for j in range(n):
                        value = s * block_row[j]
                        if mu == nu and i == j:
                            value += decomp.degrees[mu][i]
                        row.append(value)
                rows.append(row)
        return IntMatrix(entries=tuple(tuple(row) for row in rows))

    @staticmethod
    def density_matrix(decomp: BlockDecomposition, s: Sign) -> DensityMatrix:
        """rho = (D + sA) / d; s = -1 gives rho_l, s = +1 gives rho_q.

        Loops put s on the diagonal, so the normalizer is trace(D + sA),
        which is d for every loop-free graph.
        """
        s = Sign(s)
        if decomp.total_degree == 0:
            raise EmptyGraphError("graph has no edges; its density matrix is undefined")
        numerators = GraphService.laplacian_matrix(decomp, s).entries
        trace = sum(numerators[k][k] for k in range(len(numerators)))
        if trace <= 0:
            raise EmptyGraphError(f"D + sA has trace {trace}; no density matrix for s={int(s):+d}")
        return DensityMatrix(
            numerators=numerators,
            denominator=trace,
            sign=s,
            source_total_degree=decomp.total_degree,
        )

    @staticmethod
    def bipartite_graph_of(block: BinaryMatrix) -> Graph:
        """Graph G_M on 2n vertices with adjacency [[0, M], [M^t, 0]]"""
        n = block.order
        edges = [
            (i + 1, n + j + 1)
            for i in range(n) for j in block.row_supports[i]
        ]
        return GraphService.build_graph(2 * n, edges)

    @staticmethod
    def is_partially_symmetric(decomp: BlockDecomposition) -> bool:
        """Every block A_{mu nu} is symmetric"""
        return all(block.is_symmetric for row in decomp.blocks for block in row)

    @staticmethod
    def reassemble_adjacency(decomp: BlockDecomposition) -> Tuple[Tuple[int, ...], ...]:
        """Rebuild the full N x N adjacency from the block grid, in labeling order"""
        m, n = decomp.m, decomp.n
        return tuple(
            tuple(
                decomp.blocks[mu][nu].entries[i][j]
                for nu in range(m) for j in range(n)
            )
            for mu in range(m) for i in range(n)
        )

    @staticmethod
    def doubly_stochastic_form(decomp: BlockDecomposition) -> Tuple[Tuple[Fraction, ...], ...]:
        """(1/2r) [[rI, A], [A^t, rI]] for a regular two-cluster graph with edgeless clusters"""
        if decomp.m != 2:
            raise DimensionError(f"doubly stochastic form needs m = 2, got m = {decomp.m}")
        n = decomp.n
        for mu in range(2):
            if any(any(row) for row in decomp.blocks[mu][mu].entries):
                raise GraphInputError(f"cluster {mu + 1} is not edgeless")
        degrees = {d for row in decomp.degrees for d in row}
        if len(degrees) != 1 or 0 in degrees:
            raise GraphInputError(f"graph is not regular of positive degree (degrees {sorted(degrees)})")
        r = degrees.pop()
        rows = []
        for mu in range(2):
            for i in range(n):
                row = []
                for nu in range(2):
                    for j in range(n):
                        if mu == nu:
                            value = r if i == j else 0
                        else:
                            value = decomp.blocks[mu][nu].entries[i][j]
                        row.append(Fraction(value, 2 * r))
                rows.append(tuple(row))
        return tuple(rows)

    @staticmethod
    def relabel_graph(g: Graph, mapping: dict) -> Graph:
        """Rename vertices by mapping (old -> new); the mapping must be a bijection"""
        edges = [(mapping[u], mapping[v]) for u, v in g.edges]
        loops = [mapping[v] for v in g.loops]
        return GraphService.build_graph(g.vertex_count, edges, loops)
