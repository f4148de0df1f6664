"""
Generator service: certified graph families, counterexamples and seeded random instances
"""

import logging
import random
from typing import List, Optional, Sequence, Tuple

import networkx as nx

from app.core.exceptions import GraphInputError
from app.models.family import Family, FamilySpec
from app.models.graph import ClusterLabeling, Graph
from app.models.matrix import BinaryMatrix
from app.services.graph_service import GraphService

logger = logging.getLogger(__name__)

Labeled = Tuple[Graph, ClusterLabeling]

# Bipartition of K_{3,3} that cuts across the natural clusters {1,2,3} / {4,5,6}
FIGURE3_H_PERMUTATION = (1, 4, 5, 2, 3, 6)


def _check_permutation(permutation: Sequence[int], size: int, what: str) -> Tuple[int, ...]:
    permutation = tuple(permutation)
    if sorted(permutation) != list(range(1, size + 1)):
        raise GraphInputError(f"{what} {list(permutation)} is not a permutation of [1, {size}]")
    return permutation


def _two_cluster_graph(block: BinaryMatrix) -> Labeled:
    """Clusters {1..n} and {n+1..2n}, both edgeless, joined by block"""
    graph = GraphService.bipartite_graph_of(block)
    return graph, ClusterLabeling.natural(2, block.order)


class GeneratorService:
    """Graph families with their natural labelings"""

    @staticmethod
    def complete_graph(m: int, n: int) -> Labeled:
        if m < 1 or n < 1 or m * n < 2:
            raise GraphInputError(f"complete graph needs m, n >= 1 and m*n >= 2, got m={m}, n={n}")
        size = m * n
        edges = [(u, v) for u in range(1, size + 1) for v in range(u + 1, size + 1)]
        return GraphService.build_graph(size, edges), ClusterLabeling.natural(m, n)

    @staticmethod
    def complete_bipartite(n: int, permutation: Optional[Sequence[int]] = None) -> Labeled:
        """K_{n,n} on 2n vertices; the first n entries of permutation form one side.

        The clusters stay {1..n} and {n+1..2n}, so a permutation that mixes
        the sides makes the clusters cut across the bipartition.
        """
        if n < 1:
            raise GraphInputError(f"complete bipartite graph needs n >= 1, got {n}")
        if permutation is None:
            permutation = range(1, 2 * n + 1)
        permutation = _check_permutation(permutation, 2 * n, "bipartition")
        left, right = permutation[:n], permutation[n:]
        edges = [(u, v) for u in left for v in right]
        return GraphService.build_graph(2 * n, edges), ClusterLabeling.natural(2, n)

    @staticmethod
    def figure3_g() -> Labeled:
        return GeneratorService.complete_bipartite(3)

    @staticmethod
    def figure3_h() -> Labeled:
        return GeneratorService.complete_bipartite(3, FIGURE3_H_PERMUTATION)

    @staticmethod
    def werner_graph(d: int) -> Labeled:
        """Vertex (i, j) is (i-1)d + j; loops everywhere, (i, j) ~ (j, i) for i < j"""
        if d < 2:
            raise GraphInputError(f"werner graph needs d >= 2, got {d}")

        def vertex(i: int, j: int) -> int:
            return (i - 1) * d + j

        edges = [(vertex(i, j), vertex(j, i)) for i in range(1, d + 1) for j in range(i + 1, d + 1)]
        loops = range(1, d * d + 1)
        return GraphService.build_graph(d * d, edges, loops), ClusterLabeling.natural(d, d)

    @staticmethod
    def partially_symmetric_regular(n: int, r: int, seed: Optional[int] = None) -> Labeled:
        """Two edgeless clusters joined by a symmetric r-regular block.

        The block is a sum of r distinct involutions i -> (k - i) mod n, which
        have disjoint supports. A seed picks the r offsets and conjugates the
        block by a random slot permutation.
        """
        if not 1 <= r <= n:
            raise GraphInputError(f"regularity r={r} must lie in [1, n={n}]")
        if seed is None:
            offsets = list(range(r))
            shuffle = None
        else:
            rng = random.Random(seed)
            offsets = rng.sample(range(n), r)
            shuffle = tuple(rng.sample(range(n), n))
        rows = [[0] * n for _ in range(n)]
        for k in offsets:
            for i in range(n):
                rows[i][(k - i) % n] = 1
        block = BinaryMatrix.from_rows(rows)
        if shuffle is not None:
            block = block.permuted(shuffle)
        logger.debug(f"Partially symmetric {r}-regular block on n={n} from offsets {sorted(offsets)}")
        return _two_cluster_graph(block)

    @staticmethod
    def regular_normal_block(n: int, r: int, seed: Optional[int] = None) -> Labeled:
        """Two edgeless clusters joined by a circulant r-regular block.

        Shifts are {1..r} mod n, or r distinct shifts drawn with the seed;
        entry (i, (i + k) mod n) is set for every shift k.
        """
        if not 1 <= r <= n:
            raise GraphInputError(f"regularity r={r} must lie in [1, n={n}]")
        if seed is None:
            shifts = [k % n for k in range(1, r + 1)]
        else:
            shifts = random.Random(seed).sample(range(n), r)
        rows = [[0] * n for _ in range(n)]
        for k in shifts:
            for i in range(n):
                rows[i][(i + k) % n] = 1
        return _two_cluster_graph(BinaryMatrix.from_rows(rows))

    @staticmethod
    def final_example() -> Labeled:
        """4 vertices, m = n = 2, edges v11-v21, v11-v22, v12-v21"""
        return GraphService.build_graph(4, [(1, 3), (1, 4), (2, 3)]), ClusterLabeling.natural(2, 2)

    @staticmethod
    def random_graph(m: int, n: int, edge_probability: float, seed: Optional[int] = None) -> Labeled:
        """G(N, p) with N = m*n, reproducible for a fixed seed"""
        if not 0.0 <= edge_probability <= 1.0:
            raise GraphInputError(f"edge probability {edge_probability} must lie in [0, 1]")
        if m < 1 or n < 1:
            raise GraphInputError(f"m and n must be positive, got m={m}, n={n}")
        draw = nx.gnp_random_graph(m * n, edge_probability, seed=seed)
        edges = [(u + 1, v + 1) for u, v in draw.edges()]
        return GraphService.build_graph(m * n, edges), ClusterLabeling.natural(m, n)

    @staticmethod
    def local_relabel(g: Graph, lab: ClusterLabeling, slot_permutation: Sequence[int]) -> Labeled:
        """Rename slot i to pi(i) inside every cluster (I x P); blocks become P^t A P"""
        pi = _check_permutation(slot_permutation, lab.n, "slot permutation")
        mapping = {
            lab.vertex_at(mu, i): lab.vertex_at(mu, pi[i - 1])
            for mu in range(1, lab.m + 1) for i in range(1, lab.n + 1)
        }
        return GraphService.relabel_graph(g, mapping), lab

    @staticmethod
    def cluster_relabel(g: Graph, lab: ClusterLabeling, cluster_permutation: Sequence[int]) -> Labeled:
        """Rename cluster mu to sigma(mu) keeping slots (P x I)"""
        sigma = _check_permutation(cluster_permutation, lab.m, "cluster permutation")
        mapping = {
            lab.vertex_at(mu, i): lab.vertex_at(sigma[mu - 1], i)
            for mu in range(1, lab.m + 1) for i in range(1, lab.n + 1)
        }
        return GraphService.relabel_graph(g, mapping), lab

    @staticmethod
    def build(spec: FamilySpec) -> Labeled:
        """Generate the family named by spec"""
        family = spec.family
        if family is Family.COMPLETE:
            labeled = GeneratorService.complete_graph(spec.m, spec.n)
        elif family is Family.COMPLETE_BIPARTITE:
            labeled = GeneratorService.complete_bipartite(spec.n, spec.permutation)
        elif family is Family.PARTIALLY_SYMMETRIC_REGULAR:
            labeled = GeneratorService.partially_symmetric_regular(spec.n, spec.r, spec.seed)
        elif family is Family.REGULAR_NORMAL_BLOCK:
            labeled = GeneratorService.regular_normal_block(spec.n, spec.r, spec.seed)
        elif family is Family.WERNER:
            labeled = GeneratorService.werner_graph(spec.d)
        elif family is Family.FIGURE3_G:
            labeled = GeneratorService.figure3_g()
        elif family is Family.FIGURE3_H:
            labeled = GeneratorService.figure3_h()
        elif family is Family.FINAL_EXAMPLE:
            labeled = GeneratorService.final_example()
        else:
            labeled = GeneratorService.random_graph(spec.m, spec.n, spec.p, spec.seed)
        logger.info(f"Generated {GeneratorService.describe(spec)}: {labeled[0]!r}")
        return labeled

    @staticmethod
    def describe(spec: FamilySpec) -> str:
        """Stable id such as werner(d=3) used as graph_id in reports"""
        params: List[str] = []
        for name in ("m", "n", "d", "r", "p", "seed"):
            value = getattr(spec, name)
            if value is not None:
                params.append(f"{name}={value}")
        if spec.permutation is not None:
            params.append("permutation=" + " ".join(map(str, spec.permutation)))
        return f"{spec.family.value}({','.join(params)})"
