"""
Labeled graphs and cluster labelings
"""

from enum import Enum
from functools import cached_property
from typing import Dict, FrozenSet, Optional, Tuple

from pydantic import BaseModel, ConfigDict, PositiveInt, model_validator


class Sign(int, Enum):
    """Sign s in rho = (D + sA) / d"""
    LAPLACIAN = -1
    SIGNLESS = 1
    
    @property
    def label(self) -> str:
        return "l" if self is Sign.LAPLACIAN else "q"
    
    @classmethod
    def from_label(cls, label: str) -> "Sign":
        labels = {"l": cls.LAPLACIAN, "q": cls.SIGNLESS, "-1": cls.LAPLACIAN, "1": cls.SIGNLESS, "+1": cls.SIGNLESS}
        try:
            return labels[label.strip().lower()]
        except KeyError:
            raise ValueError(f"unknown sign {label!r}, expected l or q") from None


class Graph(BaseModel):
    """Finite graph on vertices 1..N with simple edges and optional loops.
    
    Edges are stored as ordered pairs (u, v) with u < v.
    """
    model_config = ConfigDict(frozen=True)
    
    vertex_count: PositiveInt
    edges: FrozenSet[Tuple[int, int]] = frozenset()
    loops: FrozenSet[int] = frozenset()
    
    @model_validator(mode="after")
    def check_endpoints(self):
        n = self.vertex_count
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-pair ({u}, {v}) belongs in the loop set")
            if u > v:
                raise ValueError(f"edge ({u}, {v}) is not normalized to u < v")
            if not (1 <= u <= n and 1 <= v <= n):
                raise ValueError(f"edge ({u}, {v}) has an endpoint outside [1, {n}]")
        for v in self.loops:
            if not 1 <= v <= n:
                raise ValueError(f"loop at {v} is outside [1, {n}]")
        return self
    
    @cached_property
    def neighbors(self) -> Dict[int, FrozenSet[int]]:
        """Neighbors of every vertex; a loop makes a vertex its own neighbor"""
        adjacency = {v: set() for v in range(1, self.vertex_count + 1)}
        for u, v in self.edges:
            adjacency[u].add(v)
            adjacency[v].add(u)
        for v in self.loops:
            adjacency[v].add(v)
        return {v: frozenset(nbrs) for v, nbrs in adjacency.items()}
    
    def has_edge(self, u: int, v: int) -> bool:
        if u == v:
            return u in self.loops
        return (min(u, v), max(u, v)) in self.edges
    
    def degree(self, v: int) -> int:
        """Degree in the whole graph; a loop counts once"""
        return len(self.neighbors[v])
    
    @property
    def edge_count(self) -> int:
        return len(self.edges)
    
    def __repr__(self):
        return f"<Graph(N={self.vertex_count}, edges={len(self.edges)}, loops={len(self.loops)})>"


class ClusterLabeling(BaseModel):
    """Split of N = m*n vertices into m clusters of n slots.
    
    order[k-1] is the vertex placed at position k; position k is slot
    ((k-1) mod n) + 1 of cluster ceil(k/n). All indices are 1-based.
    """
    model_config = ConfigDict(frozen=True)
    
    m: PositiveInt
    n: PositiveInt
    order: Tuple[int, ...]
    
    @model_validator(mode="after")
    def check_bijection(self):
        size = self.m * self.n
        if len(self.order) != size:
            raise ValueError(f"labeling has {len(self.order)} entries, expected m*n = {size}")
        if sorted(self.order) != list(range(1, size + 1)):
            raise ValueError(f"labeling is not a bijection on [1, {size}]")
        return self
    
    @property
    def vertex_count(self) -> int:
        return self.m * self.n
    
    @classmethod
    def natural(cls, m: int, n: int) -> "ClusterLabeling":
        return cls(m=m, n=n, order=tuple(range(1, m * n + 1)))
    
    def vertex_at(self, mu: int, i: int) -> int:
        """Vertex v_{mu i}"""
        return self.order[(mu - 1) * self.n + (i - 1)]
    
    @cached_property
    def positions(self) -> Dict[int, Tuple[int, int]]:
        """vertex -> (mu, i)"""
        return {
            vertex: (k // self.n + 1, k % self.n + 1)
            for k, vertex in enumerate(self.order)
        }
    
    @property
    def clusters(self) -> Tuple[Tuple[int, ...], ...]:
        n = self.n
        return tuple(self.order[mu * n:(mu + 1) * n] for mu in range(self.m))
    
    @property
    def is_natural(self) -> bool:
        return self.order == tuple(range(1, self.vertex_count + 1))
    
    def __repr__(self):
        return f"<ClusterLabeling(m={self.m}, n={self.n}, clusters={self.clusters})>"


class EdgeListDocument(BaseModel):
    """Parsed edge-list text: the graph, the cluster shape and an optional labeling"""
    model_config = ConfigDict(frozen=True)
    
    graph: Graph
    m: PositiveInt
    n: PositiveInt
    permutation: Optional[Tuple[int, ...]] = None
    
    def labeling(self, m: int = None, n: int = None) -> ClusterLabeling:
        """Labeling for the given (or the header's) cluster shape"""
        m, n = m or self.m, n or self.n
        order = self.permutation if self.permutation is not None else tuple(range(1, m * n + 1))
        return ClusterLabeling(m=m, n=n, order=order)
