"""
Block decomposition of a labeled graph and its density matrix
"""

from fractions import Fraction
from functools import cached_property
from typing import Tuple

from pydantic import BaseModel, ConfigDict, PositiveInt, model_validator

from app.models.graph import Sign
from app.models.matrix import BinaryMatrix


class BlockDecomposition(BaseModel):
    """A(G) = [A_{mu nu}] as an m x m grid of n x n blocks plus degrees.
    
    blocks and degrees are stored 0-based: blocks[mu][nu] is A_{mu+1, nu+1}
    and degrees[mu][i] is d_{mu+1, i+1}.
    """
    model_config = ConfigDict(frozen=True)
    
    m: PositiveInt
    n: PositiveInt
    blocks: Tuple[Tuple[BinaryMatrix, ...], ...]
    degrees: Tuple[Tuple[int, ...], ...]
    total_degree: int
    
    @model_validator(mode="after")
    def check_grid(self):
        m, n = self.m, self.n
        if len(self.blocks) != m or any(len(row) != m for row in self.blocks):
            raise ValueError(f"block grid must be {m} x {m}")
        if len(self.degrees) != m or any(len(row) != n for row in self.degrees):
            raise ValueError(f"degree table must be {m} x {n}")
        for mu in range(m):
            for nu in range(m):
                block = self.blocks[mu][nu]
                if block.order != n:
                    raise ValueError(f"block ({mu + 1}, {nu + 1}) has order {block.order}, expected {n}")
                if self.blocks[nu][mu].entries != block.transpose().entries:
                    raise ValueError(f"block ({nu + 1}, {mu + 1}) is not the transpose of ({mu + 1}, {nu + 1})")
        for mu in range(m):
            for i in range(n):
                row_sum = sum(sum(self.blocks[mu][nu].entries[i]) for nu in range(m))
                if row_sum != self.degrees[mu][i]:
                    raise ValueError(f"degree of v_({mu + 1},{i + 1}) is {self.degrees[mu][i]}, row sum is {row_sum}")
        if self.total_degree != sum(map(sum, self.degrees)):
            raise ValueError("total degree does not equal the trace of D")
        return self
    
    def block(self, mu: int, nu: int) -> BinaryMatrix:
        """A_{mu nu}, 1-based"""
        return self.blocks[mu - 1][nu - 1]
    
    def degree(self, mu: int, i: int) -> int:
        """d_{mu i}, 1-based"""
        return self.degrees[mu - 1][i - 1]
    
    @property
    def loop_count(self) -> int:
        return sum(
            self.blocks[mu][mu].entries[i][i]
            for mu in range(self.m) for i in range(self.n)
        )
    
    def __repr__(self):
        return f"<BlockDecomposition(m={self.m}, n={self.n}, d={self.total_degree})>"


class DensityMatrix(BaseModel):
    """rho = (D + sA) / trace(D + sA), held exactly as integer numerators over one denominator"""
    model_config = ConfigDict(frozen=True)
    
    numerators: Tuple[Tuple[int, ...], ...]
    denominator: PositiveInt
    sign: Sign
    source_total_degree: int
    
    @model_validator(mode="after")
    def check_state(self):
        rows = self.numerators
        order = len(rows)
        if any(len(row) != order for row in rows):
            raise ValueError("density matrix must be square")
        for i in range(order):
            for j in range(i + 1, order):
                if rows[i][j] != rows[j][i]:
                    raise ValueError(f"density matrix is not symmetric at ({i + 1}, {j + 1})")
        if sum(rows[i][i] for i in range(order)) != self.denominator:
            raise ValueError("density matrix trace is not 1")
        return self
    
    @property
    def order(self) -> int:
        return len(self.numerators)
    
    @cached_property
    def entries(self) -> Tuple[Tuple[Fraction, ...], ...]:
        return tuple(
            tuple(Fraction(x, self.denominator) for x in row)
            for row in self.numerators
        )
    
    @property
    def trace(self) -> Fraction:
        return sum((self.entries[i][i] for i in range(self.order)), Fraction(0))
    
    def __repr__(self):
        return f"<DensityMatrix(order={self.order}, s={int(self.sign):+d}, 1/{self.denominator})>"
