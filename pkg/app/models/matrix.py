"""
Dense square matrices over {0,1} and over the integers
"""

from functools import cached_property
from typing import FrozenSet, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, field_validator


Rows = Tuple[Tuple[int, ...], ...]


def _check_square(rows: Rows) -> Rows:
    if not rows:
        raise ValueError("matrix must have at least one row")
    order = len(rows)
    for row in rows:
        if len(row) != order:
            raise ValueError(f"matrix must be square, got a row of length {len(row)} in order {order}")
    return rows


class IntMatrix(BaseModel):
    """Square integer matrix; houses D_mu + s*A_mumu and commutators"""
    model_config = ConfigDict(frozen=True)
    
    entries: Rows
    
    @field_validator("entries")
    @classmethod
    def check_shape(cls, v):
        return _check_square(v)
    
    @property
    def order(self) -> int:
        return len(self.entries)
    
    def to_array(self) -> np.ndarray:
        return np.array(self.entries, dtype=np.int64)
    
    @classmethod
    def from_array(cls, array) -> "IntMatrix":
        return cls(entries=tuple(tuple(int(x) for x in row) for row in np.asarray(array)))
    
    def __repr__(self):
        return f"<IntMatrix(order={self.order})>"


class BinaryMatrix(BaseModel):
    """Square matrix with entries in {0,1}.
    
    Row and column supports are the neighborhoods of the bipartite graph
    [[0, M], [M^t, 0]]: the support of row i is nbd(v_mu_i) and the support
    of column j is nbd(v_nu_j). Supports use 0-based indices.
    """
    model_config = ConfigDict(frozen=True)
    
    entries: Rows
    
    @field_validator("entries")
    @classmethod
    def check_binary(cls, v):
        _check_square(v)
        for row in v:
            for x in row:
                if x not in (0, 1):
                    raise ValueError(f"binary matrix entries must be 0 or 1, got {x!r}")
        return v
    
    @property
    def order(self) -> int:
        return len(self.entries)
    
    @cached_property
    def row_supports(self) -> Tuple[FrozenSet[int], ...]:
        return tuple(frozenset(j for j, x in enumerate(row) if x) for row in self.entries)
    
    @cached_property
    def column_supports(self) -> Tuple[FrozenSet[int], ...]:
        n = self.order
        return tuple(
            frozenset(i for i in range(n) if self.entries[i][j])
            for j in range(n)
        )
    
    @cached_property
    def is_symmetric(self) -> bool:
        n = self.order
        return all(
            self.entries[i][j] == self.entries[j][i]
            for i in range(n) for j in range(i + 1, n)
        )
    
    def transpose(self) -> "BinaryMatrix":
        return BinaryMatrix(entries=tuple(zip(*self.entries)))
    
    def permuted(self, permutation: Tuple[int, ...]) -> "BinaryMatrix":
        """Move entry (i, j) to (permutation[i], permutation[j]), 0-based; a conjugation P^t M P"""
        n = self.order
        rows = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                rows[permutation[i]][permutation[j]] = self.entries[i][j]
        return BinaryMatrix(entries=tuple(tuple(row) for row in rows))
    
    def to_array(self) -> np.ndarray:
        return np.array(self.entries, dtype=np.int64)
    
    @classmethod
    def from_rows(cls, rows) -> "BinaryMatrix":
        return cls(entries=tuple(tuple(int(x) for x in row) for row in rows))
    
    @classmethod
    def zeros(cls, n: int) -> "BinaryMatrix":
        return cls(entries=tuple((0,) * n for _ in range(n)))
    
    @classmethod
    def ones(cls, n: int) -> "BinaryMatrix":
        return cls(entries=tuple((1,) * n for _ in range(n)))
    
    @classmethod
    def identity(cls, n: int) -> "BinaryMatrix":
        return cls(entries=tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))
    
    def __repr__(self):
        return f"<BinaryMatrix(order={self.order}, ones={sum(map(sum, self.entries))})>"
