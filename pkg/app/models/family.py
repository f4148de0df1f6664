"""
Family specifications for generated graphs
"""

from enum import Enum
from typing import Optional, Tuple

from pydantic import BaseModel, ConfigDict, model_validator


class Family(str, Enum):
    """Generated graph families"""
    COMPLETE = "complete"
    COMPLETE_BIPARTITE = "complete_bipartite"
    PARTIALLY_SYMMETRIC_REGULAR = "partially_symmetric_regular"
    REGULAR_NORMAL_BLOCK = "regular_normal_block"
    WERNER = "werner"
    FIGURE3_G = "figure3_G"
    FIGURE3_H = "figure3_H"
    FINAL_EXAMPLE = "final_example"
    RANDOM = "random"


class FamilySpec(BaseModel):
    """Family name plus its parameters"""
    model_config = ConfigDict(frozen=True)
    
    family: Family
    m: Optional[int] = None
    n: Optional[int] = None
    d: Optional[int] = None
    r: Optional[int] = None
    p: Optional[float] = None
    seed: Optional[int] = None
    permutation: Optional[Tuple[int, ...]] = None
    
    @model_validator(mode="after")
    def check_parameters(self):
        family = self.family
        if family is Family.COMPLETE:
            self._require("m", "n")
            if self.m < 1 or self.n < 1 or self.m * self.n < 2:
                raise ValueError("complete graph needs m, n >= 1 and m*n >= 2")
        elif family is Family.COMPLETE_BIPARTITE:
            self._require("n")
            if self.n < 1:
                raise ValueError("complete bipartite graph needs n >= 1")
        elif family in (Family.PARTIALLY_SYMMETRIC_REGULAR, Family.REGULAR_NORMAL_BLOCK):
            self._require("n", "r")
            if not 1 <= self.r <= self.n:
                raise ValueError(f"regularity r={self.r} must lie in [1, n={self.n}]")
        elif family is Family.WERNER:
            self._require("d")
            if self.d < 2:
                raise ValueError("werner graph needs d >= 2")
        elif family is Family.RANDOM:
            self._require("m", "n", "p")
            if not 0.0 <= self.p <= 1.0:
                raise ValueError(f"edge probability {self.p} must lie in [0, 1]")
        return self
    
    def _require(self, *names: str):
        missing = [name for name in names if getattr(self, name) is None]
        if missing:
            raise ValueError(f"family {self.family.value} requires parameters: {', '.join(missing)}")
