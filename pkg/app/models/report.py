"""
Report models: discord breakdowns, spectral checks, verification and search summaries
"""

from enum import Enum
from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, model_validator

from app.core.config import settings
from app.models.graph import ClusterLabeling, Sign


class Condition(str, Enum):
    """Block conditions whose violations make up QD(G)"""
    PROP2 = "prop2"
    PROP3 = "prop3"
    PROP4 = "prop4"
    PROP5 = "prop5"


class PairContribution(BaseModel):
    """One nonzero summand of a violation sum.
    
    nu_or_alpha_beta is (nu,) for prop2 and prop5, (alpha, beta) for prop4
    and (nu, alpha, beta) for prop3. All indices are 1-based.
    """
    model_config = ConfigDict(frozen=True)
    
    condition: Condition
    mu: int
    nu_or_alpha_beta: Tuple[int, ...]
    i: int
    j: int
    value: int


class ViolationBreakdown(BaseModel):
    """Totals of the four violation sums and their nonzero summands"""
    model_config = ConfigDict(frozen=True)
    
    prop2_total: int = 0
    prop3_total: int = 0
    prop4_total: int = 0
    prop5_total: int = 0
    per_pair: Tuple[PairContribution, ...] = ()
    
    @model_validator(mode="after")
    def check_totals(self):
        sums = {condition: 0 for condition in Condition}
        for item in self.per_pair:
            sums[item.condition] += abs(item.value)
        for condition, total in sums.items():
            if self.total(condition) != total:
                raise ValueError(f"{condition.value} total {self.total(condition)} does not match its summands ({total})")
        return self
    
    def total(self, condition: Condition) -> int:
        return getattr(self, f"{condition.value}_total")


class DiscordReport(BaseModel):
    """QD(G) for one labeling and one sign"""
    model_config = ConfigDict(frozen=True)
    
    breakdown: ViolationBreakdown
    qd_total: int
    sign: Sign
    labeling: ClusterLabeling
    graph_id: str = ""
    
    @model_validator(mode="after")
    def check_total(self):
        b = self.breakdown
        if self.qd_total != b.prop2_total + b.prop3_total + b.prop4_total + b.prop5_total:
            raise ValueError("qd_total must equal the sum of the four violation totals")
        return self
    
    @property
    def zero_discord(self) -> bool:
        return self.qd_total == 0
    
    def to_record(self, include_pairs: bool = True) -> dict:
        """Flat record with the fixed report field names"""
        b = self.breakdown
        record = {
            "graph_id": self.graph_id,
            "m": self.labeling.m,
            "n": self.labeling.n,
            "s": int(self.sign),
            "prop2": b.prop2_total,
            "prop3": b.prop3_total,
            "prop4": b.prop4_total,
            "prop5": b.prop5_total,
            "qd": self.qd_total,
            "zero_discord": self.zero_discord,
        }
        if include_pairs:
            record["per_pair"] = [
                {
                    "condition": item.condition.value,
                    "mu": item.mu,
                    "nu_or_alpha_beta": list(item.nu_or_alpha_beta),
                    "i": item.i,
                    "j": item.j,
                    "value": item.value,
                }
                for item in b.per_pair
            ]
        return record


class BlockConditions(BaseModel):
    """Verdicts of the five block conditions, evaluated by direct matrix algebra"""
    model_config = ConfigDict(frozen=True)
    
    prop1: bool
    prop2: bool
    prop3: bool
    prop4: bool
    prop5: bool
    
    @property
    def all_hold(self) -> bool:
        return self.prop1 and self.prop2 and self.prop3 and self.prop4 and self.prop5


class DensityDefect(str, Enum):
    """Reason codes for a failed density check"""
    NOT_SQUARE = "not_square"
    NOT_SYMMETRIC = "not_symmetric"
    TRACE_NOT_ONE = "trace_not_one"
    NEGATIVE_EIGENVALUE = "negative_eigenvalue"


class DensityCheck(BaseModel):
    """Outcome of validate_density; truthy when the matrix is a valid state"""
    model_config = ConfigDict(frozen=True)
    
    valid: bool
    reason: Optional[DensityDefect] = None
    min_eigenvalue: Optional[float] = None
    
    def __bool__(self):
        return self.valid


class EntropyReport(BaseModel):
    """Entropies in bits behind the fixed-basis discord"""
    model_config = ConfigDict(frozen=True)
    
    s_rho: float
    s_rho_b: float
    conditional: float
    discord_fixed_basis: float
    probabilities: Tuple[float, ...] = ()
    
    @model_validator(mode="after")
    def check_identity(self):
        expected = self.conditional - (self.s_rho - self.s_rho_b)
        if abs(self.discord_fixed_basis - expected) > 1e-12:
            raise ValueError("discord must equal conditional - (S(rho) - S(rho_B))")
        if self.discord_fixed_basis < -settings.ENTROPY_TOLERANCE:
            raise ValueError(f"fixed-basis discord {self.discord_fixed_basis} is negative")
        return self


class VerificationSummary(BaseModel):
    """Counts from an oracle equivalence run"""
    model_config = ConfigDict(frozen=True)
    
    checked: int
    mismatches: int
    mode: str
    seed: int
    by_measure: Dict[str, int] = {}
    failures: List[str] = []
    
    @property
    def passed(self) -> bool:
        return self.mismatches == 0
    
    def to_record(self) -> dict:
        return {"checked": self.checked, "mismatches": self.mismatches, "mode": self.mode, "seed": self.seed}


class LabelingSearchReport(BaseModel):
    """Min / max QD over searched labelings of one graph"""
    model_config = ConfigDict(frozen=True)
    
    sign: Sign
    mode: str
    searched: int
    min_qd: int
    max_qd: int
    min_witness: ClusterLabeling
    max_witness: ClusterLabeling
    seed: Optional[int] = None
    
    @property
    def zero_found(self) -> bool:
        return self.min_qd == 0
    
    def to_record(self) -> dict:
        return {
            "m": self.min_witness.m,
            "n": self.min_witness.n,
            "s": int(self.sign),
            "mode": self.mode,
            "searched": self.searched,
            "min_qd": self.min_qd,
            "min_witness": list(self.min_witness.order),
            "max_qd": self.max_qd,
            "max_witness": list(self.max_witness.order),
            "zero_found": self.zero_found,
            "seed": self.seed,
        }


class CensusRecord(BaseModel):
    """One graph of an enumerate run"""
    model_config = ConfigDict(frozen=True)
    
    graph_id: str
    graph6: str
    qd_l: Optional[int] = None
    qd_q: Optional[int] = None
    min_qd: Optional[int] = None
    note: str = ""
    
    @property
    def zero_discord(self) -> Optional[bool]:
        values = [v for v in (self.qd_l, self.qd_q) if v is not None]
        if not values:
            return None
        return all(v == 0 for v in values)
    
    def to_record(self) -> dict:
        return {
            "graph_id": self.graph_id,
            "graph6": self.graph6,
            "qd_l": self.qd_l,
            "qd_q": self.qd_q,
            "min_qd": self.min_qd,
            "zero_discord": self.zero_discord,
            "note": self.note,
        }
