"""
Run configuration assembled by the command line
"""

from enum import Enum
from pathlib import Path
from typing import List, Optional

from pydantic import BaseModel, ConfigDict, model_validator

from app.models.family import FamilySpec
from app.models.graph import Sign


class Command(str, Enum):
    """Command line verbs"""
    COMPUTE = "compute"
    CLASSIFY = "classify"
    VERIFY = "verify"
    GENERATE = "generate"
    ENUMERATE = "enumerate"


class OutputFormat(str, Enum):
    """Report renderings"""
    JSON = "json"
    CSV = "csv"
    PLAIN = "plain"


class RunConfig(BaseModel):
    """Everything a command needs, validated before any work starts"""
    model_config = ConfigDict(frozen=True)
    
    command: Command
    input_path: Optional[Path] = None
    family: Optional[FamilySpec] = None
    m: Optional[int] = None
    n: Optional[int] = None
    labeling: Optional[str] = None
    signs: List[Sign] = [Sign.LAPLACIAN, Sign.SIGNLESS]
    output_format: OutputFormat = OutputFormat.JSON
    seed: int = 7
    trials: int = 1000
    
    @model_validator(mode="after")
    def check_input_source(self):
        if self.command in (Command.COMPUTE, Command.CLASSIFY):
            if (self.input_path is None) == (self.family is None):
                raise ValueError("exactly one of --input or --family is required")
        if self.command is Command.GENERATE and self.family is None:
            raise ValueError("generate requires --family")
        if self.command is Command.ENUMERATE and (self.m is None or self.n is None):
            raise ValueError("enumerate requires --m and --n")
        if not self.signs:
            raise ValueError("at least one sign must be selected")
        if self.trials < 0:
            raise ValueError("trials must be nonnegative")
        return self
    
    @staticmethod
    def parse_signs(selection: str) -> List[Sign]:
        """l | q | both"""
        selection = selection.strip().lower()
        if selection == "both":
            return [Sign.LAPLACIAN, Sign.SIGNLESS]
        return [Sign.from_label(selection)]
