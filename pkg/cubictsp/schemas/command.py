# File: cubictsp/schemas/command.py
"""Parsed command-line request handed to cli.run."""

from enum import Enum
from pathlib import Path
from typing import Optional

from pydantic import BaseModel, ConfigDict, NonNegativeInt, PositiveInt, model_validator

from cubictsp.core.errors import DomainError
from cubictsp.schemas.family import FamilyKind


class CommandName(str, Enum):
    GENERATE = "generate"
    TRIPLE = "triple"
    EXCESS = "excess"
    TSP = "tsp"
    VERIFY = "verify"
    REPORT = "report"
    INFO = "info"


class OutputFormat(str, Enum):
    ADJ = "adj"
    DOT = "dot"


class CommandConfig(BaseModel):
    model_config = ConfigDict(frozen=True)

    command: CommandName
    family: Optional[FamilyKind] = None
    k: NonNegativeInt = 0
    k_max: NonNegativeInt = 2
    input_path: Optional[Path] = None
    output_path: Optional[Path] = None
    csv_path: Optional[Path] = None
    output_format: OutputFormat = OutputFormat.ADJ
    lemma: Optional[int] = None
    structure: bool = False
    strategy: Optional[str] = None

    enum_budget: PositiveInt
    oracle_budget: PositiveInt
    symmetry_budget: PositiveInt
    bnb_node_budget: PositiveInt

    pole: bool = False
    witness: bool = False
    certificate: bool = False
    oracle: bool = False
    plain: bool = False

    @model_validator(mode="after")
    def _family_constraints(self) -> "CommandConfig":
        if self.command in (CommandName.GENERATE, CommandName.REPORT) and self.family is None:
            raise DomainError(f"--family is required for {self.command.value}")
        if (
            self.command == CommandName.GENERATE
            and self.family == FamilyKind.THREECONN_PETERSEN
            and self.k < 1
            and not self.pole
        ):
            raise DomainError("the threeconn family is defined for --k >= 1 (its k=0 closure is a multigraph)")
        if self.strategy not in (None, "exhaustive", "auto"):
            raise DomainError(f"--strategy must be exhaustive or auto, got {self.strategy}")
        if self.lemma is not None and self.lemma not in (1, 2):
            raise DomainError(f"--lemma must be 1 or 2, got {self.lemma}")
        return self
