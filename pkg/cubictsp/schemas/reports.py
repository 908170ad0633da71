# File: cubictsp/schemas/reports.py
"""Result records produced by the verification suite and the summary helpers."""

from enum import Enum
from fractions import Fraction
from typing import Optional

from pydantic import BaseModel, ConfigDict, NonNegativeInt

from cubictsp.schemas.factor import ExcessTriple


class Verdict(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    # resource limit hit; never a refutation
    UNVERIFIED = "unverified"


class SymmetryStatus(str, Enum):
    SYMMETRIC = "symmetric"
    ASYMMETRIC = "asymmetric"
    UNVERIFIED = "unverified"


class LemmaReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    lemma: int
    premise_triple: ExcessTriple
    expected_conclusion: ExcessTriple
    computed_conclusion: Optional[ExcessTriple] = None
    verdict: Verdict
    method: str = "exhaustive"
    symmetry: Optional[SymmetryStatus] = None
    note: str = ""


class FamilyRow(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    k: NonNegativeInt
    pole_vertices: int
    closed_vertices: int
    excess_param: int
    proved_lower_bound: int
    printed_bound: int
    exact_tsp: Optional[int] = None
    ratio: Fraction
    vertex_connectivity: Optional[int] = None
    edge_connectivity: Optional[int] = None

    @property
    def tight(self) -> Optional[bool]:
        """Whether the exact optimum meets the proved bound (None if not computed)."""
        if self.exact_tsp is None:
            return None
        return self.exact_tsp == self.proved_lower_bound


class StructureCheck(BaseModel):
    model_config = ConfigDict(frozen=True)

    name: str
    verdict: Verdict
    detail: str = ""


class GraphSummary(BaseModel):
    model_config = ConfigDict(frozen=True)

    vertices: int
    edges: int
    cubic: bool
    vertex_connectivity: int
    edge_connectivity: int
    bipartite: bool
    planar: bool
