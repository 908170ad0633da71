# File: cubictsp/schemas/family.py
"""Family identifiers, closed-form predictions and built family members."""

from enum import Enum
from fractions import Fraction

from pydantic import BaseModel, ConfigDict, NonNegativeInt

from cubictsp.schemas.graph import CubicGraph, Pole


class FamilyKind(str, Enum):
    PLANAR_K4 = "planar"
    BIPARTITE_K33 = "bipartite"
    THREECONN_PETERSEN = "threeconn"

    @property
    def limit(self) -> Fraction:
        """Asymptotic tsp/|V| ratio the family approaches from below."""
        return _LIMITS[self]

    @property
    def host_vertices(self) -> int:
        """Vertices added to the pole when it is closed into a cubic graph."""
        return _HOST_VERTICES[self]


_LIMITS = {
    FamilyKind.PLANAR_K4: Fraction(5, 4),
    FamilyKind.BIPARTITE_K33: Fraction(6, 5),
    FamilyKind.THREECONN_PETERSEN: Fraction(9, 8),
}

_HOST_VERTICES = {
    FamilyKind.PLANAR_K4: 4,
    FamilyKind.BIPARTITE_K33: 6,
    FamilyKind.THREECONN_PETERSEN: 1,
}


class FamilyId(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: FamilyKind
    k: NonNegativeInt


class ClosedForm(BaseModel):
    """Predicted excess parameter (a_k or b_k) and pole order n_k."""

    model_config = ConfigDict(frozen=True)

    excess_param: NonNegativeInt
    pole_vertices: NonNegativeInt


class FamilyMember(BaseModel):
    model_config = ConfigDict(frozen=True)

    id: FamilyId
    pole: Pole
    closed: CubicGraph
    predicted: ClosedForm
