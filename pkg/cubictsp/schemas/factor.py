# File: cubictsp/schemas/factor.py
"""Excess statistics of even factors and poles."""

from typing import Tuple

from pydantic import BaseModel, ConfigDict, NonNegativeInt, PositiveInt, model_validator

from cubictsp.core.errors import InvalidFactorError


class FactorStats(BaseModel):
    """
    Decomposition of one even factor.

    circuits and isolated count toward the excess; stub_paths (paths that start
    and end with a dangling edge) contribute nothing.
    """

    model_config = ConfigDict(frozen=True)

    circuits: NonNegativeInt
    isolated: NonNegativeInt
    excess: NonNegativeInt
    stub_paths: NonNegativeInt = 0

    @model_validator(mode="after")
    def _excess_formula(self) -> "FactorStats":
        if self.excess != 2 * self.circuits + self.isolated:
            raise InvalidFactorError(
                f"excess {self.excess} != 2*{self.circuits} + {self.isolated}"
            )
        return self

    @classmethod
    def of(cls, circuits: int, isolated: int, stub_paths: int = 0) -> "FactorStats":
        return cls(circuits=circuits, isolated=isolated, excess=2 * circuits + isolated, stub_paths=stub_paths)


class ExcessTriple(BaseModel):
    """t(P) = (q0, q2, n) of a pole."""

    model_config = ConfigDict(frozen=True)

    q0: NonNegativeInt
    q2: NonNegativeInt
    n: PositiveInt

    def as_tuple(self) -> Tuple[int, int, int]:
        return (self.q0, self.q2, self.n)

    def __str__(self) -> str:
        return f"({self.q0}, {self.q2}, {self.n})"
