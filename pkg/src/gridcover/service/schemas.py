"""Request/response models for the counting service.

Weights travel as strings in "p/q" (or plain integer) syntax and are
parsed exactly; decimal notation is rejected so no request silently
loses exactness.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Literal, Union

from pydantic import BaseModel, Field, field_validator, model_validator

from ..counting import RegionSpec

_RATIONAL = re.compile(r"^[+-]?\d+(/[1-9]\d*)?$")


def parse_rational(text: str) -> Fraction:
    """Exact rational from 'p' or 'p/q'; decimals are rejected."""
    text = text.strip()
    if not _RATIONAL.match(text):
        raise ValueError(
            f"weight {text!r} is not an exact rational; use integer or p/q syntax"
        )
    return Fraction(text)


class GridRequest(BaseModel):
    m: int = Field(ge=1, description="columns")
    n: int = Field(ge=1, description="rows")
    max_state_bits: int | None = Field(default=None, ge=1)
    verify: bool = False


class PartitionRequest(GridRequest):
    mode: Literal["symbolic", "numeric"] = "symbolic"
    weights: tuple[str, str, str] = ("1", "1", "1")

    @field_validator("weights")
    @classmethod
    def _weights_exact(cls, value: tuple[str, str, str]) -> tuple[str, str, str]:
        for w in value:
            parse_rational(w)
        return value


class MatchingPolyRequest(GridRequest):
    pass


class HosoyaRequest(GridRequest):
    pass


class DimerRequest(GridRequest):
    x_weight: str = "1"
    y_weight: str = "1"

    @field_validator("x_weight", "y_weight")
    @classmethod
    def _weight_exact(cls, value: str) -> str:
        parse_rational(value)
        return value


class MonomerBoundaryRequest(GridRequest):
    check_entries: bool = True

    @model_validator(mode="after")
    def _odd_sides(self) -> "MonomerBoundaryRequest":
        if self.m % 2 == 0 or self.n % 2 == 0:
            raise ValueError("boundary-monomer counts need odd m and n")
        return self


class FixedRequest(GridRequest):
    sites: list[tuple[int, int]] = Field(default_factory=list)

    @model_validator(mode="after")
    def _sites_in_grid(self) -> "FixedRequest":
        for col, row in self.sites:
            if not (1 <= col <= self.m and 1 <= row <= self.n):
                raise ValueError(f"site ({col}, {row}) outside the {self.m}x{self.n} grid")
        return self


class AztecRequest(GridRequest):
    orders: tuple[int, int, int, int] = (1, 1, 1, 1)
    holes: list[tuple[int, int]] = Field(default_factory=list)

    @model_validator(mode="after")
    def _region_valid(self) -> "AztecRequest":
        self.region()  # raises on overlapping corners or misplaced holes
        return self

    def region(self) -> RegionSpec:
        p, q, r, s = self.orders
        return RegionSpec(self.m, self.n, p, q, r, s, frozenset(self.holes))


class GrowthRequest(BaseModel):
    max_m: int = Field(ge=1)
    max_n: int = Field(ge=1)
    mode: Literal["hosoya", "pure-dimer"] = "hosoya"
    max_state_bits: int | None = Field(default=None, ge=1)
    verify: bool = False


class SelfCheckRequest(BaseModel):
    max_m: int = Field(default=5, ge=1, le=8)


class JobResponse(BaseModel):
    query: dict
    result: Union[str, dict]
    elapsed_ms: float
    verified: bool | None = None
