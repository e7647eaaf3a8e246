from typing import List, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator


class CollisionConfig(BaseModel):
    """Single-channel universal-loss problem; all quantities in atomic units."""

    c6: float = Field(default=1878.0, gt=0)
    reduced_mass: float = Field(..., gt=0, description="electron masses")
    r_match_inner: float = Field(default=35.0, gt=0, description="absorbing radius R_c")
    r_match_outer: Optional[float] = Field(
        default=None, description="asymptotic matching radius; None picks it per energy"
    )
    grid_step: float = Field(default=0.1, gt=0)
    l_max: int = Field(default=6, ge=0)
    energies: List[float] = Field(default_factory=list)

    @field_validator("energies")
    @classmethod
    def _positive_energies(cls, energies: List[float]) -> List[float]:
        if any(e <= 0 for e in energies):
            raise ValueError("collision energies must be positive")
        return energies

    @model_validator(mode="after")
    def _ordered_radii(self) -> "CollisionConfig":
        if self.r_match_outer is not None and self.r_match_outer <= self.r_match_inner:
            raise ValueError("r_match_outer must exceed r_match_inner")
        return self


class SMatrixEntry(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True)

    energy: float
    l: int
    s_value: complex
    absorption: float = Field(..., description="1 - |S|^2 from the absorbed flux")
    r_match_outer: float

    @model_validator(mode="after")
    def _unitarity(self) -> "SMatrixEntry":
        if abs(self.s_value) > 1.0 + 1e-8:
            raise ValueError(f"|S| = {abs(self.s_value)} exceeds 1")
        return self


class BarrierInfo(BaseModel):
    l: int
    r_barrier: float
    height: float
    height_kelvin: float

    @model_validator(mode="after")
    def _positive(self) -> "BarrierInfo":
        if self.height <= 0 or self.r_barrier <= 0:
            raise ValueError("barrier height and radius must be positive")
        return self


class TotalRate(BaseModel):
    """Summed loss rate at one energy and the truncation findings for it."""

    energy: float
    l_max: int
    rate: float = Field(..., ge=0, description="a.u.")
    warnings: List[str] = Field(default_factory=list)


class BornRates(BaseModel):
    b_field: float = Field(..., gt=0, description="a.u. of magnetic flux density")
    gamma1: List[float]
    gamma2: List[float]
    gamma_total: List[float]


class RateTable(BaseModel):
    """Loss-rate coefficients on an energy grid, atomic units."""

    energies: List[float]
    l_values: List[int]
    per_l_rates: List[List[float]] = Field(..., description="[l index][energy index]")
    unitarity_limits: List[List[float]]
    total_rate: List[float]
    born: Optional[BornRates] = None
    warnings: List[str] = Field(default_factory=list)

    @model_validator(mode="after")
    def _consistent(self) -> "RateTable":
        n = len(self.energies)
        for rates, limits in zip(self.per_l_rates, self.unitarity_limits):
            if len(rates) != n or len(limits) != n:
                raise ValueError("rate rows must match the energy grid")
            for beta, limit in zip(rates, limits):
                if beta < 0 or beta > limit * (1.0 + 1e-9):
                    raise ValueError("partial rate outside [0, unitarity limit]")
        for index, total in enumerate(self.total_rate):
            partial_sum = sum(rates[index] for rates in self.per_l_rates)
            if abs(total - partial_sum) > 1e-12 * max(abs(total), 1e-300):
                raise ValueError("total rate must equal the sum of partial rates")
        return self
