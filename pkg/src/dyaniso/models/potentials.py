from enum import Enum
from typing import List, Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator


class Parity(str, Enum):
    GERADE = "g"
    UNGERADE = "u"

    @classmethod
    def of_total_j(cls, total_j: int) -> "Parity":
        return cls.GERADE if total_j % 2 == 0 else cls.UNGERADE


class CoupledState(BaseModel):
    """Pair state |(j1 j2) J Omega> with gerade (even J) or ungerade (odd J) symmetry."""

    model_config = ConfigDict(frozen=True)

    J: int = Field(..., ge=0)
    omega: int
    parity: Parity
    j_atom: int = Field(default=8, ge=0, description="j1 = j2 of the identical atoms")

    @model_validator(mode="after")
    def _consistent(self) -> "CoupledState":
        if not abs(self.omega) <= self.J <= 2 * self.j_atom:
            raise ValueError(
                f"need |Omega| <= J <= {2 * self.j_atom}, got J={self.J}, Omega={self.omega}"
            )
        if self.parity is not Parity.of_total_j(self.J):
            raise ValueError("gerade states have even J, ungerade states odd J")
        return self

    @property
    def reflection(self) -> Optional[str]:
        """The +/- label, defined for Omega = 0 only."""
        if self.omega != 0:
            return None
        return "+" if self.J % 2 == 0 else "-"

    @property
    def label(self) -> str:
        sign = self.reflection or ""
        return f"{abs(self.omega)}{self.parity.value}{sign}"


class OmegaBlock(BaseModel):
    """Interaction matrix for one (Omega, parity) block in the symmetrized basis."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    omega: int
    parity: Parity
    basis: List[CoupledState]
    matrix: np.ndarray
    r_power: int
    transform: Optional[np.ndarray] = Field(
        default=None,
        description="Rows: basis states; columns: uncoupled |m1, m2> with m1 ascending",
    )

    @field_validator("r_power")
    @classmethod
    def _known_power(cls, value: int) -> int:
        if value not in (3, 5, 6):
            raise ValueError("r_power must be 3, 5 or 6")
        return value

    @model_validator(mode="after")
    def _symmetric(self) -> "OmegaBlock":
        n = len(self.basis)
        if self.matrix.shape != (n, n):
            raise ValueError(f"matrix shape {self.matrix.shape} does not match {n} states")
        if n:
            scale = max(float(np.abs(self.matrix).max()), 1e-300)
            if np.abs(self.matrix - self.matrix.T).max() > 1e-12 * scale:
                raise ValueError("block matrix is not symmetric")
        return self

    @property
    def dimension(self) -> int:
        return len(self.basis)


class AdiabaticSpectrum(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True)

    omega: int
    parity: Parity
    r_power: int
    eigenvalues: List[float]
    eigenvectors: Optional[np.ndarray] = None


class SpectrumSummary(BaseModel):
    """Census of a set of adiabatic coefficients."""

    count_gerade: int
    count_ungerade: int
    minimum: float
    maximum: float
    spread: float
    eigenvalue_sum: float
    full_space_sum: float = Field(
        ..., description="Eigenvalue sum with Omega > 0 blocks counted for +Omega and -Omega"
    )
    positive: int
    negative: int
    max_gerade_ungerade_difference: Optional[float] = None


class PotentialCurveSet(BaseModel):
    """Adiabatic curves of one (Omega, parity) block on a radial grid."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    omega: int
    parity: Parity
    r_grid: List[float]
    curves: np.ndarray = Field(..., description="shape (n_curves, n_r), a.u.")
    labels: List[int]
    min_overlap: float = Field(
        default=1.0, description="Smallest tracked eigenvector overlap between grid points"
    )


class BlockDeviation(BaseModel):
    omega: int
    parity: Parity
    dimension: int
    max_relative_deviation: float


class C6EquivalenceReport(BaseModel):
    """Closed-form K*A versus direct second-order sum of the dispersion matrix."""

    tolerance: float
    max_relative_deviation: float
    full_matrix_deviation: float
    blocks: List[BlockDeviation]
    agrees: bool
    note: str = ""


class ScaleKind(str, Enum):
    ZEEMAN = "zeeman"
    ROTATIONAL = "rotational"
    MDD = "mdd"
    AD = "ad"


class ScaleCurve(BaseModel):
    """
    One of the splitting-scale curves of the field/rotation/interaction comparison.

    ``parameter`` is B (a.u.) for Zeeman, delta C6 (a.u.) for AD and the reduced mass
    (electron masses) for the rotational and MDD curves.
    """

    kind: ScaleKind
    parameter: float
    j: int = 8
    g_j: float = 1.24159
    r_grid: List[float] = Field(default_factory=list)
    values: List[float] = Field(default_factory=list)


class Crossing(BaseModel):
    curve_a: str
    curve_b: str
    b_field_gauss: Optional[float] = None
    radius: Optional[float] = Field(default=None, description="a0; None when no crossing")
