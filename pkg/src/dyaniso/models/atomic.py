from typing import List, Optional, Tuple

import numpy as np
from pydantic import BaseModel, Field, field_validator, model_validator


class TransitionLine(BaseModel):
    """One dipole transition from the ground level to an excited level."""

    excited_j: int = Field(..., ge=0, description="Total angular momentum j of the upper level")
    energy: float = Field(..., gt=0, description="Excitation energy above the ground level, a.u.")
    oscillator_strength: Optional[float] = Field(
        default=None, ge=0, description="Absorption oscillator strength f"
    )
    reduced_dipole_squared: Optional[float] = Field(
        default=None, ge=0, description="|<j_ground||d||j_excited>|^2, a.u."
    )
    line_number: Optional[int] = Field(
        default=None, description="Source line, kept for diagnostics"
    )

    @model_validator(mode="after")
    def _exactly_one_strength(self) -> "TransitionLine":
        if (self.oscillator_strength is None) == (self.reduced_dipole_squared is None):
            raise ValueError(
                "exactly one of oscillator_strength or reduced_dipole_squared is required"
            )
        return self


class KTensor(BaseModel):
    """
    Symmetric table of dipole coupling strengths K[ja][jb], atomic units.

    Rows and columns are indexed by ja, jb in (j_ground - 1, j_ground, j_ground + 1).
    """

    j_ground: int = Field(default=8, ge=1)
    values: List[List[float]]

    @field_validator("values")
    @classmethod
    def _square_three(cls, values: List[List[float]]) -> List[List[float]]:
        if len(values) != 3 or any(len(row) != 3 for row in values):
            raise ValueError("K tensor must be 3x3")
        array = np.asarray(values, dtype=float)
        if np.any(array < 0):
            raise ValueError("K tensor entries must be non-negative")
        scale = max(float(np.abs(array).max()), 1e-300)
        if np.abs(array - array.T).max() > 1e-12 * scale:
            raise ValueError("K tensor must be symmetric under ja <-> jb")
        return values

    @property
    def j_values(self) -> Tuple[int, int, int]:
        return (self.j_ground - 1, self.j_ground, self.j_ground + 1)

    def get(self, ja: int, jb: int) -> float:
        """Returns K[ja][jb] addressed by angular momentum, not by index."""
        lo = self.j_ground - 1
        if not (0 <= ja - lo <= 2 and 0 <= jb - lo <= 2):
            raise KeyError(f"(ja, jb) = ({ja}, {jb}) outside the dipole-allowed range")
        return self.values[ja - lo][jb - lo]

    def as_array(self) -> np.ndarray:
        return np.asarray(self.values, dtype=float)
