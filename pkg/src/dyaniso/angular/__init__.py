"""
Angular-momentum algebra: exact 3-j symbols, Clebsch-Gordan coefficients and the
total-J basis that carries the gerade/ungerade symmetry of the pair.
"""

from .basis import (
    SymmetrizedBasis,
    full_transform,
    potential_census,
    symmetrized_basis,
    uncoupled_block,
)
from .wigner import (
    AngularMomentum,
    ExactValue,
    clebsch_gordan,
    clebsch_gordan_float,
    wigner3j,
    wigner3j_float,
    wigner3j_twice,
)

__all__ = [
    "AngularMomentum",
    "ExactValue",
    "SymmetrizedBasis",
    "clebsch_gordan",
    "clebsch_gordan_float",
    "full_transform",
    "potential_census",
    "symmetrized_basis",
    "uncoupled_block",
    "wigner3j",
    "wigner3j_float",
    "wigner3j_twice",
]
