"""
Long-range interaction matrices of a ground-state pair: dispersion (C6), magnetic
dipole-dipole (C3) and the quadrupole-quadrupole scale.
"""

from .quadrupole import qq_interaction_scale, qq_to_dispersion_ratio
from .spectrum import (
    adiabatic_coefficients,
    block_keys,
    c3_spectra,
    c6_spectra,
    combined_adiabats,
    isotropic_c6,
    overlap_matrix,
    summarize,
)
from .tensors import (
    a_tensor,
    angular_c6_matrix,
    build_c3_block,
    build_c6_block,
    c3_prefactor,
    dipole_dipole_operator,
    full_c3_matrix,
    full_c6_matrix,
    omega_leakage,
    pair_index,
    pair_states,
    parity_leakage,
    project_block,
)
from .validation import direct_c6_matrix, validate_c6_equivalence

__all__ = [
    "a_tensor",
    "adiabatic_coefficients",
    "angular_c6_matrix",
    "block_keys",
    "build_c3_block",
    "build_c6_block",
    "c3_prefactor",
    "c3_spectra",
    "c6_spectra",
    "combined_adiabats",
    "dipole_dipole_operator",
    "direct_c6_matrix",
    "full_c3_matrix",
    "full_c6_matrix",
    "isotropic_c6",
    "omega_leakage",
    "overlap_matrix",
    "pair_index",
    "pair_states",
    "parity_leakage",
    "project_block",
    "qq_interaction_scale",
    "qq_to_dispersion_ratio",
    "summarize",
    "validate_c6_equivalence",
]
