"""
Loss-rate models: universal single-channel absorption and Born dipolar relaxation.
"""

from .born import born_gamma, born_rates, h_function, total_born_rate
from .numerov import discrete_flux, numerov_propagate
from .rates import build_rate_table, default_energy_grid
from .universal import (
    barrier,
    barriers,
    characteristic_length_rx,
    check_resolution,
    matching_radius,
    mean_scattering_length,
    partial_rate,
    rate_from_absorption,
    riccati_hankel,
    solve_smatrices,
    threshold_rate,
    total_rate,
    truncation_warnings,
    unitarity_limit,
    universal_smatrix,
    wave_number,
)

__all__ = [
    "barrier",
    "barriers",
    "born_gamma",
    "born_rates",
    "build_rate_table",
    "characteristic_length_rx",
    "check_resolution",
    "default_energy_grid",
    "discrete_flux",
    "h_function",
    "matching_radius",
    "mean_scattering_length",
    "numerov_propagate",
    "partial_rate",
    "rate_from_absorption",
    "riccati_hankel",
    "solve_smatrices",
    "threshold_rate",
    "total_born_rate",
    "total_rate",
    "truncation_warnings",
    "unitarity_limit",
    "universal_smatrix",
    "wave_number",
]
