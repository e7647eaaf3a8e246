"""
Born-approximation dipolar relaxation rates.

Single spin flip (M -> M - 1) and double spin flip (M -> M - 2):

    gamma1 = (4 pi / 15) j^3 P [1 + h(k_f / k_i)] k_f / m_r,  k_f^2 = k_i^2 + 2 m_r g_j mu_B B
    gamma2 = (2 pi / 15) j^2 P [1 + h(k_f / k_i)] k_f / m_r,  k_f^2 = k_i^2 + 4 m_r g_j mu_B B

with P = (2 alpha^2 (g_j mu_B)^2 m_r)^2 in atomic units, and gamma = 2 (gamma1 + gamma2).
"""

import logging
import math
from typing import Sequence

import numpy as np

from dyaniso.core.units import CODATA2018
from dyaniso.exceptions import DomainError
from dyaniso.models.scattering import BornRates

logger = logging.getLogger(__name__)


def h_function(x: float) -> float:
    """
    h(x) = -1/2 - (3/4) (1 - x^2)^2 log[(x - 1)/(x + 1)] / (x (1 + x^2)),  x > 1.

    Tends to -1/2 as x -> 1+ and to 1 as x -> infinity.

    Raises:
        DomainError: If x <= 1.
    """
    if not x > 1.0:
        raise DomainError(f"h(x) needs x > 1, got {x}")
    if math.isinf(x):
        return 1.0
    # log((x-1)/(x+1)) = log1p(-2/(x+1)); the ratio form keeps large x finite
    log_term = math.log1p(-2.0 / (x + 1.0))
    shape = ((1.0 - x * x) / x) * ((1.0 - x * x) / (1.0 + x * x))
    return -0.5 - 0.75 * shape * log_term


def _born_prefactor(reduced_mass: float, g_j: float) -> float:
    mu = g_j * CODATA2018.bohr_magneton_au
    return (2.0 * CODATA2018.fine_structure_alpha**2 * mu**2 * reduced_mass) ** 2


def born_gamma(
    b_field: float,
    collision_energy: float,
    flip: int,
    reduced_mass: float,
    j: int = 8,
    g_j: float = CODATA2018.g_factor_gj,
) -> float:
    """
    Dipolar relaxation rate coefficient for one or two spin flips.

    Args:
        b_field: Magnetic field in atomic units, > 0.
        collision_energy: Collision energy in Hartree, > 0.
        flip: 1 for M -> M - 1, 2 for M -> M - 2.
        reduced_mass: Pair reduced mass in electron masses.
        j: Atomic angular momentum.
        g_j: Lande factor.

    Returns:
        The rate coefficient in a0^3 per atomic time unit.

    Raises:
        DomainError: For non-positive field, energy or mass, or flip not in {1, 2}.
    """
    if b_field <= 0:
        raise DomainError(f"magnetic field must be positive, got {b_field}")
    if collision_energy <= 0:
        raise DomainError(f"collision energy must be positive, got {collision_energy}")
    if reduced_mass <= 0:
        raise DomainError("reduced mass must be positive")
    if flip not in (1, 2):
        raise DomainError(f"flip must be 1 or 2, got {flip}")

    zeeman = g_j * CODATA2018.bohr_magneton_au * b_field
    k_i_sq = 2.0 * reduced_mass * collision_energy
    k_f_sq = k_i_sq + 2.0 * reduced_mass * flip * zeeman
    k_f = math.sqrt(k_f_sq)
    x = math.sqrt(k_f_sq / k_i_sq)

    angular = (4.0 * math.pi / 15.0) * j**3 if flip == 1 else (2.0 * math.pi / 15.0) * j**2
    return angular * _born_prefactor(reduced_mass, g_j) * (1.0 + h_function(x)) * k_f / reduced_mass


def total_born_rate(
    b_field: float,
    collision_energy: float,
    reduced_mass: float,
    j: int = 8,
    g_j: float = CODATA2018.g_factor_gj,
) -> float:
    """gamma = 2 (gamma1 + gamma2)."""
    gamma1 = born_gamma(b_field, collision_energy, 1, reduced_mass, j, g_j)
    gamma2 = born_gamma(b_field, collision_energy, 2, reduced_mass, j, g_j)
    return 2.0 * (gamma1 + gamma2)


def born_rates(
    b_field: float,
    energies: Sequence[float],
    reduced_mass: float,
    j: int = 8,
    g_j: float = CODATA2018.g_factor_gj,
) -> BornRates:
    """gamma1, gamma2 and gamma on an energy grid."""
    gamma1 = np.array([born_gamma(b_field, e, 1, reduced_mass, j, g_j) for e in energies])
    gamma2 = np.array([born_gamma(b_field, e, 2, reduced_mass, j, g_j) for e in energies])
    return BornRates(
        b_field=b_field,
        gamma1=gamma1.tolist(),
        gamma2=gamma2.tolist(),
        gamma_total=(2.0 * (gamma1 + gamma2)).tolist(),
    )
