"""
Universal single-channel loss model.

The pair moves in -C6/R^6 + l(l+1)/(2 m_r R^2). Every bit of flux that reaches the
absorbing radius R_c is lost, which is imposed by starting the integration at R_c
with a purely inward WKB wave

    u(R) = R^(3/2) exp(+i (R_x / R)^2 / 2),   R_x = (2 m_r C6)^(1/4)

(inward under exp(-iEt); it pairs with the incoming exp(-ikR) at large R). Outside,
the solution is matched to u = A [H-(kR) - S H+(kR)] with Riccati-Hankel functions
H+- = -x y_l(x) +- i x j_l(x), and the loss probability 1 - |S|^2 is the conserved
inward flux divided by k |A|^2.
"""

import logging
import math
from typing import List, Optional, Sequence, Tuple

import numpy as np
from scipy.special import gamma as gamma_function
from scipy.special import spherical_jn, spherical_yn

from dyaniso.core.units import Unit, from_au
from dyaniso.exceptions import (
    ComputationError,
    DomainError,
    MatchingError,
    NoBarrierError,
    ResolutionError,
)
from dyaniso.models.scattering import BarrierInfo, CollisionConfig, SMatrixEntry, TotalRate

from .numerov import discrete_flux, numerov_propagate

logger = logging.getLogger(__name__)

# Local wavelength must span at least this many grid steps
POINTS_PER_WAVELENGTH = 20
# The potential at the matching radius must stay below this fraction of E
MATCHING_THRESHOLD = 1e-3
# Automatic matching radius is this multiple of the radius where |U| = threshold * E
AUTO_MATCH_FACTOR = 1.5
# Largest accepted share of the l = l_max wave in the total rate
TRUNCATION_SHARE = 1e-3
# Largest accepted gap between the matched |S|^2 and 1 minus the absorbed fraction
MATCH_TOLERANCE = 5e-3

MEAN_LENGTH_RATIO = 2.0 * math.pi / gamma_function(0.25) ** 2


def _positive(name: str, value: float) -> None:
    if value <= 0:
        raise DomainError(f"{name} must be positive, got {value}")


def characteristic_length_rx(c6: float, reduced_mass: float) -> float:
    """R_x = (2 m_r C6)^(1/4) in a0."""
    _positive("c6", c6)
    _positive("reduced_mass", reduced_mass)
    return (2.0 * reduced_mass * c6) ** 0.25


def mean_scattering_length(c6: float, reduced_mass: float) -> float:
    """a_bar = 2 pi / Gamma(1/4)^2 * R_x."""
    return float(MEAN_LENGTH_RATIO * characteristic_length_rx(c6, reduced_mass))


def threshold_rate(c6: float, reduced_mass: float) -> float:
    """Zero-energy s-wave loss rate 2 * 4 pi a_bar / m_r of the fully absorbing model."""
    return 8.0 * math.pi * mean_scattering_length(c6, reduced_mass) / reduced_mass


def barrier(l: int, c6: float, reduced_mass: float) -> BarrierInfo:
    """
    Top of the centrifugal barrier of partial wave l.

    Raises:
        NoBarrierError: For l = 0.
    """
    if l < 1:
        raise NoBarrierError("the s-wave has no centrifugal barrier")
    _positive("c6", c6)
    _positive("reduced_mass", reduced_mass)
    ll = l * (l + 1)
    r_barrier = (6.0 * reduced_mass * c6 / ll) ** 0.25
    height = (2.0 / 3.0) * (ll / (2.0 * reduced_mass)) / r_barrier**2
    return BarrierInfo(
        l=l,
        r_barrier=r_barrier,
        height=height,
        height_kelvin=from_au(height, Unit.KELVIN),
    )


def barriers(l_max: int, c6: float, reduced_mass: float) -> List[BarrierInfo]:
    """Barriers for l = 1 ... l_max."""
    return [barrier(l, c6, reduced_mass) for l in range(1, l_max + 1)]


def wave_number(energy: float, reduced_mass: float) -> float:
    _positive("energy", energy)
    return math.sqrt(2.0 * reduced_mass * energy)


def matching_radius(config: CollisionConfig, energy: float) -> float:
    """
    Outer matching radius for one energy.

    Raises:
        MatchingError: If an explicit ``r_match_outer`` sits where C6/R^6 exceeds
            1e-3 of the collision energy.
    """
    if config.r_match_outer is None:
        r_free = (config.c6 / (MATCHING_THRESHOLD * energy)) ** (1.0 / 6.0)
        return max(AUTO_MATCH_FACTOR * r_free, config.r_match_inner + 10.0 * config.grid_step)
    radius = config.r_match_outer
    if config.c6 / radius**6 > MATCHING_THRESHOLD * energy:
        raise MatchingError(
            f"|U(R={radius:g})| = {config.c6 / radius**6:.3e} exceeds "
            f"{MATCHING_THRESHOLD:g} * E = {MATCHING_THRESHOLD * energy:.3e}"
        )
    return radius


def check_resolution(config: CollisionConfig, energy: float) -> None:
    """
    Requires grid_step <= lambda_local / 20 where the local momentum is largest.

    Raises:
        ResolutionError: If the grid is too coarse.
    """
    r0 = config.r_match_inner
    k_local = math.sqrt(2.0 * config.reduced_mass * (energy + config.c6 / r0**6))
    wavelength = 2.0 * math.pi / k_local
    if config.grid_step > wavelength / POINTS_PER_WAVELENGTH:
        raise ResolutionError(
            f"grid_step {config.grid_step:g} exceeds lambda/{POINTS_PER_WAVELENGTH} = "
            f"{wavelength / POINTS_PER_WAVELENGTH:.4g} at R = {r0:g}"
        )


def riccati_hankel(l_values: np.ndarray, x: float) -> tuple:
    """(H-(x), H+(x)) for every l, with H+- ~ exp(+-i(x - l pi / 2)) at large x."""
    regular = x * spherical_jn(l_values, x)
    irregular = -x * spherical_yn(l_values, x)
    return irregular - 1j * regular, irregular + 1j * regular


def _inward_wkb(radius: float, r_x: float) -> Tuple[complex, complex]:
    """Value and slope of the inward WKB wave at ``radius``."""
    value = radius**1.5 * np.exp(0.5j * (r_x / radius) ** 2)
    return value, value * (1.5 / radius - 1j * r_x**2 / radius**3)


def _taylor_start(
    radius: float,
    step: float,
    value: complex,
    slope: complex,
    ls: np.ndarray,
    c6: float,
    reduced_mass: float,
    energy: float,
) -> np.ndarray:
    """
    u(R + h) of the solution with u(R) = value, u'(R) = slope, to O(h^5).

    Uses u'' = f u and its derivatives, so the second Numerov point carries the
    boundary condition to the order of the propagator itself.
    """
    ll = ls * (ls + 1)
    f0 = ll / radius**2 - 2.0 * reduced_mass * (c6 / radius**6 + energy)
    f1 = -2.0 * ll / radius**3 + 12.0 * reduced_mass * c6 / radius**7
    f2 = 6.0 * ll / radius**4 - 84.0 * reduced_mass * c6 / radius**8
    u2 = f0 * value
    u3 = f1 * value + f0 * slope
    u4 = f2 * value + 2.0 * f1 * slope + f0 * u2
    return value + step * slope + step**2 / 2.0 * u2 + step**3 / 6.0 * u3 + step**4 / 24.0 * u4


def _unitary_smatrix(
    energy: float, ls: np.ndarray, s_matched: np.ndarray, absorption: np.ndarray
) -> Tuple[np.ndarray, np.ndarray]:
    """
    S with the phase of the two-point match and |S|^2 = 1 - absorption from the
    conserved flux.

    Raises:
        ComputationError: If the absorbed fraction leaves [0, 1] or the matched |S|^2
            misses 1 - absorption by more than MATCH_TOLERANCE.
    """
    for l, s, loss in zip(ls, s_matched, absorption):
        outside = not 0.0 <= loss <= 1.0 + MATCH_TOLERANCE
        if outside or abs(abs(s) ** 2 + loss - 1.0) > MATCH_TOLERANCE:
            raise ComputationError(
                f"unitarity violated at E={energy:.4e} a.u., l={int(l)}: matched "
                f"|S|^2 = {abs(s) ** 2:.6f}, absorbed fraction {loss:.6e}"
            )
    loss = np.minimum(absorption, 1.0)
    return np.sqrt(1.0 - loss) * np.exp(1j * np.angle(s_matched)), loss


def solve_smatrices(
    config: CollisionConfig, energy: float, l_values: Sequence[int]
) -> List[SMatrixEntry]:
    """
    S-matrix elements of several partial waves at one energy from a single batched
    integration.

    Raises:
        DomainError: For a non-positive energy or negative l.
        ResolutionError: If the grid does not resolve the local wavelength.
        MatchingError: If the matching radius is inside the potential region.
        ComputationError: If the match and the absorbed flux violate unitarity.
    """
    k = wave_number(energy, config.reduced_mass)
    ls = np.asarray(list(l_values), dtype=int)
    if ls.size == 0:
        return []
    if np.any(ls < 0):
        raise DomainError("partial waves must have l >= 0")
    check_resolution(config, energy)
    r_out_target = matching_radius(config, energy)

    h = config.grid_step
    r_in = config.r_match_inner
    n_points = int(math.ceil((r_out_target - r_in) / h - 1e-9)) + 1
    radius = r_in + h * np.arange(n_points)
    r_out = float(radius[-1])

    m_r = config.reduced_mass
    centrifugal = np.outer(1.0 / radius**2, ls * (ls + 1))
    f = centrifugal - 2.0 * m_r * (config.c6 / radius**6 + energy)[:, None]

    r_x = characteristic_length_rx(config.c6, m_r)
    value, slope = _inward_wkb(r_in, r_x)
    second = _taylor_start(r_in, h, value, slope, ls, config.c6, m_r, energy)
    u = numerov_propagate(f, np.full(ls.size, value), second, h)

    # Two matching points a quarter wavelength apart, at most 10% of R_out
    gap = max(1, int(min(math.pi / (2.0 * k), 0.1 * r_out) / h))
    ia, ib = n_points - 1 - gap, n_points - 1
    if ia < 0:
        raise MatchingError("radial grid too short for two-point matching")
    hm_a, hp_a = riccati_hankel(ls, k * radius[ia])
    hm_b, hp_b = riccati_hankel(ls, k * radius[ib])

    # u = A H- + B H+, S = -B / A
    det = hm_a * hp_b - hp_a * hm_b
    amp_in = (u[ia] * hp_b - u[ib] * hp_a) / det
    amp_out = (hm_a * u[ib] - hm_b * u[ia]) / det
    s_values = -amp_out / amp_in
    flux = discrete_flux(u, f, h, index=0)
    absorption = -flux / (k * np.abs(amp_in) ** 2)
    s_values, absorption = _unitary_smatrix(energy, ls, s_values, absorption)

    logger.debug(
        "E=%.4e: %d points, R_out=%.1f, max loss %.3e", energy, n_points, r_out, absorption.max()
    )
    return [
        SMatrixEntry(
            energy=energy,
            l=int(l),
            s_value=complex(s),
            absorption=float(a),
            r_match_outer=r_out,
        )
        for l, s, a in zip(ls, s_values, absorption)
    ]


def universal_smatrix(config: CollisionConfig, energy: float, l: int) -> SMatrixEntry:
    """
    Diagonal S-matrix element of partial wave l at collision energy ``energy``.

    Args:
        config: Potential, mass and grid parameters.
        energy: Collision energy in Hartree, > 0.
        l: Partial wave.

    Returns:
        SMatrixEntry with the phase of S from the two-point match and
        1 - |S|^2 from the absorbed flux.
    """
    return solve_smatrices(config, energy, [l])[0]


def unitarity_limit(l: int, energy: float, reduced_mass: float) -> float:
    """2 (2l + 1) v pi / k^2 = 2 (2l + 1) pi / (k m_r), the |S| = 0 loss rate."""
    k = wave_number(energy, reduced_mass)
    return 2.0 * (2 * l + 1) * math.pi / (k * reduced_mass)


def rate_from_absorption(l: int, energy: float, reduced_mass: float, absorption: float) -> float:
    """beta_l = 2 (2l + 1) v pi / k^2 (1 - |S|^2): two atoms lost per event, m_l summed."""
    return unitarity_limit(l, energy, reduced_mass) * absorption


def partial_rate(config: CollisionConfig, energy: float, l: int) -> float:
    entry = universal_smatrix(config, energy, l)
    return rate_from_absorption(l, energy, config.reduced_mass, entry.absorption)


def truncation_warnings(table_rates: np.ndarray, energies: List[float], l_max: int) -> List[str]:
    """
    Flags energies where the highest computed partial wave still carries more than
    0.1% of the total.
    """
    table_rates = np.atleast_2d(table_rates)
    totals = table_rates.sum(axis=0)
    warnings = []
    for index, energy in enumerate(energies):
        total = totals[index]
        if total <= 0:
            continue
        share = table_rates[-1, index] / total
        if share > TRUNCATION_SHARE:
            warnings.append(
                f"l_max={l_max} carries {share:.2%} of the total rate at "
                f"E={energy:.4e} a.u.; raise l_max"
            )
    return warnings


def total_rate(
    config: CollisionConfig, energy: float, l_max: Optional[int] = None
) -> TotalRate:
    """
    Sum of partial rates for l <= l_max (config.l_max by default).

    Returns:
        TotalRate whose ``warnings`` name a truncation that leaves more than 0.1% of
        the rate in the highest partial wave.
    """
    top = config.l_max if l_max is None else l_max
    entries = solve_smatrices(config, energy, range(top + 1))
    partials = np.array(
        [[rate_from_absorption(e.l, energy, config.reduced_mass, e.absorption)] for e in entries]
    )
    warnings = truncation_warnings(partials, [energy], top)
    for message in warnings:
        logger.warning(message)
    return TotalRate(
        energy=energy, l_max=top, rate=float(partials.sum()), warnings=warnings
    )
