"""
Energy-splitting scales that compete at long range, all in atomic units:

    Zeeman       g_j B / 2
    rotational   l(l+1) / (2 m_r R^2), l = 2 by default
    MDD          2 alpha^2 j (g_j/2)^2 / R^3
    AD           delta_C6 / R^6
"""

import logging
from typing import Callable, Sequence, Union

import numpy as np

from dyaniso.core.units import CODATA2018
from dyaniso.exceptions import DomainError
from dyaniso.models.potentials import ScaleCurve, ScaleKind

logger = logging.getLogger(__name__)

ArrayLike = Union[float, Sequence[float], np.ndarray]

DEFAULT_DELTA_C6 = 25.0


def _radii(radius: ArrayLike) -> np.ndarray:
    values = np.asarray(radius, dtype=float)
    if np.any(values <= 0):
        raise DomainError("R must be positive")
    return values


def _scalar_or_array(values: np.ndarray) -> Union[float, np.ndarray]:
    return float(values) if values.ndim == 0 else values


def zeeman_scale(b_field: float, g_j: float = CODATA2018.g_factor_gj) -> float:
    """Splitting g_j mu_B B between adjacent Zeeman levels; B in atomic units."""
    if b_field < 0:
        raise DomainError(f"magnetic field must be non-negative, got {b_field}")
    return g_j * CODATA2018.bohr_magneton_au * b_field


def rotational_scale(radius: ArrayLike, reduced_mass: float, l: int = 2):
    """Gap between the s-wave and the l-wave centrifugal energy at R."""
    if reduced_mass <= 0:
        raise DomainError("reduced mass must be positive")
    r = _radii(radius)
    return _scalar_or_array(l * (l + 1) / (2.0 * reduced_mass * r**2))


def mdd_scale(radius: ArrayLike, j: int = 8, g_j: float = CODATA2018.g_factor_gj):
    alpha = CODATA2018.fine_structure_alpha
    r = _radii(radius)
    return _scalar_or_array(2.0 * alpha**2 * j * (g_j / 2.0) ** 2 / r**3)


def ad_scale(radius: ArrayLike, delta_c6: float = DEFAULT_DELTA_C6):
    if delta_c6 < 0:
        raise DomainError(f"delta_c6 must be non-negative, got {delta_c6}")
    r = _radii(radius)
    return _scalar_or_array(delta_c6 / r**6)


def scale_function(
    kind: Union[ScaleKind, str],
    parameter: float,
    j: int = 8,
    g_j: float = CODATA2018.g_factor_gj,
) -> Callable[[float], float]:
    """
    The scale of ``kind`` as a function of R.

    ``parameter`` is B for Zeeman, delta C6 for AD and the reduced mass for the
    rotational curve; MDD ignores it.
    """
    kind = ScaleKind(kind)
    if kind is ScaleKind.ZEEMAN:
        level = zeeman_scale(parameter, g_j)
        return lambda r: level
    if kind is ScaleKind.ROTATIONAL:
        return lambda r: rotational_scale(r, parameter)
    if kind is ScaleKind.MDD:
        return lambda r: mdd_scale(r, j, g_j)
    return lambda r: ad_scale(r, parameter)


def scale_curve(
    kind: Union[ScaleKind, str],
    parameter: float,
    r_grid: Sequence[float],
    j: int = 8,
    g_j: float = CODATA2018.g_factor_gj,
) -> ScaleCurve:
    """Evaluates one scale on a radial grid."""
    radii = _radii(r_grid)
    func = scale_function(kind, parameter, j, g_j)
    values = [float(func(r)) for r in np.atleast_1d(radii)]
    return ScaleCurve(
        kind=ScaleKind(kind),
        parameter=parameter,
        j=j,
        g_j=g_j,
        r_grid=[float(r) for r in np.atleast_1d(radii)],
        values=values,
    )
