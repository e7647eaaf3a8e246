"""Crossing radii of the splitting scales, which locate where spin flips set in."""

import logging
from typing import Callable, List, Optional, Sequence, Tuple

from scipy.optimize import bisect

from dyaniso.core.units import CODATA2018, Unit, to_au
from dyaniso.exceptions import DomainError, NoCrossingError
from dyaniso.models.potentials import Crossing, ScaleKind

from .splittings import DEFAULT_DELTA_C6, scale_function

logger = logging.getLogger(__name__)

DEFAULT_BRACKET = (5.0, 1000.0)
CROSSING_TOLERANCE = 1e-3


def crossing_radius(
    curve_a: Callable[[float], float],
    curve_b: Callable[[float], float],
    bracket: Tuple[float, float] = DEFAULT_BRACKET,
) -> float:
    """
    Finds R with curve_a(R) = curve_b(R) by bisection to 1e-3 a0.

    Args:
        curve_a: First scale as a function of R.
        curve_b: Second scale as a function of R.
        bracket: (R_lo, R_hi) with 0 < R_lo < R_hi.

    Returns:
        The crossing radius in a0.

    Raises:
        DomainError: For an invalid bracket.
        NoCrossingError: If the difference does not change sign across the bracket.
    """
    lo, hi = bracket
    if not 0 < lo < hi:
        raise DomainError(f"bracket must satisfy 0 < R_lo < R_hi, got {bracket}")

    def difference(r: float) -> float:
        return float(curve_a(r)) - float(curve_b(r))

    f_lo, f_hi = difference(lo), difference(hi)
    if f_lo == 0.0 and f_hi != 0.0:
        return lo
    if f_hi == 0.0 and f_lo != 0.0:
        return hi
    if f_lo * f_hi >= 0.0:
        raise NoCrossingError(f"curves do not cross between {lo} and {hi} a0")
    return float(bisect(difference, lo, hi, xtol=CROSSING_TOLERANCE))


def ad_mdd_crossing(
    delta_c6: float = DEFAULT_DELTA_C6, j: int = 8, g_j: float = CODATA2018.g_factor_gj
) -> float:
    """Closed form R^3 = delta_C6 / (2 alpha^2 j (g_j/2)^2)."""
    if delta_c6 <= 0:
        raise DomainError("delta_c6 must be positive for a crossing")
    alpha = CODATA2018.fine_structure_alpha
    return (delta_c6 / (2.0 * alpha**2 * j * (g_j / 2.0) ** 2)) ** (1.0 / 3.0)


def _zeeman_name(b_gauss: float) -> str:
    return f"zeeman_{b_gauss:g}G"


def _try_crossing(
    name_a: str,
    name_b: str,
    curve_a: Callable[[float], float],
    curve_b: Callable[[float], float],
    bracket: Tuple[float, float],
    b_field_gauss: Optional[float] = None,
) -> Crossing:
    try:
        radius: Optional[float] = crossing_radius(curve_a, curve_b, bracket)
    except NoCrossingError:
        logger.debug("No %s x %s crossing inside %s", name_a, name_b, bracket)
        radius = None
    return Crossing(curve_a=name_a, curve_b=name_b, b_field_gauss=b_field_gauss, radius=radius)


def crossing_table(
    b_fields_gauss: Sequence[float],
    reduced_mass: float,
    delta_c6: float = DEFAULT_DELTA_C6,
    j: int = 8,
    g_j: float = CODATA2018.g_factor_gj,
    bracket: Tuple[float, float] = DEFAULT_BRACKET,
) -> List[Crossing]:
    """
    Crossings of AD and MDD with each Zeeman line and with the rotational curve,
    plus AD with MDD. A pair that does not cross in the bracket has radius None.
    """
    ad = scale_function(ScaleKind.AD, delta_c6, j, g_j)
    mdd = scale_function(ScaleKind.MDD, 0.0, j, g_j)
    rotational = scale_function(ScaleKind.ROTATIONAL, reduced_mass, j, g_j)

    table: List[Crossing] = []
    for b_gauss in b_fields_gauss:
        zeeman = scale_function(ScaleKind.ZEEMAN, to_au(b_gauss, Unit.GAUSS), j, g_j)
        name = _zeeman_name(b_gauss)
        table.append(_try_crossing("ad", name, ad, zeeman, bracket, b_gauss))
        table.append(_try_crossing("mdd", name, mdd, zeeman, bracket, b_gauss))
    table.append(_try_crossing("ad", "rotational", ad, rotational, bracket))
    table.append(_try_crossing("mdd", "rotational", mdd, rotational, bracket))
    table.append(_try_crossing("ad", "mdd", ad, mdd, bracket))
    return table


def spin_flip_radius(
    b_field_gauss: float,
    delta_c6: float = DEFAULT_DELTA_C6,
    j: int = 8,
    g_j: float = CODATA2018.g_factor_gj,
    bracket: Tuple[float, float] = DEFAULT_BRACKET,
) -> float:
    """
    Outermost radius where AD or MDD reaches the Zeeman splitting at this field.

    Raises:
        NoCrossingError: If neither interaction crosses the Zeeman line in the bracket.
    """
    zeeman = scale_function(ScaleKind.ZEEMAN, to_au(b_field_gauss, Unit.GAUSS), j, g_j)
    radii = []
    for kind, parameter in ((ScaleKind.AD, delta_c6), (ScaleKind.MDD, 0.0)):
        try:
            radii.append(crossing_radius(scale_function(kind, parameter, j, g_j), zeeman, bracket))
        except NoCrossingError:
            continue
    if not radii:
        raise NoCrossingError(f"no interaction scale reaches the {b_field_gauss} G Zeeman line")
    return max(radii)
