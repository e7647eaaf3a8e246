"""Order-of-magnitude size of the quadrupole-quadrupole interaction."""

from dyaniso.exceptions import DomainError

DEFAULT_QUADRUPOLE_AU = -0.00524

# O(1) angular factor standing in for the full quadrupole tensor coupling
DEFAULT_ANGULAR_FACTOR = 1.0


def qq_interaction_scale(
    quadrupole: float, radius: float, angular_factor: float = DEFAULT_ANGULAR_FACTOR
) -> float:
    """
    Magnitude Q^2 * angular_factor / R^5 of the quadrupole-quadrupole energy, a.u.

    Raises:
        DomainError: If radius <= 0.
    """
    if radius <= 0:
        raise DomainError(f"R must be positive, got {radius}")
    return abs(angular_factor) * quadrupole**2 / radius**5


def qq_to_dispersion_ratio(
    quadrupole: float,
    radius: float,
    c6: float,
    angular_factor: float = DEFAULT_ANGULAR_FACTOR,
) -> float:
    """|U_QQ| / |U_disp| = Q^2 R / C6 (times the angular factor)."""
    if c6 <= 0:
        raise DomainError(f"C6 must be positive, got {c6}")
    scale = qq_interaction_scale(quadrupole, radius, angular_factor)
    return scale * radius**6 / c6
