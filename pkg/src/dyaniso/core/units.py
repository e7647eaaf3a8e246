"""
Physical constants and unit conversions.

Every other module works in Hartree atomic units (hbar = m_e = e = 1, mu_B = 1/2).
All conversion factors below derive from the single CODATA 2018 constant set pinned
in ``CODATA2018``:

- fine-structure constant alpha = 7.2973525693e-3
- E_h / k_B = 3.1577502480407e5 K
- atomic unit of magnetic flux density hbar/(e a0^2) = 2.35051756758e5 T
- Bohr radius a0 = 5.29177210903e-11 m
- atomic unit of time hbar/E_h = 2.4188843265857e-17 s
- m_u / m_e = 1822.888486209
- E_h / (h c) = 2.1947463136320e5 cm^-1
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Dict, Union

from dyaniso.exceptions import ConfigurationError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PhysicalConstants:
    """Constants in atomic units, or the SI/CGS size of one atomic unit."""

    fine_structure_alpha: float = 7.2973525693e-3
    bohr_magneton_au: float = 0.5
    g_factor_gj: float = 1.24159
    boltzmann_kB: float = 1.0 / 3.1577502480407e5
    amu_in_electron_masses: float = 1822.888486209
    gauss_per_au_field: float = 2.35051756758e9
    bohr_radius_cm: float = 5.29177210903e-9
    hartree_time_s: float = 2.4188843265857e-17
    hartree_wavenumber_cm: float = 2.1947463136320e5

    @property
    def rate_cm3s_per_au(self) -> float:
        """Size of the atomic rate-coefficient unit a0^3 / t_au in cm^3/s."""
        return self.bohr_radius_cm**3 / self.hartree_time_s


CODATA2018 = PhysicalConstants()


class Unit(str, Enum):
    GAUSS = "G"
    KELVIN = "K"
    WAVENUMBER = "cm^-1"
    RATE = "cm^3/s"
    AMU = "amu"
    BOHR = "a0"


_ALIASES: Dict[str, Unit] = {
    "g": Unit.GAUSS,
    "gauss": Unit.GAUSS,
    "k": Unit.KELVIN,
    "kelvin": Unit.KELVIN,
    "cm^-1": Unit.WAVENUMBER,
    "cm-1": Unit.WAVENUMBER,
    "1/cm": Unit.WAVENUMBER,
    "cm^3/s": Unit.RATE,
    "cm3/s": Unit.RATE,
    "amu": Unit.AMU,
    "u": Unit.AMU,
    "a0": Unit.BOHR,
    "bohr": Unit.BOHR,
}

# value_in_au = value * factor
_FACTORS: Dict[Unit, float] = {
    Unit.GAUSS: 1.0 / CODATA2018.gauss_per_au_field,
    Unit.KELVIN: CODATA2018.boltzmann_kB,
    Unit.WAVENUMBER: 1.0 / CODATA2018.hartree_wavenumber_cm,
    Unit.RATE: 1.0 / CODATA2018.rate_cm3s_per_au,
    Unit.AMU: CODATA2018.amu_in_electron_masses,
    Unit.BOHR: 1.0,
}


def resolve_unit(unit: Union[Unit, str]) -> Unit:
    """
    Normalizes a unit name or ``Unit`` member.

    Raises:
        ConfigurationError: If the unit is not one of the supported units.
    """
    if isinstance(unit, Unit):
        return unit
    key = str(unit).strip()
    try:
        return Unit(key)
    except ValueError:
        pass
    resolved = _ALIASES.get(key.lower())
    if resolved is None:
        raise ConfigurationError(
            f"Unknown unit '{unit}'. Supported: {[u.value for u in Unit]}"
        )
    return resolved


def to_au(value: float, unit: Union[Unit, str]) -> float:
    """
    Converts a value into Hartree atomic units.

    Energies become Hartree, lengths Bohr radii, magnetic fields atomic units of
    flux density, masses electron masses and rate coefficients a0^3 per atomic time.

    Args:
        value: The value in ``unit``.
        unit: One of G, K, cm^-1, cm^3/s, amu, a0.

    Returns:
        The value in atomic units.
    """
    return value * _FACTORS[resolve_unit(unit)]


def from_au(value: float, unit: Union[Unit, str]) -> float:
    """Inverse of :func:`to_au`."""
    return value / _FACTORS[resolve_unit(unit)]


def pair_reduced_mass(isotope_mass_amu: float) -> float:
    """Reduced mass of two identical atoms, in electron masses."""
    if isotope_mass_amu <= 0:
        raise ConfigurationError("Isotope mass must be positive")
    return 0.5 * to_au(isotope_mass_amu, Unit.AMU)
