import math

import pytest

from dyaniso.core.units import (
    CODATA2018,
    Unit,
    from_au,
    pair_reduced_mass,
    resolve_unit,
    to_au,
)
from dyaniso.exceptions import ConfigurationError


def test_rate_unit_in_cgs():
    assert CODATA2018.rate_cm3s_per_au == pytest.approx(6.126e-9, rel=1e-3)


def test_kelvin_and_hartree():
    assert to_au(1.0, Unit.KELVIN) == pytest.approx(3.1668e-6, rel=1e-4)
    assert from_au(to_au(2.5e-4, "K"), "K") == pytest.approx(2.5e-4, rel=1e-14)


def test_gauss_to_atomic_field():
    assert to_au(2.35051756758e9, Unit.GAUSS) == pytest.approx(1.0)


def test_wavenumber():
    assert to_au(219474.6313632, "cm^-1") == pytest.approx(1.0, rel=1e-12)


def test_aliases_resolve():
    assert resolve_unit("gauss") is Unit.GAUSS
    assert resolve_unit("Kelvin") is Unit.KELVIN
    assert resolve_unit("cm3/s") is Unit.RATE
    assert resolve_unit(Unit.BOHR) is Unit.BOHR


def test_unknown_unit():
    with pytest.raises(ConfigurationError):
        to_au(1.0, "furlong")


def test_pair_reduced_mass_of_dy164():
    m_r = pair_reduced_mass(163.929)
    assert m_r == pytest.approx(0.5 * 163.929 * 1822.888486209)
    with pytest.raises(ConfigurationError):
        pair_reduced_mass(0.0)


def test_bohr_magneton_convention():
    assert CODATA2018.bohr_magneton_au == 0.5
    assert math.isclose(CODATA2018.fine_structure_alpha, 1 / 137.035999, rel_tol=1e-8)
