import math

import pytest

from dyaniso.core.units import Unit, from_au, pair_reduced_mass, to_au
from dyaniso.exceptions import DomainError
from dyaniso.scattering import born_gamma, born_rates, h_function, total_born_rate

M_R = pair_reduced_mass(163.929)


def test_h_function_limits():
    assert h_function(1.0 + 1e-6) == pytest.approx(-0.5, abs=1e-3)
    assert h_function(1e6) == pytest.approx(1.0, abs=1e-5)
    assert h_function(math.inf) == 1.0


def test_h_function_domain():
    with pytest.raises(DomainError):
        h_function(1.0)
    with pytest.raises(DomainError):
        h_function(0.5)


def test_total_rate_at_one_gauss():
    gamma = total_born_rate(to_au(1.0, Unit.GAUSS), to_au(5e-4, Unit.KELVIN), M_R)
    gamma_cgs = from_au(gamma, Unit.RATE)
    assert 1e-12 <= gamma_cgs <= 1e-9
    assert gamma_cgs == pytest.approx(1.76e-11, rel=0.03)


def test_single_and_double_flip_structure():
    b_field = to_au(1.0, Unit.GAUSS)
    energy = to_au(5e-4, Unit.KELVIN)
    j = 8
    gamma1 = born_gamma(b_field, energy, 1, M_R, j)
    gamma2 = born_gamma(b_field, energy, 2, M_R, j)

    zeeman = 1.24159 * 0.5 * b_field
    k_i = math.sqrt(2 * M_R * energy)
    k_f1 = math.sqrt(k_i**2 + 2 * M_R * zeeman)
    k_f2 = math.sqrt(k_i**2 + 4 * M_R * zeeman)
    expected = (
        2 * j * (1 + h_function(k_f1 / k_i)) * k_f1 / ((1 + h_function(k_f2 / k_i)) * k_f2)
    )
    assert gamma1 / gamma2 == pytest.approx(expected, rel=1e-12)


def test_rate_grows_with_field():
    energy = to_au(5e-4, Unit.KELVIN)
    low = total_born_rate(to_au(1.0, Unit.GAUSS), energy, M_R)
    high = total_born_rate(to_au(100.0, Unit.GAUSS), energy, M_R)
    assert high > low


@pytest.mark.parametrize(
    "b_field, energy, flip",
    [(0.0, 1e-9, 1), (1e-9, 0.0, 1), (1e-9, 1e-9, 3)],
)
def test_born_domain(b_field, energy, flip):
    with pytest.raises(DomainError):
        born_gamma(b_field, energy, flip, M_R)


def test_born_rates_on_grid():
    energies = [to_au(e, Unit.KELVIN) for e in (1e-5, 1e-4, 1e-3)]
    rates = born_rates(to_au(10.0, Unit.GAUSS), energies, M_R)
    assert len(rates.gamma1) == 3
    for g1, g2, total in zip(rates.gamma1, rates.gamma2, rates.gamma_total):
        assert total == pytest.approx(2 * (g1 + g2))
