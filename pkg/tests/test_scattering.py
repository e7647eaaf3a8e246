import math

import numpy as np
import pytest
from scipy.optimize import minimize_scalar

from dyaniso.core.units import Unit, from_au, pair_reduced_mass, to_au
from dyaniso.exceptions import (
    ComputationError,
    DomainError,
    MatchingError,
    NoBarrierError,
    ResolutionError,
)
from dyaniso.models import CollisionConfig, TotalRate
from dyaniso.scattering import universal
from dyaniso.scattering import (
    barrier,
    barriers,
    build_rate_table,
    characteristic_length_rx,
    default_energy_grid,
    discrete_flux,
    matching_radius,
    mean_scattering_length,
    numerov_propagate,
    partial_rate,
    riccati_hankel,
    solve_smatrices,
    threshold_rate,
    total_rate,
    truncation_warnings,
    unitarity_limit,
    universal_smatrix,
)

M_R = pair_reduced_mass(163.929)


@pytest.fixture
def collision():
    return CollisionConfig(c6=1878.0, reduced_mass=M_R, r_match_inner=35.0, l_max=4)


def kelvin(value):
    return to_au(value, Unit.KELVIN)


# Numerov


def _sine_error(step):
    n_points = int(round(2.0 / step)) + 1
    radius = step * np.arange(n_points)
    f = -np.ones((n_points, 1))
    u = numerov_propagate(f, np.array([0.0]), np.array([math.sin(step)]), step)
    return abs(u[-1, 0].real - math.sin(radius[-1]))


def test_numerov_is_fourth_order():
    coarse, fine = _sine_error(0.1), _sine_error(0.05)
    assert coarse < 1e-5
    assert math.log2(coarse / fine) >= 3.0


def test_numerov_flux_is_conserved():
    step = 0.02
    radius = 1.0 + step * np.arange(2000)
    f = -(1.0 + 1.0 / (1.0 + radius**2))[:, None]
    seed = np.exp(1j * radius[:2])
    u = numerov_propagate(f, seed[:1], seed[1:], step)
    first = discrete_flux(u, f, step, index=0)
    last = discrete_flux(u, f, step, index=len(radius) - 2)
    assert first[0] > 0
    assert last[0] == pytest.approx(first[0], rel=1e-10)


def test_numerov_batches_channels():
    step = 0.05
    f = np.column_stack([-np.ones(50), -4.0 * np.ones(50)])
    u1 = np.array([math.sin(step), math.sin(2 * step)])
    u = numerov_propagate(f, np.zeros(2), u1, step)
    assert u.shape == (50, 2)
    assert u[-1, 1].real == pytest.approx(math.sin(2 * 49 * step), abs=1e-5)


def test_numerov_needs_two_points():
    with pytest.raises(DomainError):
        numerov_propagate(np.zeros((1, 1)), np.zeros(1), np.zeros(1), 0.1)


# Characteristic scales and barriers


def test_characteristic_length():
    r_x = characteristic_length_rx(1878.0, M_R)
    assert r_x == pytest.approx(154.0, abs=1.0)
    assert mean_scattering_length(1878.0, M_R) == pytest.approx(0.477989 * r_x, rel=1e-6)


def test_g_wave_barrier():
    info = barrier(4, 1890.0, M_R)
    assert 1e3 * info.height_kelvin == pytest.approx(1.5, abs=0.2)

    def negative_potential(r):
        return -(20.0 / (2.0 * M_R * r**2) - 1890.0 / r**6)

    search = minimize_scalar(
        negative_potential, bounds=(50.0, 200.0), method="bounded", options={"xatol": 1e-10}
    )
    assert info.height == pytest.approx(-search.fun, rel=1e-8)
    assert info.r_barrier == pytest.approx(search.x, rel=1e-4)


def test_barriers_table():
    table = barriers(6, 1878.0, M_R)
    assert [b.l for b in table] == [1, 2, 3, 4, 5, 6]
    heights = [b.height for b in table]
    assert heights == sorted(heights)
    with pytest.raises(NoBarrierError):
        barrier(0, 1878.0, M_R)


def test_riccati_hankel():
    x = 3.7
    h_minus, h_plus = riccati_hankel(np.array([0]), x)
    assert h_plus[0] == pytest.approx(np.exp(1j * x))
    assert h_minus[0] == pytest.approx(np.exp(-1j * x))
    x = 1e4
    _, h_plus = riccati_hankel(np.array([2]), x)
    assert h_plus[0] == pytest.approx(np.exp(1j * (x - math.pi)), abs=1e-3)


# Universal model


def test_grid_resolution_is_checked(collision):
    coarse = collision.model_copy(update={"grid_step": 1.0})
    with pytest.raises(ResolutionError):
        universal_smatrix(coarse, kelvin(5e-4), 0)


def test_explicit_matching_radius_inside_potential(collision):
    close = collision.model_copy(update={"r_match_outer": 100.0})
    with pytest.raises(MatchingError):
        matching_radius(close, kelvin(5e-4))


def test_automatic_matching_radius(collision):
    energy = kelvin(5e-4)
    radius = matching_radius(collision, energy)
    assert collision.c6 / radius**6 < 1e-3 * energy


def test_non_positive_energy(collision):
    with pytest.raises(DomainError):
        universal_smatrix(collision, 0.0, 0)


def test_smatrix_entries(collision):
    entries = solve_smatrices(collision, kelvin(5e-4), range(5))
    assert [e.l for e in entries] == [0, 1, 2, 3, 4]
    for entry in entries:
        assert abs(entry.s_value) <= 1.0
        assert 0.0 <= entry.absorption <= 1.0
        assert entry.absorption == pytest.approx(1.0 - abs(entry.s_value) ** 2, abs=1e-12)
    # higher partial waves are more strongly reflected below their barriers
    assert entries[0].absorption > entries[4].absorption


def test_threshold_limit_matches_mean_scattering_length(collision):
    beta = partial_rate(collision, kelvin(1e-8), 0)
    assert beta == pytest.approx(threshold_rate(1878.0, M_R), rel=0.05)


@pytest.mark.parametrize("l, slope", [(0, 0.0), (1, 1.0)])
def test_wigner_threshold_laws(collision, l, slope):
    low, high = kelvin(1e-7), kelvin(4e-7)
    beta_low = partial_rate(collision, low, l)
    beta_high = partial_rate(collision, high, l)
    observed = math.log(beta_high / beta_low) / math.log(high / low)
    assert observed == pytest.approx(slope, abs=0.1)


@pytest.mark.slow
def test_total_rate_at_500_microkelvin():
    config = CollisionConfig(c6=1878.0, reduced_mass=M_R, r_match_inner=35.0, l_max=6)
    result = total_rate(config, kelvin(5e-4))
    assert isinstance(result, TotalRate)
    assert 5e-11 <= from_au(result.rate, Unit.RATE) <= 2.1e-10
    assert result.warnings == []


def test_partial_rates_below_unitarity(collision):
    energy = kelvin(1e-3)
    for entry in solve_smatrices(collision, energy, range(5)):
        beta = partial_rate(collision, energy, entry.l)
        assert beta <= unitarity_limit(entry.l, energy, M_R) * (1 + 1e-12)


@pytest.mark.slow
def test_step_halving_converges_at_fourth_order(collision):
    config = collision.model_copy(update={"r_match_outer": 2000.0})
    energy = kelvin(1e-4)
    losses = []
    for step in (0.2, 0.1, 0.05, 0.025):
        refined = config.model_copy(update={"grid_step": step})
        losses.append([e.absorption for e in solve_smatrices(refined, energy, range(3))])
    differences = np.abs(np.diff(np.array(losses), axis=0))
    orders = np.log2(differences[:-1] / differences[1:])
    assert np.all(orders >= 3.0), orders


def test_outgoing_boundary_wave_violates_unitarity(collision, monkeypatch):
    inward = universal._inward_wkb

    def outgoing(radius, r_x):
        value, slope = inward(radius, r_x)
        return np.conj(value), np.conj(slope)

    monkeypatch.setattr(universal, "_inward_wkb", outgoing)
    with pytest.raises(ComputationError, match="l=0"):
        solve_smatrices(collision, kelvin(1e-4), range(2))


def test_total_rate_reports_truncation(collision, caplog):
    result = total_rate(collision, kelvin(1e-3), l_max=0)
    assert result.l_max == 0
    assert result.rate == pytest.approx(partial_rate(collision, kelvin(1e-3), 0))
    assert len(result.warnings) == 1
    assert "l_max=0" in result.warnings[0]
    assert "l_max=0" in caplog.text


@pytest.mark.slow
def test_matching_radius_insensitivity(collision):
    energy = kelvin(5e-4)
    nominal = matching_radius(collision, energy)
    rates = [
        total_rate(collision.model_copy(update={"r_match_outer": factor * nominal}), energy).rate
        for factor in (0.8, 1.2)
    ]
    assert rates[0] == pytest.approx(rates[1], rel=5e-3)


# Rate tables


def test_default_energy_grid():
    grid = default_energy_grid()
    assert len(grid) == 60
    assert grid[0] == pytest.approx(kelvin(1e-6))
    assert grid[-1] == pytest.approx(kelvin(1.5e-3))
    with pytest.raises(DomainError):
        default_energy_grid(1e-3, 1e-6)


def test_build_rate_table(collision):
    config = collision.model_copy(
        update={"l_max": 2, "energies": [kelvin(1e-5), kelvin(1e-4), kelvin(1e-3)]}
    )
    table = build_rate_table(config, b_field=to_au(1.0, Unit.GAUSS), max_workers=2)
    assert table.l_values == [0, 1, 2]
    assert len(table.per_l_rates) == 3
    for index, total in enumerate(table.total_rate):
        assert total == pytest.approx(sum(row[index] for row in table.per_l_rates))
    assert table.born is not None
    assert len(table.born.gamma_total) == 3


def test_truncation_warning_for_s_wave_only(collision):
    config = collision.model_copy(update={"l_max": 0, "energies": [kelvin(1e-3)]})
    table = build_rate_table(config)
    assert table.born is None
    assert len(table.warnings) == 1
    assert "l_max=0" in table.warnings[0]


def test_truncation_warnings_threshold():
    rates = np.array([[1.0, 1.0], [1e-4, 1e-2]])
    warnings = truncation_warnings(rates, [1e-9, 2e-9], 1)
    assert len(warnings) == 1
    assert "2.0000e-09" in warnings[0]


def test_collision_config_validation():
    with pytest.raises(ValueError):
        CollisionConfig(reduced_mass=M_R, energies=[-1.0])
    with pytest.raises(ValueError):
        CollisionConfig(reduced_mass=M_R, r_match_inner=50.0, r_match_outer=40.0)
