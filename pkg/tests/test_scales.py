import numpy as np
import pytest

from dyaniso.core.units import Unit, pair_reduced_mass, to_au
from dyaniso.exceptions import DomainError, NoCrossingError
from dyaniso.models import ScaleKind
from dyaniso.scales import (
    ad_mdd_crossing,
    ad_scale,
    crossing_radius,
    crossing_table,
    mdd_scale,
    rotational_scale,
    scale_curve,
    spin_flip_radius,
    zeeman_scale,
)

M_R = pair_reduced_mass(163.929)


def test_mdd_scale_at_50_bohr():
    assert mdd_scale(50.0) == pytest.approx(2.63e-9, rel=5e-3)


def test_zeeman_scale():
    b_field = to_au(10.0, Unit.GAUSS)
    assert zeeman_scale(b_field) == pytest.approx(1.24159 * 0.5 * b_field)
    with pytest.raises(DomainError):
        zeeman_scale(-1.0)


def test_scales_accept_arrays():
    radii = np.array([10.0, 20.0, 40.0])
    values = ad_scale(radii)
    assert values.shape == (3,)
    assert values[0] / values[1] == pytest.approx(64.0)
    assert isinstance(rotational_scale(30.0, M_R), float)


def test_non_positive_radius():
    with pytest.raises(DomainError):
        mdd_scale(0.0)
    with pytest.raises(DomainError):
        ad_scale([10.0, -1.0])


def test_crossings_at_10_gauss():
    table = crossing_table([10.0], M_R)
    by_pair = {(c.curve_a, c.curve_b): c.radius for c in table}
    assert 44.0 < by_pair[("ad", "zeeman_10G")] < 48.0
    assert 48.0 < by_pair[("mdd", "zeeman_10G")] < 52.0


def test_crossings_at_100_gauss_are_inside_35_bohr():
    table = crossing_table([100.0], M_R)
    for crossing in table:
        if crossing.curve_b == "zeeman_100G":
            assert crossing.b_field_gauss == 100.0
            assert crossing.radius < 35.0


def test_interaction_and_rotation_crossings():
    table = crossing_table([10.0, 100.0], M_R)
    assert len(table) == 7
    by_pair = {(c.curve_a, c.curve_b): c.radius for c in table}
    assert by_pair[("ad", "mdd")] == pytest.approx(ad_mdd_crossing(), abs=1e-2)
    assert ad_mdd_crossing() == pytest.approx(42.4, abs=0.1)
    assert by_pair[("mdd", "rotational")] == pytest.approx(16.4, abs=0.1)
    assert by_pair[("ad", "rotational")] == pytest.approx(33.4, abs=0.1)


def test_missing_crossing_is_reported_as_none():
    table = crossing_table([1e-6], M_R, bracket=(5.0, 60.0))
    by_pair = {(c.curve_a, c.curve_b): c.radius for c in table}
    assert by_pair[("ad", "zeeman_1e-06G")] is None


def test_crossing_radius_needs_sign_change():
    with pytest.raises(NoCrossingError):
        crossing_radius(lambda r: 1.0, lambda r: 2.0)
    with pytest.raises(DomainError):
        crossing_radius(lambda r: 1.0, lambda r: 2.0, bracket=(10.0, 5.0))


def test_spin_flip_radius():
    assert spin_flip_radius(10.0) == pytest.approx(49.9, abs=0.2)
    with pytest.raises(NoCrossingError):
        spin_flip_radius(1e-6, bracket=(5.0, 60.0))


def test_scale_curve():
    curve = scale_curve(ScaleKind.MDD, M_R, [25.0, 50.0])
    assert curve.kind is ScaleKind.MDD
    assert curve.values[0] / curve.values[1] == pytest.approx(8.0)
    assert curve.r_grid == [25.0, 50.0]
