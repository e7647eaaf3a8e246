import pytest

from dyaniso.core.config import Settings, get_settings
from dyaniso.core.run_config import BAKED_TABLE1, RunConfig, load_run_config
from dyaniso.core.units import Unit, to_au
from dyaniso.exceptions import ConfigurationError

CONFIG_TEXT = """\
[atom]
j = 8
isotope_mass_amu = 161.927   # 162Dy

[dispersion]
delta_c6_au = 30

[scattering]
r_match_inner = 40
l_max = 4

[fields]
b_fields_gauss = 1, 10, 100
"""


def test_defaults():
    config = RunConfig()
    assert config.atom.j == 8
    assert config.atom.g_j == pytest.approx(1.24159)
    assert config.dispersion.k_source == BAKED_TABLE1
    assert config.dispersion.uses_baked_table
    assert config.scattering.c6 == 1878.0
    assert config.scattering.r_match_outer is None
    assert config.fields.b_fields_gauss == [10.0, 100.0]


def test_load_run_config(tmp_path):
    path = tmp_path / "run.cfg"
    path.write_text(CONFIG_TEXT, encoding="utf-8")
    config = load_run_config(path)
    assert config.atom.isotope_mass_amu == pytest.approx(161.927)
    assert config.dispersion.delta_c6_au == 30.0
    assert config.scattering.r_match_inner == 40.0
    assert config.scattering.l_max == 4
    assert config.scattering.grid_step == 0.1
    assert config.fields.b_fields_gauss == [1.0, 10.0, 100.0]
    assert config.b_fields_au[0] == pytest.approx(to_au(1.0, Unit.GAUSS))


@pytest.mark.parametrize(
    "text",
    [
        "[atoms]\nj = 8\n",
        "[atom]\nspin = 8\n",
        "[atom]\nj = -1\n",
        "[fields]\nb_fields_gauss = 10, -5\n",
        "[scattering]\nemin_kelvin = 1e-3\nemax_kelvin = 1e-6\n",
        "not an ini file",
    ],
)
def test_invalid_config_files(tmp_path, text):
    path = tmp_path / "bad.cfg"
    path.write_text(text, encoding="utf-8")
    with pytest.raises(ConfigurationError):
        load_run_config(path)


def test_missing_config_file(tmp_path):
    with pytest.raises(ConfigurationError):
        load_run_config(tmp_path / "absent.cfg")


def test_with_overrides():
    config = RunConfig().with_overrides("scattering", l_max=2, r_match_inner=None)
    assert config.scattering.l_max == 2
    assert config.scattering.r_match_inner == 35.0
    with pytest.raises(ConfigurationError):
        RunConfig().with_overrides("scattering", grid_step=-1.0)


def test_collision_config():
    collision = RunConfig().collision_config([1e-9])
    assert collision.c6 == 1878.0
    assert collision.reduced_mass == pytest.approx(0.5 * 163.929 * 1822.888486209)
    assert collision.energies == [1e-9]


def test_settings_from_environment(monkeypatch):
    monkeypatch.setenv("DYANISO_MAX_WORKERS", "2")
    monkeypatch.setenv("DYANISO_OUTPUT_DIR", "/tmp/dyaniso-test")
    get_settings.cache_clear()
    try:
        settings = get_settings()
        assert settings.MAX_WORKERS == 2
        assert settings.OUTPUT_DIR == "/tmp/dyaniso-test"
    finally:
        get_settings.cache_clear()


def test_settings_defaults():
    settings = Settings()
    assert settings.FLOAT_FORMAT == "%.8e"
    assert settings.PROJECT_NAME == "dyaniso"
