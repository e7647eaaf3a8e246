import json

import pytest

from dyaniso import PairInteractionClient, RunConfig
from dyaniso.core.units import Unit, to_au
from dyaniso.exceptions import DomainError
from dyaniso.services import spectra_frame

LINELIST = "7 20000 0.1\n8 21000 0.2\n9 23000 0.3\n"


@pytest.fixture
def client(tmp_path):
    return PairInteractionClient(output_dir=tmp_path, max_workers=2)


def test_defaults(client):
    assert client.j == 8
    assert client.k_tensor().get(8, 8) == 92438.922
    assert client.max_workers == 2


def test_k_tensor_from_linelist(tmp_path):
    path = tmp_path / "lines.txt"
    path.write_text(LINELIST, encoding="utf-8")
    config = RunConfig().with_overrides("dispersion", k_source=str(path))
    client = PairInteractionClient(run_config=config)
    k = client.k_tensor()
    assert k.get(7, 9) > 0
    assert client.k_tensor() is k


def test_c6_summary(client):
    summary = client.summarize(client.c6_spectra())
    assert summary.count_gerade + summary.count_ungerade == 153
    assert client.summarize(client.c6_spectra([16], ["u"])) is None


def test_adiabats_skip_empty_blocks(client):
    curve_sets = client.adiabats(client.radial_grid(20.0, 100.0, 5), [16])
    assert len(curve_sets) == 1
    assert curve_sets[0].parity.value == "g"


def test_radial_grid(client):
    assert client.radial_grid(20.0, 400.0, 1) == [20.0]
    assert client.radial_grid(20.0, 40.0, 3) == [20.0, 30.0, 40.0]


def test_scale_curves_and_crossings(client):
    names, curves = client.scale_curves(client.radial_grid(10.0, 100.0, 10), [10.0])
    assert names == ["zeeman_10G", "rotational", "mdd", "ad"]
    assert curves[0].values[0] == pytest.approx(1.24159 * 0.5 * to_au(10.0, Unit.GAUSS))
    crossings = client.crossings([10.0])
    assert crossings[0].curve_b == "zeeman_10G"


def test_quadrupole_ratio(client):
    assert 1e-8 < client.quadrupole_ratio(50.0) < 1e-6


def test_rate_table(client):
    table = client.rate_table([to_au(1e-4, Unit.KELVIN)], b_field_gauss=1.0)
    assert table.l_values == list(range(7))
    assert table.born is not None


def test_barriers(client):
    assert [b.l for b in client.barriers()] == list(range(1, 7))


def test_validate_c6(client, tmp_path):
    path = tmp_path / "lines.txt"
    path.write_text(LINELIST, encoding="utf-8")
    assert client.validate_c6(path).agrees


def test_write_embeds_config(client, tmp_path):
    spectra = client.c3_spectra([0], ["g"])
    paths = client.write(spectra_frame(spectra), "c3_spectrum")
    assert [p.name for p in paths] == ["c3_spectrum.csv", "c3_spectrum.json"]
    payload = json.loads((tmp_path / "c3_spectrum.json").read_text())
    assert payload["config"]["atom"]["j"] == 8
    assert len(payload["records"]) == 9


def test_out_of_range_omega(client):
    with pytest.raises(DomainError):
        client.c3_spectra([20])
