import json
import math

import numpy as np
import pandas as pd
import pytest

from dyaniso.exceptions import ComputationError
from dyaniso.models import (
    AdiabaticSpectrum,
    BornRates,
    Crossing,
    Parity,
    PotentialCurveSet,
    RateTable,
    ScaleCurve,
    ScaleKind,
)
from dyaniso.services import (
    crossings_frame,
    curves_frame,
    format_scientific,
    rate_frames,
    resolve_output_dir,
    scales_frame,
    spectra_frame,
    write_table,
)


def test_format_scientific():
    assert format_scientific(1878.123456789123) == "1.87812346e+03"
    assert format_scientific(0.0) == "0.00000000e+00"
    assert format_scientific(-2.5e-9, digits=3) == "-2.50e-09"


def test_spectra_frame_keeps_empty_blocks_out():
    spectra = [
        AdiabaticSpectrum(omega=16, parity=Parity.GERADE, r_power=6, eigenvalues=[1890.0]),
        AdiabaticSpectrum(omega=16, parity=Parity.UNGERADE, r_power=6, eigenvalues=[]),
    ]
    frame = spectra_frame(spectra)
    assert list(frame.columns) == ["omega", "parity", "adiabat_index", "value_au"]
    assert len(frame) == 1
    assert spectra_frame(spectra[1:]).empty


def test_curves_frame_in_millikelvin():
    curve_set = PotentialCurveSet(
        omega=0,
        parity=Parity.GERADE,
        r_grid=[20.0, 30.0],
        curves=np.array([[-1e-8, -2e-9]]),
        labels=[0],
    )
    frame = curves_frame([curve_set], energy_unit="mK")
    assert list(frame["R_a0"]) == [20.0, 30.0]
    assert frame["value_mK"].iloc[0] == pytest.approx(-1e-8 * 3.1577502480407e8)


def test_scales_frame_needs_shared_grid():
    a = ScaleCurve(kind=ScaleKind.AD, parameter=25.0, r_grid=[10.0, 20.0], values=[1.0, 2.0])
    b = ScaleCurve(kind=ScaleKind.MDD, parameter=0.0, r_grid=[10.0], values=[1.0])
    frame = scales_frame([a], ["ad"])
    assert list(frame.columns) == ["R_a0", "ad"]
    with pytest.raises(ComputationError):
        scales_frame([a, b], ["ad", "mdd"])


def test_crossings_frame():
    frame = crossings_frame([Crossing(curve_a="ad", curve_b="mdd", radius=42.4)])
    assert frame.loc[0, "radius"] == 42.4
    assert pd.isna(frame.loc[0, "b_field_gauss"])


def test_rate_frames_without_born():
    table = RateTable(
        energies=[1e-9, 2e-9],
        l_values=[0],
        per_l_rates=[[1e-3, 5e-4]],
        unitarity_limits=[[2e-3, 1e-3]],
        total_rate=[1e-3, 5e-4],
    )
    frames = rate_frames(table)
    assert set(frames) == {"rates_partial", "rates_summary"}
    assert len(frames["rates_partial"]) == 2
    assert frames["rates_summary"]["gamma1_cm3s"].isna().all()


def test_rate_frames_with_born():
    table = RateTable(
        energies=[1e-9],
        l_values=[0],
        per_l_rates=[[1e-3]],
        unitarity_limits=[[2e-3]],
        total_rate=[1e-3],
        born=BornRates(b_field=1e-9, gamma1=[1.0], gamma2=[0.5], gamma_total=[3.0]),
    )
    summary = rate_frames(table)["rates_summary"]
    assert summary["gamma_total_cm3s"].iloc[0] == pytest.approx(3.0 * 6.126e-9, rel=1e-3)


def test_write_table_csv_and_json(tmp_path):
    frame = pd.DataFrame({"R_a0": [10.0], "ad": [math.nan]})
    paths = write_table(frame, tmp_path, "scales", {"atom": {"j": 8}}, "0.1.0")
    assert [p.name for p in paths] == ["scales.csv", "scales.json"]
    assert (tmp_path / "scales.csv").read_text().splitlines()[1] == "1.00000000e+01,"
    payload = json.loads((tmp_path / "scales.json").read_text())
    assert payload["version"] == "0.1.0"
    assert payload["config"] == {"atom": {"j": 8}}
    assert payload["records"] == [{"R_a0": 10.0, "ad": None}]


def test_write_table_json_only(tmp_path):
    frame = pd.DataFrame({"x": [1.0]})
    paths = write_table(frame, tmp_path, "t", {}, "0.1.0", fmt="json", extra={"note": "n"})
    assert [p.name for p in paths] == ["t.json"]
    assert json.loads(paths[0].read_text())["note"] == "n"


def test_resolve_output_dir_creates_directory(tmp_path):
    target = tmp_path / "nested" / "out"
    assert resolve_output_dir(target) == target
    assert target.is_dir()


def test_json_floats_in_scientific_notation(tmp_path):
    frame = pd.DataFrame({"omega": [16], "value_au": [1878.123456789123]})
    write_table(frame, tmp_path, "c6_spectrum", {"atom": {"g_j": 1.24159}}, "0.1.0", fmt="json")
    text = (tmp_path / "c6_spectrum.json").read_text()
    assert '"value_au": 1.87812346e+03' in text
    assert '"g_j": 1.24159000e+00' in text
    assert '"omega": 16' in text
    assert '"version": "0.1.0"' in text
    assert "float:" not in text
    assert json.loads(text)["records"][0]["value_au"] == 1878.12346
