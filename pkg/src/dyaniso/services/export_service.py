"""
CSV and JSON writers for spectra, curves, scales and rate tables.

CSV goes through pandas with a fixed float format; every JSON document carries the
package version and the resolved run configuration.
"""

import json
import logging
import math
import os
import re
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Union

import numpy as np
import pandas as pd

from dyaniso.core.config import get_settings
from dyaniso.core.units import Unit, from_au
from dyaniso.exceptions import ComputationError
from dyaniso.models.potentials import (
    AdiabaticSpectrum,
    C6EquivalenceReport,
    Crossing,
    PotentialCurveSet,
    ScaleCurve,
)
from dyaniso.models.scattering import BarrierInfo, RateTable

logger = logging.getLogger(__name__)

SPECTRUM_COLUMNS = ["omega", "parity", "adiabat_index", "value_au"]
CURVE_COLUMNS = ["omega", "parity", "adiabat_index", "R_a0", "value_au"]
PARTIAL_RATE_COLUMNS = ["energy_K", "l", "beta_l_cm3s", "unitarity_cm3s"]
SUMMARY_RATE_COLUMNS = [
    "energy_K",
    "beta_total_cm3s",
    "gamma1_cm3s",
    "gamma2_cm3s",
    "gamma_total_cm3s",
]


# Marks floats that leave json.dumps as strings and are unquoted afterwards
_FLOAT_TAG = "\x00float:"
_TAGGED_FLOAT = re.compile(r'"\\u0000float:([^"]*)"')


def format_scientific(value: float, digits: int = 9) -> str:
    """``value`` in scientific notation with ``digits`` significant digits."""
    return f"{value:.{digits - 1}e}"


def _clean(value: Any) -> Any:
    if isinstance(value, dict):
        return {k: _clean(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_clean(v) for v in value]
    if isinstance(value, np.ndarray):
        return _clean(value.tolist())
    if isinstance(value, (np.integer,)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        if not math.isfinite(value):
            return None
        return _FLOAT_TAG + format_scientific(float(value))
    return value


def spectra_frame(spectra: Sequence[AdiabaticSpectrum]) -> pd.DataFrame:
    rows = [
        {
            "omega": s.omega,
            "parity": s.parity.value,
            "adiabat_index": index,
            "value_au": value,
        }
        for s in spectra
        for index, value in enumerate(s.eigenvalues)
    ]
    return pd.DataFrame(rows, columns=SPECTRUM_COLUMNS)


def curves_frame(
    curve_sets: Sequence[PotentialCurveSet], energy_unit: str = "au"
) -> pd.DataFrame:
    """Long-format curves; ``energy_unit="mK"`` adds a value_mK column (E / k_B)."""
    rows = []
    for curve_set in curve_sets:
        for label, curve in zip(curve_set.labels, curve_set.curves):
            for radius, value in zip(curve_set.r_grid, curve):
                rows.append(
                    {
                        "omega": curve_set.omega,
                        "parity": curve_set.parity.value,
                        "adiabat_index": label,
                        "R_a0": radius,
                        "value_au": float(value),
                    }
                )
    frame = pd.DataFrame(rows, columns=CURVE_COLUMNS)
    if energy_unit == "mK":
        frame["value_mK"] = frame["value_au"].map(lambda e: 1e3 * from_au(e, Unit.KELVIN))
    return frame


def scales_frame(curves: Sequence[ScaleCurve], names: Sequence[str]) -> pd.DataFrame:
    """One R_a0 column plus one column per curve; all curves share the radial grid."""
    if not curves:
        return pd.DataFrame(columns=["R_a0"])
    data: Dict[str, List[float]] = {"R_a0": list(curves[0].r_grid)}
    for name, curve in zip(names, curves):
        if curve.r_grid != curves[0].r_grid:
            raise ComputationError("scale curves must share one radial grid")
        data[name] = list(curve.values)
    return pd.DataFrame(data)


def crossings_frame(crossings: Sequence[Crossing]) -> pd.DataFrame:
    return pd.DataFrame(
        [c.model_dump() for c in crossings],
        columns=["curve_a", "curve_b", "b_field_gauss", "radius"],
    )


def barriers_frame(infos: Sequence[BarrierInfo]) -> pd.DataFrame:
    return pd.DataFrame(
        [b.model_dump() for b in infos],
        columns=["l", "r_barrier", "height", "height_kelvin"],
    )


def deviations_frame(report: C6EquivalenceReport) -> pd.DataFrame:
    """Per-block relative deviations of a C6 equivalence check."""
    return pd.DataFrame(
        [b.model_dump(mode="json") for b in report.blocks],
        columns=["omega", "parity", "dimension", "max_relative_deviation"],
    )


def rate_frames(table: RateTable) -> Dict[str, pd.DataFrame]:
    """Partial-wave and summary rate tables in K and cm^3/s."""
    energies_k = [from_au(e, Unit.KELVIN) for e in table.energies]
    partial = pd.DataFrame(
        [
            {
                "energy_K": energies_k[i],
                "l": l,
                "beta_l_cm3s": from_au(table.per_l_rates[li][i], Unit.RATE),
                "unitarity_cm3s": from_au(table.unitarity_limits[li][i], Unit.RATE),
            }
            for i in range(len(energies_k))
            for li, l in enumerate(table.l_values)
        ],
        columns=PARTIAL_RATE_COLUMNS,
    )
    born = table.born
    summary = pd.DataFrame(
        {
            "energy_K": energies_k,
            "beta_total_cm3s": [from_au(b, Unit.RATE) for b in table.total_rate],
            "gamma1_cm3s": [from_au(g, Unit.RATE) for g in born.gamma1] if born else math.nan,
            "gamma2_cm3s": [from_au(g, Unit.RATE) for g in born.gamma2] if born else math.nan,
            "gamma_total_cm3s": (
                [from_au(g, Unit.RATE) for g in born.gamma_total] if born else math.nan
            ),
        },
        columns=SUMMARY_RATE_COLUMNS,
    )
    return {"rates_partial": partial, "rates_summary": summary}


def resolve_output_dir(directory: Optional[Union[str, Path]] = None) -> Path:
    """Explicit directory, else Settings.OUTPUT_DIR; created when missing."""
    path = Path(directory if directory is not None else get_settings().OUTPUT_DIR)
    os.makedirs(path, exist_ok=True)
    return path


def write_table(
    frame: pd.DataFrame,
    directory: Union[str, Path],
    stem: str,
    config: Dict[str, Any],
    version: str,
    fmt: str = "csv",
    extra: Optional[Dict[str, Any]] = None,
) -> List[Path]:
    """
    Writes ``<stem>.csv`` (format "csv") and always the ``<stem>.json`` mirror.

    Returns:
        Paths written, CSV first.
    """
    directory = Path(directory)
    written: List[Path] = []
    if fmt == "csv":
        csv_path = directory / f"{stem}.csv"
        frame.to_csv(csv_path, index=False, float_format=get_settings().FLOAT_FORMAT)
        written.append(csv_path)

    payload = {
        "version": version,
        "config": config,
        "records": frame.to_dict(orient="records"),
    }
    if extra:
        payload.update(extra)
    json_path = directory / f"{stem}.json"
    with open(json_path, "w", encoding="utf-8") as handle:
        text = json.dumps(_clean(payload), indent=2, allow_nan=False, default=str)
        handle.write(_TAGGED_FLOAT.sub(r"\1", text))
        handle.write("\n")
    written.append(json_path)
    logger.info("Wrote %s", ", ".join(str(p) for p in written))
    return written
