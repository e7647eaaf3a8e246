"""
Run configuration: the physical inputs of one pipeline run.

The on-disk format is a sectioned ``key = value`` text file::

    [atom]
    j = 8
    g_j = 1.24159
    isotope_mass_amu = 163.929

    [scattering]
    r_match_inner = 35
    l_max = 6

    [fields]
    b_fields_gauss = 10, 100
"""

import configparser
import logging
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

from pydantic import BaseModel, Field, ValidationError, field_validator, model_validator

from dyaniso.core.units import CODATA2018, Unit, pair_reduced_mass, to_au
from dyaniso.exceptions import ConfigurationError
from dyaniso.models.scattering import CollisionConfig

logger = logging.getLogger(__name__)

BAKED_TABLE1 = "baked_table1"


class AtomConfig(BaseModel):
    j: int = Field(default=8, ge=1, description="Ground-level angular momentum of each atom")
    g_j: float = Field(default=CODATA2018.g_factor_gj, gt=0, description="Lande factor")
    isotope_mass_amu: float = Field(default=163.929, gt=0)
    quadrupole_au: float = Field(default=-0.00524, description="Atomic quadrupole moment Q")

    @property
    def reduced_mass(self) -> float:
        """Pair reduced mass in electron masses."""
        return pair_reduced_mass(self.isotope_mass_amu)


class DispersionConfig(BaseModel):
    k_source: str = Field(
        default=BAKED_TABLE1, description="'baked_table1' or the path of a line-list file"
    )
    delta_c6_au: float = Field(default=25.0, ge=0, description="Typical C6 anisotropy")

    @property
    def uses_baked_table(self) -> bool:
        return self.k_source == BAKED_TABLE1


class ScatteringSettings(BaseModel):
    c6: float = Field(default=1878.0, gt=0, description="Isotropic C6 of the universal model, a.u.")
    r_match_inner: float = Field(default=35.0, gt=0, description="Absorbing radius R_c, a0")
    r_match_outer: Optional[float] = Field(default=None, gt=0)
    grid_step: float = Field(default=0.1, gt=0)
    l_max: int = Field(default=6, ge=0)
    emin_kelvin: float = Field(default=1e-6, gt=0)
    emax_kelvin: float = Field(default=1.5e-3, gt=0)
    energy_points: int = Field(default=60, ge=1)

    @model_validator(mode="after")
    def _ordered(self) -> "ScatteringSettings":
        if self.emax_kelvin < self.emin_kelvin:
            raise ValueError("emax_kelvin must not be below emin_kelvin")
        if self.r_match_outer is not None and self.r_match_outer <= self.r_match_inner:
            raise ValueError("r_match_outer must exceed r_match_inner")
        return self


class FieldsConfig(BaseModel):
    b_fields_gauss: List[float] = Field(default_factory=lambda: [10.0, 100.0])

    @field_validator("b_fields_gauss")
    @classmethod
    def _positive(cls, values: List[float]) -> List[float]:
        if any(b <= 0 for b in values):
            raise ValueError("magnetic fields must be positive")
        return values


class OutputConfig(BaseModel):
    directory: Optional[str] = Field(
        default=None, description="Output directory; None falls back to Settings.OUTPUT_DIR"
    )
    format: str = Field(default="csv", pattern="^(csv|json)$")
    energy_unit: str = Field(default="au", pattern="^(au|mK)$")


class RunConfig(BaseModel):
    atom: AtomConfig = Field(default_factory=AtomConfig)
    dispersion: DispersionConfig = Field(default_factory=DispersionConfig)
    scattering: ScatteringSettings = Field(default_factory=ScatteringSettings)
    fields: FieldsConfig = Field(default_factory=FieldsConfig)
    output: OutputConfig = Field(default_factory=OutputConfig)

    def collision_config(self, energies_au: Optional[List[float]] = None) -> CollisionConfig:
        """Builds the single-channel scattering input from this run."""
        s = self.scattering
        return CollisionConfig(
            c6=s.c6,
            reduced_mass=self.atom.reduced_mass,
            r_match_inner=s.r_match_inner,
            r_match_outer=s.r_match_outer,
            grid_step=s.grid_step,
            l_max=s.l_max,
            energies=list(energies_au or []),
        )

    @property
    def b_fields_au(self) -> List[float]:
        return [to_au(b, Unit.GAUSS) for b in self.fields.b_fields_gauss]

    def with_overrides(self, section: str, **values: Any) -> "RunConfig":
        """Returns a copy with the non-None ``values`` applied to one section."""
        updates = {k: v for k, v in values.items() if v is not None}
        if not updates:
            return self
        current = getattr(self, section)
        try:
            merged = type(current)(**{**current.model_dump(), **updates})
        except ValidationError as exc:
            raise ConfigurationError(f"Invalid [{section}] override: {exc}") from exc
        return self.model_copy(update={section: merged})


_SECTIONS: Dict[str, type] = {
    "atom": AtomConfig,
    "dispersion": DispersionConfig,
    "scattering": ScatteringSettings,
    "fields": FieldsConfig,
    "output": OutputConfig,
}


def _section_values(name: str, section: configparser.SectionProxy) -> Dict[str, Any]:
    model = _SECTIONS[name]
    values: Dict[str, Any] = {}
    for key, raw in section.items():
        if key not in model.model_fields:
            raise ConfigurationError(f"Unknown key '{key}' in section [{name}]")
        if key == "b_fields_gauss":
            values[key] = [item.strip() for item in raw.split(",") if item.strip()]
        elif raw.strip().lower() in ("none", ""):
            values[key] = None
        else:
            values[key] = raw.strip()
    return values


def load_run_config(path: Union[str, Path]) -> RunConfig:
    """
    Reads a sectioned ``key = value`` run file.

    Args:
        path: File location.

    Returns:
        The validated RunConfig; sections and keys not in the file keep their defaults.

    Raises:
        ConfigurationError: For a missing file, an unknown section or key, or a
            value that fails validation.
    """
    parser = configparser.ConfigParser(inline_comment_prefixes=("#", ";"))
    try:
        with open(path, "r", encoding="utf-8") as handle:
            parser.read_file(handle)
    except OSError as exc:
        raise ConfigurationError(f"Cannot read config file {path}: {exc}") from exc
    except configparser.Error as exc:
        raise ConfigurationError(f"Malformed config file {path}: {exc}") from exc

    payload: Dict[str, Any] = {}
    for name in parser.sections():
        if name not in _SECTIONS:
            raise ConfigurationError(f"Unknown section [{name}] in {path}")
        payload[name] = _section_values(name, parser[name])

    try:
        config = RunConfig(**payload)
    except ValidationError as exc:
        raise ConfigurationError(f"Invalid run configuration in {path}: {exc}") from exc
    logger.info("Loaded run configuration from %s", path)
    return config
