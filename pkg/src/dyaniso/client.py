"""
Main client interface for the dyaniso package.
"""

import logging
from pathlib import Path
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np

from . import __version__
from .atomdata import baked_table1, build_k_tensor, load_linelist
from .core.config import get_settings
from .core.run_config import RunConfig
from .core.units import Unit, to_au
from .longrange import (
    build_c3_block,
    c3_spectra,
    c6_spectra,
    combined_adiabats,
    full_c6_matrix,
    isotropic_c6,
    project_block,
    qq_to_dispersion_ratio,
    summarize,
    validate_c6_equivalence,
)
from .longrange.spectrum import block_keys
from .models import (
    AdiabaticSpectrum,
    BarrierInfo,
    C6EquivalenceReport,
    Crossing,
    KTensor,
    Parity,
    PotentialCurveSet,
    RateTable,
    ScaleCurve,
    ScaleKind,
    SpectrumSummary,
)
from .scales import crossing_table, scale_curve
from .scattering import barriers, build_rate_table, default_energy_grid
from .services import export_service

logger = logging.getLogger(__name__)


class PairInteractionClient:
    """
    Main client for the dyaniso package.

    Wraps one RunConfig and exposes the pipeline steps (spectra, curves, scales,
    rates) plus writers for their CSV/JSON output.
    """

    def __init__(
        self,
        run_config: Optional[RunConfig] = None,
        output_dir: Optional[Union[str, Path]] = None,
        max_workers: Optional[int] = None,
    ):
        """
        Initialize the PairInteractionClient.

        Args:
            run_config: Physical inputs; defaults describe two 164Dy atoms.
            output_dir: Where output files go; falls back to the run config and then
                to Settings.OUTPUT_DIR.
            max_workers: Thread pool width for block and energy parallelism.
        """
        self.settings = get_settings()
        self.config = run_config or RunConfig()
        self.output_dir = output_dir or self.config.output.directory
        self.max_workers = max_workers or self.settings.MAX_WORKERS
        self._k_tensor: Optional[KTensor] = None

    @property
    def j(self) -> int:
        return self.config.atom.j

    @property
    def g_j(self) -> float:
        return self.config.atom.g_j

    def k_tensor(self) -> KTensor:
        """The baked table or a tensor rebuilt from the configured line list."""
        if self._k_tensor is None:
            source = self.config.dispersion
            if source.uses_baked_table:
                self._k_tensor = baked_table1()
            else:
                lines = load_linelist(source.k_source, self.j)
                self._k_tensor = build_k_tensor(lines, self.j)
                logger.info("K tensor built from %s", source.k_source)
        return self._k_tensor

    # Long-range spectra

    def c6_spectra(
        self,
        omegas: Optional[Iterable[int]] = None,
        parities: Optional[Iterable[Union[Parity, str]]] = None,
    ) -> List[AdiabaticSpectrum]:
        return c6_spectra(self.k_tensor(), omegas, parities, self.max_workers)

    def c3_spectra(
        self,
        omegas: Optional[Iterable[int]] = None,
        parities: Optional[Iterable[Union[Parity, str]]] = None,
    ) -> List[AdiabaticSpectrum]:
        return c3_spectra(omegas, parities, self.j, self.g_j, self.max_workers)

    @staticmethod
    def summarize(spectra: Sequence[AdiabaticSpectrum]) -> Optional[SpectrumSummary]:
        """Summary of the spectra, or None when every requested block is empty."""
        if not any(s.eigenvalues for s in spectra):
            return None
        return summarize(spectra)

    def isotropic_c6(self) -> float:
        return isotropic_c6(self.k_tensor())

    def adiabats(
        self,
        r_grid: Sequence[float],
        omegas: Optional[Iterable[int]] = None,
        parities: Optional[Iterable[Union[Parity, str]]] = None,
    ) -> List[PotentialCurveSet]:
        """Combined dispersion + dipole-dipole curves for every non-empty block."""
        full_c6 = full_c6_matrix(self.k_tensor())
        curve_sets = []
        for omega, parity in block_keys(omegas, parities, self.j):
            c6 = project_block(full_c6, omega, parity, 6, self.j)
            if c6.dimension == 0:
                continue
            c3 = build_c3_block(omega, parity, self.j, self.g_j)
            curve_sets.append(combined_adiabats(c6, c3, r_grid, self.max_workers))
        return curve_sets

    def quadrupole_ratio(self, radius: float = 50.0) -> float:
        return qq_to_dispersion_ratio(
            self.config.atom.quadrupole_au, radius, self.config.scattering.c6
        )

    def validate_c6(self, linelist_path: Union[str, Path]) -> C6EquivalenceReport:
        lines = load_linelist(linelist_path, self.j)
        return validate_c6_equivalence(lines, self.j)

    # Splitting scales

    def scale_curves(
        self, r_grid: Sequence[float], b_fields_gauss: Optional[Sequence[float]] = None
    ) -> Tuple[List[str], List[ScaleCurve]]:
        """Zeeman lines for each field, then rotational, MDD and AD curves."""
        fields = list(b_fields_gauss or self.config.fields.b_fields_gauss)
        names: List[str] = []
        curves: List[ScaleCurve] = []
        for b_gauss in fields:
            names.append(f"zeeman_{b_gauss:g}G")
            curves.append(
                scale_curve(
                    ScaleKind.ZEEMAN,
                    to_au(b_gauss, Unit.GAUSS),
                    r_grid,
                    self.j,
                    self.g_j,
                )
            )
        reduced_mass = self.config.atom.reduced_mass
        delta_c6 = self.config.dispersion.delta_c6_au
        for name, kind, parameter in (
            ("rotational", ScaleKind.ROTATIONAL, reduced_mass),
            ("mdd", ScaleKind.MDD, reduced_mass),
            ("ad", ScaleKind.AD, delta_c6),
        ):
            names.append(name)
            curves.append(scale_curve(kind, parameter, r_grid, self.j, self.g_j))
        return names, curves

    def crossings(
        self, b_fields_gauss: Optional[Sequence[float]] = None
    ) -> List[Crossing]:
        fields = list(b_fields_gauss or self.config.fields.b_fields_gauss)
        return crossing_table(
            fields,
            self.config.atom.reduced_mass,
            self.config.dispersion.delta_c6_au,
            self.j,
            self.g_j,
        )

    # Scattering

    def energy_grid(self) -> List[float]:
        s = self.config.scattering
        return default_energy_grid(s.emin_kelvin, s.emax_kelvin, s.energy_points)

    def rate_table(
        self,
        energies: Optional[Sequence[float]] = None,
        b_field_gauss: Optional[float] = None,
    ) -> RateTable:
        """
        Universal and (when a field is given) Born loss rates.

        Args:
            energies: Collision energies in Hartree; the configured grid by default.
            b_field_gauss: Field for the Born rates; None skips them.
        """
        collision = self.config.collision_config(list(energies or self.energy_grid()))
        b_field = to_au(b_field_gauss, Unit.GAUSS) if b_field_gauss is not None else None
        return build_rate_table(collision, b_field, self.j, self.g_j, self.max_workers)

    def barriers(self) -> List[BarrierInfo]:
        s = self.config.scattering
        return barriers(max(s.l_max, 1), s.c6, self.config.atom.reduced_mass)

    # Output

    def write(
        self,
        frame: Any,
        stem: str,
        fmt: Optional[str] = None,
        extra: Optional[Dict[str, Any]] = None,
    ) -> List[Path]:
        """Writes one table and its JSON mirror into the output directory."""
        directory = export_service.resolve_output_dir(self.output_dir)
        return export_service.write_table(
            frame,
            directory,
            stem,
            self.config.model_dump(mode="json"),
            __version__,
            fmt or self.config.output.format,
            extra,
        )

    @staticmethod
    def radial_grid(r_min: float, r_max: float, points: int) -> List[float]:
        """Uniform grid; a single point collapses onto r_min."""
        if points == 1:
            return [float(r_min)]
        return [float(r) for r in np.linspace(r_min, r_max, points)]
