import logging
from concurrent.futures import ThreadPoolExecutor
from typing import List, Optional

import numpy as np

from dyaniso.core.config import get_settings
from dyaniso.core.units import CODATA2018, Unit, to_au
from dyaniso.exceptions import ComputationError, DomainError
from dyaniso.models.scattering import CollisionConfig, RateTable, SMatrixEntry

from .born import born_rates
from .universal import (
    rate_from_absorption,
    solve_smatrices,
    truncation_warnings,
    unitarity_limit,
)

logger = logging.getLogger(__name__)


def default_energy_grid(
    emin_kelvin: float = 1e-6, emax_kelvin: float = 1.5e-3, points: int = 60
) -> List[float]:
    """Log-spaced collision energies in Hartree."""
    if not 0 < emin_kelvin <= emax_kelvin:
        raise DomainError("energy range must satisfy 0 < emin <= emax")
    if points < 1:
        raise DomainError("need at least one energy point")
    grid = np.geomspace(emin_kelvin, emax_kelvin, points)
    return [to_au(float(e), Unit.KELVIN) for e in grid]


def build_rate_table(
    config: CollisionConfig,
    b_field: Optional[float] = None,
    j: int = 8,
    g_j: float = CODATA2018.g_factor_gj,
    max_workers: Optional[int] = None,
) -> RateTable:
    """
    Universal partial and total loss rates on ``config.energies``, with Born rates
    when a field is given.

    Energies are integrated in parallel; the table keeps the input energy order.

    Args:
        config: Scattering problem; an empty energy list selects the default grid.
        b_field: Field for the Born rates in atomic units, or None to skip them.
        j: Atomic angular momentum (Born rates only).
        g_j: Lande factor (Born rates only).
        max_workers: Thread pool width, defaulting to Settings.MAX_WORKERS.

    Raises:
        ComputationError: If an energy point fails for a reason other than the
            configuration checks.
    """
    energies = list(config.energies) or default_energy_grid()
    l_values = list(range(config.l_max + 1))
    workers = max_workers or get_settings().MAX_WORKERS

    def solve(energy: float) -> List[SMatrixEntry]:
        return solve_smatrices(config, energy, l_values)

    logger.info(
        "Building rate table: %d energies, l <= %d, R_c = %g",
        len(energies),
        config.l_max,
        config.r_match_inner,
    )
    try:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            per_energy = list(pool.map(solve, energies))
    except (ArithmeticError, np.linalg.LinAlgError) as exc:
        logger.error("Scattering integration failed", exc_info=True)
        raise ComputationError(f"scattering integration failed: {exc}") from exc

    m_r = config.reduced_mass
    rates = np.array(
        [
            [
                rate_from_absorption(l, e, m_r, entries[l].absorption)
                for e, entries in zip(energies, per_energy)
            ]
            for l in l_values
        ]
    )
    limits = np.array([[unitarity_limit(l, e, m_r) for e in energies] for l in l_values])
    totals = rates.sum(axis=0)

    warnings = truncation_warnings(rates, energies, config.l_max)
    for message in warnings:
        logger.warning(message)

    born = born_rates(b_field, energies, m_r, j, g_j) if b_field is not None else None
    return RateTable(
        energies=energies,
        l_values=l_values,
        per_l_rates=rates.tolist(),
        unitarity_limits=limits.tolist(),
        total_rate=totals.tolist(),
        born=born,
        warnings=warnings,
    )
