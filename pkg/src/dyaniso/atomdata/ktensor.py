"""
K tensor of dipole coupling strengths.

    K[ja][jb] = sum over lines a (upper j = ja) and b (upper j = jb) of
                |<j||d||a>|^2 |<j||d||b>|^2 / (dE_a + dE_b)

Oscillator strengths follow the absorption convention with the degeneracy of the
lower (ground) level:

    f = (2/3) dE |<j||d||j'>|^2 / (2 j + 1)

so a line list quoted with emission f values or upper-level degeneracy rescales K.
"""

import logging
from typing import List

import numpy as np

from dyaniso.exceptions import DomainError, LineListValidationError
from dyaniso.models.atomic import KTensor, TransitionLine

from .parser import check_selection_rule

logger = logging.getLogger(__name__)

# Published table for j1 = j2 = 8 (rows/columns ja, jb = 7, 8, 9). The source prints
# 81313.663 above the diagonal and 81313.662 below it; the upper value is kept.
TABLE1_VALUES = (
    (71528.597, 81313.663, 88173.833),
    (81313.663, 92438.922, 100240.311),
    (88173.833, 100240.311, 108705.654),
)


def reduced_dipole_sq_from_f(line: TransitionLine, j_ground: int) -> float:
    """
    Converts an absorption oscillator strength into |<j_ground||d||j_excited>|^2.

    Args:
        line: A line carrying ``oscillator_strength``.
        j_ground: Angular momentum of the lower level.

    Returns:
        (3/2) (2 j_ground + 1) f / dE in atomic units.

    Raises:
        DomainError: If the line has no oscillator strength or zero energy.
    """
    if line.oscillator_strength is None:
        raise DomainError("line carries no oscillator strength")
    if line.energy == 0:
        raise DomainError("cannot convert a line with zero excitation energy")
    return 1.5 * (2 * j_ground + 1) * line.oscillator_strength / line.energy


def line_dipole_squared(line: TransitionLine, j_ground: int) -> float:
    """Squared reduced dipole of a line, converting from f when needed."""
    if line.reduced_dipole_squared is not None:
        return line.reduced_dipole_squared
    return reduced_dipole_sq_from_f(line, j_ground)


def build_k_tensor(lines: List[TransitionLine], j_ground: int = 8) -> KTensor:
    """
    Assembles the K tensor from a transition line list.

    Raises:
        LineListValidationError: If the list is empty or a line is dipole-forbidden.
    """
    if not lines:
        raise LineListValidationError("cannot build a K tensor from an empty line list")
    for line in lines:
        check_selection_rule(line, j_ground)

    j_lo = j_ground - 1
    index = np.array([line.excited_j - j_lo for line in lines])
    dipole_sq = np.array([line_dipole_squared(line, j_ground) for line in lines])
    energy = np.array([line.energy for line in lines])

    # All line pairs at once: weight[a, b] = d_a^2 d_b^2 / (E_a + E_b)
    weight = np.outer(dipole_sq, dipole_sq) / (energy[:, None] + energy[None, :])
    values = np.zeros((3, 3))
    np.add.at(values, (index[:, None], index[None, :]), weight)
    values = 0.5 * (values + values.T)

    logger.debug("Built K tensor from %d lines", len(lines))
    return KTensor(j_ground=j_ground, values=values.tolist())


def baked_table1() -> KTensor:
    """Returns the published K tensor for two ground-state Dy atoms (j = 8)."""
    return KTensor(j_ground=8, values=[list(row) for row in TABLE1_VALUES])
