import logging
import threading
from dataclasses import dataclass
from typing import List, Tuple, Union

import numpy as np
from cachetools import LRUCache, cached

from dyaniso.exceptions import DomainError
from dyaniso.models.potentials import CoupledState, Parity

from .wigner import clebsch_gordan_float

logger = logging.getLogger(__name__)

DEFAULT_J = 8


@dataclass(frozen=True)
class SymmetrizedBasis:
    """
    Coupled states of one (Omega, parity) block and their expansion in |m1, m2>.

    ``transform[i, k]`` is <(j j) J_i Omega | m1_k, m2_k> with the uncoupled states
    ordered by ascending m1 (see :func:`uncoupled_block`). Rows are orthonormal.
    """

    omega: int
    parity: Parity
    states: Tuple[CoupledState, ...]
    transform: np.ndarray

    @property
    def dimension(self) -> int:
        return len(self.states)


def _as_parity(parity: Union[Parity, str]) -> Parity:
    try:
        return Parity(parity)
    except ValueError as exc:
        raise DomainError(f"parity must be 'g' or 'u', got {parity!r}") from exc


def _check_omega(omega: int, j: int) -> None:
    if abs(omega) > 2 * j:
        raise DomainError(f"|Omega| = {abs(omega)} exceeds j1 + j2 = {2 * j}")


def uncoupled_block(omega: int, j: int = DEFAULT_J) -> List[Tuple[int, int]]:
    """Pair states (m1, m2) with m1 + m2 = omega, ordered by ascending m1."""
    _check_omega(omega, j)
    lo = max(-j, omega - j)
    hi = min(j, omega + j)
    return [(m1, omega - m1) for m1 in range(lo, hi + 1)]


@cached(cache=LRUCache(maxsize=256), lock=threading.Lock())
def full_transform(omega: int, j: int = DEFAULT_J) -> Tuple[Tuple[int, ...], np.ndarray]:
    """
    Square orthogonal matrix from the uncoupled block to all |J Omega>, J = |Omega| ... 2j.

    Returns:
        (J values, matrix) with ``matrix[i, k] = <j m1_k; j m2_k | J_i Omega>``.
    """
    pairs = uncoupled_block(omega, j)
    totals = tuple(range(abs(omega), 2 * j + 1))
    matrix = np.array(
        [[clebsch_gordan_float(j, m1, j, m2, big_j, omega) for m1, m2 in pairs] for big_j in totals]
    )
    matrix.setflags(write=False)
    return totals, matrix


def symmetrized_basis(
    omega: int, parity: Union[Parity, str], j: int = DEFAULT_J
) -> SymmetrizedBasis:
    """
    Builds the gerade (even J) or ungerade (odd J) states of one Omega block.

    Args:
        omega: Projection of the total angular momentum on the internuclear axis.
        parity: ``Parity.GERADE``/``"g"`` or ``Parity.UNGERADE``/``"u"``.
        j: Angular momentum of each (identical) atom.

    Returns:
        A :class:`SymmetrizedBasis`; empty when no J of that parity reaches |Omega|.

    Raises:
        DomainError: If |omega| > 2j or the parity label is unknown.
    """
    parity = _as_parity(parity)
    totals, matrix = full_transform(omega, j)
    rows = [i for i, big_j in enumerate(totals) if Parity.of_total_j(big_j) is parity]
    states = tuple(
        CoupledState(J=totals[i], omega=omega, parity=parity, j_atom=j) for i in rows
    )
    transform = matrix[rows, :] if rows else np.zeros((0, matrix.shape[1]))
    return SymmetrizedBasis(omega=omega, parity=parity, states=states, transform=transform)


def potential_census(j: int = DEFAULT_J) -> Tuple[int, int]:
    """Number of distinct gerade and ungerade potentials, counting Omega >= 0 only."""
    gerade = ungerade = 0
    for omega in range(0, 2 * j + 1):
        gerade += symmetrized_basis(omega, Parity.GERADE, j).dimension
        ungerade += symmetrized_basis(omega, Parity.UNGERADE, j).dimension
    return gerade, ungerade
