"""
C6 and C3 interaction matrices for two identical atoms of angular momentum j.

Uncoupled pair states |m1, m2> (projections on the internuclear axis) are indexed
as ``(m1 + j) * (2j + 1) + (m2 + j)``. Sign conventions:

    U_disp = -C6 / R^6        (C6 > 0 is attractive)
    U_mdd  = -C3 / R^3        (C3 of either sign)
"""

import logging
import threading
from typing import List, Tuple, Union

import numpy as np
from cachetools import LRUCache, cached

from dyaniso.angular.basis import DEFAULT_J, symmetrized_basis, uncoupled_block
from dyaniso.angular.wigner import wigner3j_float
from dyaniso.core.units import CODATA2018
from dyaniso.models.atomic import KTensor
from dyaniso.models.potentials import OmegaBlock, Parity

logger = logging.getLogger(__name__)


def pair_index(m1: int, m2: int, j: int = DEFAULT_J) -> int:
    return (m1 + j) * (2 * j + 1) + (m2 + j)


def pair_states(j: int = DEFAULT_J) -> List[Tuple[int, int]]:
    """All (m1, m2) in index order."""
    return [(m1, m2) for m1 in range(-j, j + 1) for m2 in range(-j, j + 1)]


def _three_j(j_a: int, j_b: int, m_a: int, q: int, m_b: int) -> float:
    return wigner3j_float(2 * j_a, 2, 2 * j_b, 2 * m_a, 2 * q, 2 * m_b)


def a_tensor(
    m1: int, m2: int, m1p: int, m2p: int, ja: int, jb: int, j1: int = DEFAULT_J, j2: int = DEFAULT_J
) -> float:
    """
    Angular factor A^{j1 j2 ja jb}_{m1 m2, m1' m2'} of the dispersion matrix.

        A = sum_{ma, mb} (1 + d(m1, ma)) (1 + d(m1', ma))
            (j1 1 ja; -m1, m1 - ma, ma) (j2 1 jb; -m2, m2 - mb, mb)
            (ja 1 j1; -ma, ma - m1', m1') (jb 1 j2; -mb, mb - m2', m2')

    Zero unless m1 + m2 = m1' + m2'.
    """
    if m1 + m2 != m1p + m2p:
        return 0.0
    total = 0.0
    for ma in range(max(-ja, m1 - 1, m1p - 1), min(ja, m1 + 1, m1p + 1) + 1):
        mb = m1 + m2 - ma
        if abs(mb) > jb:
            continue
        weight = (1 + (m1 == ma)) * (1 + (m1p == ma))
        total += (
            weight
            * _three_j(j1, ja, -m1, m1 - ma, ma)
            * _three_j(j2, jb, -m2, m2 - mb, mb)
            * _three_j(ja, j1, -ma, ma - m1p, m1p)
            * _three_j(jb, j2, -mb, mb - m2p, m2p)
        )
    return total


def _ground_to_excited(j: int, j_exc: int, enhance_longitudinal: bool) -> np.ndarray:
    """[m, m_exc] -> (1 + d(m, m_exc)) (j 1 j_exc; -m, m - m_exc, m_exc), factor optional."""
    out = np.zeros((2 * j + 1, 2 * j_exc + 1))
    for m in range(-j, j + 1):
        for m_exc in range(max(-j_exc, m - 1), min(j_exc, m + 1) + 1):
            factor = 2.0 if (enhance_longitudinal and m == m_exc) else 1.0
            out[m + j, m_exc + j_exc] = factor * _three_j(j, j_exc, -m, m - m_exc, m_exc)
    return out


def _excited_to_ground(j: int, j_exc: int, enhance_longitudinal: bool) -> np.ndarray:
    """[m_exc, m'] -> (1 + d(m', m_exc)) (j_exc 1 j; -m_exc, m_exc - m', m'), factor optional."""
    out = np.zeros((2 * j_exc + 1, 2 * j + 1))
    for m_exc in range(-j_exc, j_exc + 1):
        for mp in range(max(-j, m_exc - 1), min(j, m_exc + 1) + 1):
            factor = 2.0 if (enhance_longitudinal and mp == m_exc) else 1.0
            out[m_exc + j_exc, mp + j] = factor * _three_j(j_exc, j, -m_exc, m_exc - mp, mp)
    return out


def _pair_omegas(j_1: int, j_2: int) -> np.ndarray:
    """m_1 + m_2 for every uncoupled pair state, in Kronecker order."""
    return np.add.outer(np.arange(-j_1, j_1 + 1), np.arange(-j_2, j_2 + 1)).ravel()


@cached(cache=LRUCache(maxsize=64), lock=threading.Lock())
def angular_c6_matrix(ja: int, jb: int, j: int = DEFAULT_J) -> np.ndarray:
    """
    A^{j j ja jb} as a (2j+1)^2 square matrix in the uncoupled pair basis.

    Summing over (ma, mb) factorizes into Kronecker products, one factor per atom,
    restricted to intermediate pairs with ma + mb = m1 + m2. The (1 + delta) weights
    sit on atom 1 only.
    """
    left = np.kron(_ground_to_excited(j, ja, True), _ground_to_excited(j, jb, False))
    right = np.kron(_excited_to_ground(j, ja, True), _excited_to_ground(j, jb, False))
    conserved = _pair_omegas(j, j)[:, None] == _pair_omegas(ja, jb)[None, :]
    left = np.where(conserved, left, 0.0)
    right = np.where(conserved.T, right, 0.0)
    matrix = left @ right
    matrix = 0.5 * (matrix + matrix.T)
    matrix.setflags(write=False)
    return matrix


def full_c6_matrix(k_tensor: KTensor) -> np.ndarray:
    """C6(m1 m2, m1' m2') = sum_{ja, jb} K[ja][jb] A^{j j ja jb} over the full pair space."""
    j = k_tensor.j_ground
    size = (2 * j + 1) ** 2
    matrix = np.zeros((size, size))
    for ja in k_tensor.j_values:
        for jb in k_tensor.j_values:
            matrix += k_tensor.get(ja, jb) * angular_c6_matrix(ja, jb, j)
    return matrix


@cached(cache=LRUCache(maxsize=16), lock=threading.Lock())
def dipole_dipole_operator(j: int = DEFAULT_J) -> np.ndarray:
    """<m1 m2| j1.j2 - 3 j1z j2z |m1' m2'> over the full pair space (dimensionless)."""
    size = (2 * j + 1) ** 2
    jj = j * (j + 1)
    op = np.zeros((size, size))
    for m1 in range(-j, j + 1):
        for m2 in range(-j, j + 1):
            row = pair_index(m1, m2, j)
            # j1z j2z - 3 j1z j2z
            op[row, row] = -2.0 * m1 * m2
            # (j1+ j2- + j1- j2+) / 2
            if m1 < j and m2 > -j:
                col = pair_index(m1 + 1, m2 - 1, j)
                value = 0.5 * np.sqrt((jj - m1 * (m1 + 1)) * (jj - m2 * (m2 - 1)))
                op[col, row] = value
                op[row, col] = value
    op.setflags(write=False)
    return op


def c3_prefactor(g_j: float = CODATA2018.g_factor_gj) -> float:
    """mu0 (g_j mu_B)^2 / (4 pi) in atomic units: alpha^2 (g_j / 2)^2."""
    alpha = CODATA2018.fine_structure_alpha
    mu = g_j * CODATA2018.bohr_magneton_au
    return alpha**2 * mu**2


def full_c3_matrix(j: int = DEFAULT_J, g_j: float = CODATA2018.g_factor_gj) -> np.ndarray:
    """C3 matrix over the full pair space, with U_mdd = -C3 / R^3."""
    return -c3_prefactor(g_j) * dipole_dipole_operator(j)


def _block_indices(omega: int, j: int) -> List[int]:
    return [pair_index(m1, m2, j) for m1, m2 in uncoupled_block(omega, j)]


def project_block(
    full_matrix: np.ndarray, omega: int, parity: Union[Parity, str], r_power: int, j: int = DEFAULT_J
) -> OmegaBlock:
    """Restricts a pair-space matrix to one Omega and rotates it into the gerade/ungerade basis."""
    basis = symmetrized_basis(omega, parity, j)
    indices = _block_indices(omega, j)
    uncoupled = full_matrix[np.ix_(indices, indices)]
    transform = basis.transform
    block = transform @ uncoupled @ transform.T
    block = 0.5 * (block + block.T)
    return OmegaBlock(
        omega=omega,
        parity=basis.parity,
        basis=list(basis.states),
        matrix=block,
        r_power=r_power,
        transform=transform,
    )


def build_c6_block(k_tensor: KTensor, omega: int, parity: Union[Parity, str]) -> OmegaBlock:
    """
    Dispersion block for one (Omega, parity): C6 assembled on the m1 + m2 = Omega
    states and transformed to the total-J basis.

    Raises:
        DomainError: If |omega| > 2j or the parity is unknown.
    """
    j = k_tensor.j_ground
    uncoupled_block(omega, j)  # range check before any matrix work
    return project_block(full_c6_matrix(k_tensor), omega, parity, 6, j)


def build_c3_block(
    omega: int, parity: Union[Parity, str], j: int = DEFAULT_J, g_j: float = CODATA2018.g_factor_gj
) -> OmegaBlock:
    """Magnetic dipole-dipole block, C3 = -alpha^2 (g_j/2)^2 <j1.j2 - 3 j1z j2z>."""
    uncoupled_block(omega, j)
    return project_block(full_c3_matrix(j, g_j), omega, parity, 3, j)


def omega_leakage(full_matrix: np.ndarray, j: int = DEFAULT_J) -> float:
    """Largest |element| connecting pair states of different Omega."""
    omegas = np.array([m1 + m2 for m1, m2 in pair_states(j)])
    mask = omegas[:, None] != omegas[None, :]
    return float(np.abs(full_matrix[mask]).max()) if mask.any() else 0.0


def parity_leakage(full_matrix: np.ndarray, omega: int, j: int = DEFAULT_J) -> float:
    """Largest |element| coupling the gerade and ungerade states of one Omega."""
    gerade = symmetrized_basis(omega, Parity.GERADE, j).transform
    ungerade = symmetrized_basis(omega, Parity.UNGERADE, j).transform
    if not len(gerade) or not len(ungerade):
        return 0.0
    indices = _block_indices(omega, j)
    coupling = gerade @ full_matrix[np.ix_(indices, indices)] @ ungerade.T
    return float(np.abs(coupling).max())
