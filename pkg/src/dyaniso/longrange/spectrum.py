"""Diagonalization of the interaction blocks: adiabatic coefficients and R-dependent curves."""

import logging
from concurrent.futures import ThreadPoolExecutor
from itertools import product
from typing import Callable, Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np
from scipy.linalg import eigh

from dyaniso.angular.basis import DEFAULT_J
from dyaniso.core.config import get_settings
from dyaniso.core.units import CODATA2018
from dyaniso.exceptions import DomainError
from dyaniso.models.atomic import KTensor
from dyaniso.models.potentials import (
    AdiabaticSpectrum,
    OmegaBlock,
    Parity,
    PotentialCurveSet,
    SpectrumSummary,
)

from .tensors import build_c3_block, full_c6_matrix, project_block

logger = logging.getLogger(__name__)

BlockKey = Tuple[int, Parity]


def adiabatic_coefficients(block: OmegaBlock, with_vectors: bool = False) -> AdiabaticSpectrum:
    """
    Diagonalizes one block.

    Args:
        block: A non-empty OmegaBlock.
        with_vectors: Keep the eigenvectors (columns, same order as the eigenvalues).

    Returns:
        AdiabaticSpectrum with ascending eigenvalues.

    Raises:
        DomainError: If the block is empty.
    """
    if block.dimension == 0:
        raise DomainError(f"block Omega={block.omega}{block.parity.value} has no states")
    values, vectors = eigh(block.matrix)
    return AdiabaticSpectrum(
        omega=block.omega,
        parity=block.parity,
        r_power=block.r_power,
        eigenvalues=[float(v) for v in values],
        eigenvectors=vectors if with_vectors else None,
    )


def block_keys(
    omegas: Optional[Iterable[int]] = None,
    parities: Optional[Iterable[Union[Parity, str]]] = None,
    j: int = DEFAULT_J,
) -> List[BlockKey]:
    """(Omega, parity) pairs in output order: Omega ascending, gerade before ungerade."""
    omega_list = sorted(omegas) if omegas is not None else list(range(0, 2 * j + 1))
    parity_list = (
        [Parity(p) for p in parities]
        if parities is not None
        else [Parity.GERADE, Parity.UNGERADE]
    )
    parity_list.sort(key=lambda p: p is Parity.UNGERADE)
    return list(product(omega_list, parity_list))


def _checked_keys(
    omegas: Optional[Iterable[int]],
    parities: Optional[Iterable[Union[Parity, str]]],
    j: int,
) -> List[BlockKey]:
    keys = block_keys(omegas, parities, j)
    for omega, _ in keys:
        if abs(omega) > 2 * j:
            raise DomainError(f"|Omega| = {abs(omega)} exceeds {2 * j}")
    return keys


def _spectrum_or_empty(block: OmegaBlock) -> AdiabaticSpectrum:
    if block.dimension == 0:
        return AdiabaticSpectrum(
            omega=block.omega, parity=block.parity, r_power=block.r_power, eigenvalues=[]
        )
    return adiabatic_coefficients(block)


def _run_blocks(
    builder: Callable[[int, Parity], OmegaBlock],
    keys: Sequence[BlockKey],
    max_workers: Optional[int],
) -> List[AdiabaticSpectrum]:
    workers = max_workers or get_settings().MAX_WORKERS

    def task(key: BlockKey) -> AdiabaticSpectrum:
        logger.debug("Diagonalizing block Omega=%d%s", key[0], key[1].value)
        return _spectrum_or_empty(builder(*key))

    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(task, keys))


def c6_spectra(
    k_tensor: KTensor,
    omegas: Optional[Iterable[int]] = None,
    parities: Optional[Iterable[Union[Parity, str]]] = None,
    max_workers: Optional[int] = None,
) -> List[AdiabaticSpectrum]:
    """Adiabatic C6 coefficients of every requested block; empty blocks give empty spectra."""
    full = full_c6_matrix(k_tensor)
    j = k_tensor.j_ground

    keys = _checked_keys(omegas, parities, j)
    spectra = _run_blocks(
        lambda omega, parity: project_block(full, omega, parity, 6, j), keys, max_workers
    )
    logger.info("Computed C6 spectra for %d blocks", len(spectra))
    return spectra


def c3_spectra(
    omegas: Optional[Iterable[int]] = None,
    parities: Optional[Iterable[Union[Parity, str]]] = None,
    j: int = DEFAULT_J,
    g_j: float = CODATA2018.g_factor_gj,
    max_workers: Optional[int] = None,
) -> List[AdiabaticSpectrum]:
    """Adiabatic C3 coefficients of every requested block."""
    keys = _checked_keys(omegas, parities, j)
    spectra = _run_blocks(
        lambda omega, parity: build_c3_block(omega, parity, j, g_j), keys, max_workers
    )
    logger.info("Computed C3 spectra for %d blocks", len(spectra))
    return spectra


def _gerade_ungerade_gap(spectra: Sequence[AdiabaticSpectrum]) -> Optional[float]:
    """Largest distance from an ungerade eigenvalue to the nearest gerade one at equal Omega."""
    by_key = {(s.omega, s.parity): np.asarray(s.eigenvalues) for s in spectra}
    gaps = []
    for (omega, parity), ungerade in by_key.items():
        gerade = by_key.get((omega, Parity.GERADE))
        if parity is not Parity.UNGERADE or gerade is None:
            continue
        if not len(gerade) or not len(ungerade):
            continue
        gaps.append(float(np.abs(ungerade[:, None] - gerade[None, :]).min(axis=1).max()))
    return max(gaps) if gaps else None


def summarize(spectra: Sequence[AdiabaticSpectrum]) -> SpectrumSummary:
    """
    Census of a spectrum list over Omega >= 0.

    Raises:
        DomainError: If the spectra hold no eigenvalues.
    """
    arrays = [np.asarray(s.eigenvalues, dtype=float) for s in spectra]
    values = np.concatenate(arrays) if arrays else np.zeros(0)
    if values.size == 0:
        raise DomainError("no eigenvalues to summarize")
    return SpectrumSummary(
        count_gerade=sum(len(s.eigenvalues) for s in spectra if s.parity is Parity.GERADE),
        count_ungerade=sum(len(s.eigenvalues) for s in spectra if s.parity is Parity.UNGERADE),
        minimum=float(values.min()),
        maximum=float(values.max()),
        spread=float(values.max() - values.min()),
        eigenvalue_sum=float(values.sum()),
        full_space_sum=float(
            sum((1 if s.omega == 0 else 2) * sum(s.eigenvalues) for s in spectra)
        ),
        positive=int((values > 0).sum()),
        negative=int((values < 0).sum()),
        max_gerade_ungerade_difference=_gerade_ungerade_gap(spectra),
    )


def isotropic_c6(k_tensor: KTensor) -> float:
    """Mean of the C6 eigenvalues over the full pair space: trace / (2j + 1)^2."""
    full = full_c6_matrix(k_tensor)
    return float(np.trace(full) / full.shape[0])


def overlap_matrix(previous: np.ndarray, current: np.ndarray) -> np.ndarray:
    """|<v_i(R_prev)|v_k(R)>|^2; rows and columns each sum to one for complete bases."""
    return np.abs(previous.T @ current) ** 2


def _assign(overlap: np.ndarray) -> np.ndarray:
    """
    Greedy maximal-overlap matching.

    Returns ``order`` such that column ``order[i]`` of the new eigenvectors continues
    tracked curve ``i``. Ties resolve to the lower-energy column.
    """
    n = overlap.shape[0]
    order = np.full(n, -1)
    free_rows = set(range(n))
    free_cols = set(range(n))
    # Stable sort keeps energy order among equal overlaps
    flat = np.argsort(-overlap, axis=None, kind="stable")
    for index in flat:
        row, col = divmod(int(index), n)
        if row in free_rows and col in free_cols:
            order[row] = col
            free_rows.discard(row)
            free_cols.discard(col)
            if not free_rows:
                break
    return order


def combined_adiabats(
    c6: OmegaBlock,
    c3: OmegaBlock,
    r_grid: Sequence[float],
    max_workers: Optional[int] = None,
) -> PotentialCurveSet:
    """
    Diagonalizes -C6/R^6 - C3/R^3 on a radial grid and follows each adiabat in R.

    Curve ``i`` starts as the i-th lowest level at the first grid point and is
    continued by greedy maximal eigenvector overlap.

    Raises:
        DomainError: If the blocks disagree in (Omega, parity) or size, the grid holds a
            non-positive or non-increasing radius, or the blocks are empty.
    """
    if (c6.omega, c6.parity) != (c3.omega, c3.parity) or c6.dimension != c3.dimension:
        raise DomainError("C6 and C3 blocks must belong to the same (Omega, parity)")
    if c6.dimension == 0:
        raise DomainError("cannot build adiabats for an empty block")
    radii = np.asarray(r_grid, dtype=float)
    if radii.size == 0 or np.any(radii <= 0):
        raise DomainError("radial grid must be non-empty with R > 0")
    if np.any(np.diff(radii) <= 0):
        raise DomainError("radial grid must be strictly increasing")

    def diagonalize(radius: float) -> Tuple[np.ndarray, np.ndarray]:
        return eigh(-c6.matrix / radius**6 - c3.matrix / radius**3)

    workers = max_workers or get_settings().MAX_WORKERS
    with ThreadPoolExecutor(max_workers=workers) as pool:
        solutions = list(pool.map(diagonalize, radii))

    n = c6.dimension
    curves = np.empty((n, radii.size))
    values, vectors = solutions[0]
    curves[:, 0] = values
    min_overlap = 1.0
    for step in range(1, radii.size):
        new_values, new_vectors = solutions[step]
        overlap = overlap_matrix(vectors, new_vectors)
        order = _assign(overlap)
        min_overlap = min(min_overlap, float(overlap[np.arange(n), order].min()))
        values, vectors = new_values[order], new_vectors[:, order]
        curves[:, step] = values

    if min_overlap < 0.5:
        logger.warning(
            "Adiabat tracking for Omega=%d%s reached overlap %.3f; refine the radial grid",
            c6.omega,
            c6.parity.value,
            min_overlap,
        )
    return PotentialCurveSet(
        omega=c6.omega,
        parity=c6.parity,
        r_grid=[float(r) for r in radii],
        curves=curves,
        labels=list(range(n)),
        min_overlap=min_overlap,
    )
