"""
Numerov propagation of u''(R) = f(R) u(R) on a uniform grid, many channels at once.

With w_n = (1 - h^2 f_n / 12) u_n the recurrence is

    w_{n+1} = 2 w_n - w_{n-1} + h^2 f_n u_n

and for real f the discrete Wronskian Im(conj(w_n) w_{n+1}) is the same at every n.
"""

import logging

import numpy as np

from dyaniso.exceptions import DomainError

logger = logging.getLogger(__name__)


def numerov_propagate(
    f: np.ndarray, u0: np.ndarray, u1: np.ndarray, step: float
) -> np.ndarray:
    """
    Propagates outward from the first two grid points.

    Args:
        f: Coefficients f(R_n), shape (n_points, n_channels), real.
        u0: Solution at R_0, shape (n_channels,).
        u1: Solution at R_1, shape (n_channels,).
        step: Grid spacing h.

    Returns:
        Complex array u(R_n) of shape (n_points, n_channels).

    Raises:
        DomainError: If the grid has fewer than two points or shapes disagree.
    """
    f = np.atleast_2d(np.asarray(f, dtype=float).T).T
    n_points, n_channels = f.shape
    if n_points < 2:
        raise DomainError("Numerov propagation needs at least two grid points")
    u0 = np.broadcast_to(np.asarray(u0, dtype=complex), (n_channels,))
    u1 = np.broadcast_to(np.asarray(u1, dtype=complex), (n_channels,))

    h2 = step * step
    weight = 1.0 - h2 * f / 12.0
    u = np.empty((n_points, n_channels), dtype=complex)
    u[0], u[1] = u0, u1
    w_prev = weight[0] * u0
    w_curr = weight[1] * u1
    for n in range(1, n_points - 1):
        w_next = 2.0 * w_curr - w_prev + h2 * f[n] * u[n]
        u[n + 1] = w_next / weight[n + 1]
        w_prev, w_curr = w_curr, w_next
    return u


def discrete_flux(u: np.ndarray, f: np.ndarray, step: float, index: int = 0) -> np.ndarray:
    """
    Conserved probability current Im(conj(w_n) w_{n+1}) / h between points n and n+1.

    Negative values mean flux moving toward smaller R.
    """
    f = np.atleast_2d(np.asarray(f, dtype=float).T).T
    u = np.atleast_2d(u.T).T
    weight = 1.0 - step * step * f / 12.0
    w_a = weight[index] * u[index]
    w_b = weight[index + 1] * u[index + 1]
    return np.imag(np.conj(w_a) * w_b) / step
