"""Numerical construction of the discrete Hermite basis.

The basis of size M lives on the M zeros of the M-th order Hermite
polynomial.  Together with quadrature weights w_m = 1 / (M psi_{M-1}(t_m)^2)
the sampled Hermite functions form an orthonormal transform pair: the
weighted analysis matrix is a two-sided inverse of the sampled function
table.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.linalg import eigh_tridiagonal

MAX_ORDER = 1000

# Rescale threshold for the three-term recurrence; values are renormalized
# whenever they exceed this, with the accumulated scale kept in log space.
_RESCALE = 1e100
_LOG_RESCALE = np.log(_RESCALE)


class NumericalError(RuntimeError):
    """Raised when an internal numerical procedure fails to converge."""


@dataclass(frozen=True)
class HermiteBasis:
    """Discrete Hermite basis of a given order.

    Attributes:
        order: basis size M (equals the signal length it transforms).
        roots: the M zeros of the M-th order Hermite polynomial, ascending.
        weights: quadrature weights w_m = 1 / (M psi_{M-1}(t_m)^2).
        function_table: M x M table, function_table[p, m] = psi_p(t_m).
    """

    order: int
    roots: np.ndarray
    weights: np.ndarray
    function_table: np.ndarray

    @property
    def synthesis_matrix(self) -> np.ndarray:
        """Matrix mapping coefficients to samples: S[m, p] = psi_p(t_m)."""
        return self.function_table.T

    @property
    def analysis_matrix(self) -> np.ndarray:
        """Matrix mapping samples to coefficients: A[p, m] = w_m psi_p(t_m)."""
        return self.function_table * self.weights


def _check_order(order: int) -> int:
    order = int(order)
    if order < 1 or order > MAX_ORDER:
        raise ValueError(f"order must be in [1, {MAX_ORDER}], got {order}")
    return order


def _hermite_rows(max_order: int, t: np.ndarray) -> np.ndarray:
    """psi_p(t) for p = 0 .. max_order-1 at the points t.

    Uses the normalized three-term recurrence
        psi_p = t sqrt(2/p) psi_{p-1} - sqrt((p-1)/p) psi_{p-2}
    on the polynomial part, carrying the Gaussian factor exp(-t^2/2) in log
    space so that no intermediate overflows and extreme arguments underflow
    cleanly to zero.
    """
    t = np.asarray(t, dtype=float)
    n = t.size
    rows = np.empty((max_order, n))
    logscale = -0.5 * t * t
    u_prev = np.full(n, np.pi ** -0.25)
    rows[0] = u_prev * np.exp(logscale)
    if max_order == 1:
        return rows
    u = np.sqrt(2.0) * t * u_prev
    rows[1] = u * np.exp(logscale)
    for p in range(2, max_order):
        u_prev, u = u, t * np.sqrt(2.0 / p) * u - np.sqrt((p - 1.0) / p) * u_prev
        big = np.abs(u) > _RESCALE
        if big.any():
            u[big] /= _RESCALE
            u_prev[big] /= _RESCALE
            logscale[big] += _LOG_RESCALE
        rows[p] = u * np.exp(logscale)
    return rows


def hermite_function(p: int, t):
    """Value of the p-th orthonormal Hermite function at t.

    Accepts a scalar or an array of evaluation points; the Gaussian factor
    is kept inside the recurrence so results stay finite for high orders.
    """
    p = int(p)
    if p < 0:
        raise ValueError(f"function order must be >= 0, got {p}")
    arr = np.asarray(t, dtype=float)
    if not np.isfinite(arr).all():
        raise ValueError("evaluation points must be finite")
    values = _hermite_rows(p + 1, arr.ravel())[p].reshape(arr.shape)
    if arr.ndim == 0:
        return float(values)
    return values


def hermite_roots(order: int) -> np.ndarray:
    """Zeros of the Hermite polynomial of the given order, ascending.

    The roots are the eigenvalues of the symmetric tridiagonal Jacobi
    matrix with off-diagonal entries sqrt(k/2), polished with a few Newton
    steps on the recurrence-evaluated Hermite function and symmetrized so
    the root vector is exactly antisymmetric.
    """
    order = _check_order(order)
    if order == 1:
        return np.zeros(1)
    offdiag = np.sqrt(np.arange(1, order) / 2.0)
    roots = eigh_tridiagonal(np.zeros(order), offdiag, eigvals_only=True)
    roots = np.sort(roots)
    for _ in range(3):
        rows = _hermite_rows(order + 1, roots)
        psi_m = rows[order]
        # d/dt psi_M = sqrt(2M) psi_{M-1} - t psi_M, nonzero at the roots
        dpsi = np.sqrt(2.0 * order) * rows[order - 1] - roots * psi_m
        roots = roots - psi_m / dpsi
    roots = 0.5 * (roots - roots[::-1])

    residual = _root_residual(order, roots)
    if residual >= 1e-10:
        raise NumericalError(
            f"Hermite root refinement did not converge for order {order} "
            f"(relative residual {residual:.3e})"
        )
    return roots


def _root_residual(order: int, roots: np.ndarray) -> float:
    """Max |psi_order| at the roots relative to its scale between roots."""
    values = np.abs(_hermite_rows(order + 1, roots)[order])
    if order == 1:
        return float(values.max() / hermite_function(1, 1.0))
    midpoints = 0.5 * (roots[1:] + roots[:-1])
    scale = np.abs(_hermite_rows(order + 1, midpoints)[order]).max()
    return float(values.max() / scale)


def build_basis(order: int) -> HermiteBasis:
    """Construct the discrete Hermite basis of the given order."""
    order = _check_order(order)
    roots = hermite_roots(order)
    table = _hermite_rows(order, roots)
    weights = 1.0 / (order * table[order - 1] ** 2)
    if not (np.isfinite(weights).all() and (weights > 0).all()):
        raise NumericalError(f"non-finite quadrature weights for order {order}")
    table.setflags(write=False)
    roots.setflags(write=False)
    weights.setflags(write=False)
    return HermiteBasis(order=order, roots=roots, weights=weights, function_table=table)


def orthonormality_defect(basis: HermiteBasis) -> float:
    """Largest deviation of the weighted Gram matrix from the identity.

    Computes max_{p,k} |sum_m w_m psi_p(t_m) psi_k(t_m) - delta(p-k)|.
    """
    gram = basis.analysis_matrix @ basis.function_table.T
    return float(np.abs(gram - np.eye(basis.order)).max())
