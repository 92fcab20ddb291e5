"""Forward and inverse discrete Hermite transform."""
from __future__ import annotations

import numpy as np

from .basis import HermiteBasis


def _as_vector(values, basis: HermiteBasis, what: str) -> np.ndarray:
    vec = np.asarray(values, dtype=float)
    if vec.ndim != 1 or vec.size != basis.order:
        raise ValueError(
            f"{what} must be a length-{basis.order} vector, got shape {vec.shape}"
        )
    if not np.isfinite(vec).all():
        raise ValueError(f"{what} contains non-finite values")
    return vec


def forward(signal, basis: HermiteBasis) -> np.ndarray:
    """Expansion coefficients of a signal sampled on the basis roots.

    c_p = sum_m w_m psi_p(t_m) f(t_m); the weights already carry the 1/M
    quadrature factor.
    """
    vec = _as_vector(signal, basis, "signal")
    return basis.function_table @ (basis.weights * vec)


def inverse(coeffs, basis: HermiteBasis) -> np.ndarray:
    """Signal samples synthesized from expansion coefficients.

    f(t_m) = sum_p c_p psi_p(t_m).
    """
    vec = _as_vector(coeffs, basis, "coefficients")
    return basis.function_table.T @ vec
