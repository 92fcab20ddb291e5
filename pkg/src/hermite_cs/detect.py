"""Detection thresholds and single-pass sparse reconstruction.

The pipeline: transform the zero-filled measurement, estimate the
missing-sample noise level from the coefficient energy, set the magnitude
threshold that keeps all noise coefficients below it with a target
probability, take the surviving positions as the support, and solve the
masked synthesis system on that support by least squares.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .basis import HermiteBasis
from .sampling import Measurement, initial_estimate
from .stats import _unit_noise_variance
from .transform import inverse

ERF_APPROX_A = 0.147

STATUS_OK = "ok"
STATUS_EMPTY = "empty-support"
STATUS_OVERFULL = "support-exceeds-measurements"

# relative magnitude floor for support detection when the threshold is zero
_ZERO_THRESHOLD_EPS = 1e-12


@dataclass(frozen=True)
class ThresholdSpec:
    """Inputs of the noise-suppression threshold.

    target_probability: chance that every noise coefficient stays below the
    threshold.  K_hint = 0 neglects the component count against M.
    """

    M: int
    sigma_N: float
    target_probability: float = 0.99
    K_hint: int = 0

    def __post_init__(self):
        if not 0.0 < self.target_probability < 1.0:
            raise ValueError(
                f"target probability must be in (0, 1), got {self.target_probability}"
            )
        if self.M < 1:
            raise ValueError(f"signal length must be positive, got {self.M}")
        if not 0 <= self.K_hint < self.M:
            raise ValueError(f"K_hint must be in [0, {self.M - 1}], got {self.K_hint}")
        if self.sigma_N < 0:
            raise ValueError(f"sigma_N must be nonnegative, got {self.sigma_N}")


@dataclass(frozen=True)
class ReconstructionResult:
    """Outcome of support detection plus least-squares recovery."""

    support: np.ndarray
    coefficients: np.ndarray
    full_coefficients: np.ndarray
    reconstructed_signal: np.ndarray
    residual_norm: float
    condition_estimate: float
    status: str
    threshold_used: float = field(default=math.nan)
    rank_deficient: bool = False


def erf_approx(x):
    """Fast elementary approximation of erf.

    sgn(x) sqrt(1 - exp(-x^2 (4/pi + a x^2) / (1 + a x^2))) with a = 0.147;
    absolute error stays below about 2.5e-4.
    """
    x = np.asarray(x, dtype=float)
    x2 = x * x
    a = ERF_APPROX_A
    inner = -x2 * (4.0 / math.pi + a * x2) / (1.0 + a * x2)
    out = np.sign(x) * np.sqrt(1.0 - np.exp(inner))
    return float(out) if out.ndim == 0 else out


def _erfinv_initial_guess(y: float) -> float:
    """Invert erf_approx in closed form; good to ~1e-2 everywhere."""
    a = ERF_APPROX_A
    L = math.log(1.0 - y * y)
    t = (-4.0 / math.pi - a * L + math.sqrt((4.0 / math.pi + a * L) ** 2 - 4.0 * a * L)) / (
        2.0 * a
    )
    return math.sqrt(t)


def erf_inverse(y: float) -> float:
    """High-precision inverse of erf via Newton iteration.

    Starts from the closed-form inversion of erf_approx and refines against
    the library erf to ~1e-14 relative.
    """
    y = float(y)
    if not -1.0 < y < 1.0:
        raise ValueError(f"erf_inverse needs |y| < 1, got {y}")
    if y == 0.0:
        return 0.0
    sign = 1.0 if y > 0 else -1.0
    y = abs(y)
    x = _erfinv_initial_guess(y)
    two_over_sqrt_pi = 2.0 / math.sqrt(math.pi)
    for _ in range(60):
        err = math.erf(x) - y
        step = err / (two_over_sqrt_pi * math.exp(-x * x))
        x -= step
        if abs(step) <= 1e-14 * max(1.0, abs(x)):
            break
    else:
        raise RuntimeError(f"erf inversion did not converge for y={sign * y}")
    return sign * x


def threshold_exact(spec: ThresholdSpec) -> float:
    """Noise-suppression threshold via the exact inverse error function.

    T = sqrt(2) sigma_N erfinv(P^(1/(M-K))); zero noise gives a zero
    threshold.
    """
    if spec.sigma_N == 0.0:
        return 0.0
    exponent = 1.0 / (spec.M - spec.K_hint)
    return math.sqrt(2.0) * spec.sigma_N * erf_inverse(spec.target_probability ** exponent)


def threshold_closed_form(spec: ThresholdSpec) -> float:
    """Noise-suppression threshold in closed form.

    Solves the quartic that the elementary erf approximation turns the
    threshold condition into, keeping its single positive root:
    T = sigma_N sqrt((-4/pi - aL + sqrt((4/pi + aL)^2 - 4aL)) / a) with
    L = log(1 - P^(2/M)).  Agrees with threshold_exact to a few permille.
    """
    if spec.sigma_N == 0.0:
        return 0.0
    a = ERF_APPROX_A
    L = math.log(1.0 - spec.target_probability ** (2.0 / spec.M))
    root = math.sqrt((4.0 / math.pi + a * L) ** 2 - 4.0 * a * L)
    return spec.sigma_N * math.sqrt((-4.0 / math.pi - a * L + root) / a)


def estimate_sigma_from_coefficients(c0, M: int, M_A: int) -> float:
    """Noise level implied by the zero-filled coefficient energy.

    The total coefficient energy, compensated by M/M_A for the missing
    samples, estimates the clean signal energy, which scales the
    missing-sample noise variance.
    """
    c0 = np.asarray(c0, dtype=float)
    energy = (M / M_A) * float(np.sum(c0 * c0))
    return math.sqrt(_unit_noise_variance(M, M_A) * energy)


def detect_support(c0, threshold: float) -> np.ndarray:
    """Positions whose coefficient magnitude strictly exceeds the threshold.

    A zero threshold (noiseless regime) falls back to a relative magnitude
    floor so exact zeros are excluded.
    """
    c0 = np.asarray(c0, dtype=float)
    magnitudes = np.abs(c0)
    if threshold == 0.0:
        peak = magnitudes.max() if c0.size else 0.0
        if peak == 0.0:
            return np.empty(0, dtype=np.int64)
        return np.flatnonzero(magnitudes > _ZERO_THRESHOLD_EPS * peak).astype(np.int64)
    return np.flatnonzero(magnitudes > threshold).astype(np.int64)


def _empty_result(measurement: Measurement, basis: HermiteBasis, status: str,
                  support: np.ndarray, threshold: float) -> ReconstructionResult:
    zeros = np.zeros(basis.order)
    return ReconstructionResult(
        support=support,
        coefficients=np.zeros(support.size),
        full_coefficients=zeros,
        reconstructed_signal=zeros.copy(),
        residual_norm=float(np.linalg.norm(measurement.values)),
        condition_estimate=0.0,
        status=status,
        threshold_used=threshold,
    )


def reconstruct_on_support(
    measurement: Measurement,
    basis: HermiteBasis,
    support,
    threshold_used: float = math.nan,
) -> ReconstructionResult:
    """Least-squares recovery of the coefficients on a given support.

    Keeps the mask rows and support columns of the synthesis matrix and
    solves min ||A c - y|| by orthogonal factorization (SVD), reporting the
    residual and the condition number of the retained columns.  A
    rank-deficient system yields the minimum-norm solution and a flag.
    """
    support = np.asarray(sorted(int(p) for p in set(np.asarray(support).tolist())), dtype=np.int64)
    if support.size and (support[0] < 0 or support[-1] >= basis.order):
        raise ValueError(f"support positions must lie in [0, {basis.order - 1}]")
    mask = measurement.mask
    if mask.total != basis.order:
        raise ValueError("mask length must equal the basis order")
    if support.size == 0:
        return _empty_result(measurement, basis, STATUS_EMPTY, support, threshold_used)
    if support.size > mask.n_available:
        return _empty_result(measurement, basis, STATUS_OVERFULL, support, threshold_used)

    system = basis.function_table.T[mask.indices][:, support]
    solution, _, rank, singular = np.linalg.lstsq(system, measurement.values, rcond=None)
    condition = float(singular[0] / singular[-1]) if singular[-1] > 0 else math.inf

    full = np.zeros(basis.order)
    full[support] = solution
    reconstructed = inverse(full, basis)
    residual = float(np.linalg.norm(system @ solution - measurement.values))
    return ReconstructionResult(
        support=support,
        coefficients=solution,
        full_coefficients=full,
        reconstructed_signal=reconstructed,
        residual_norm=residual,
        condition_estimate=condition,
        status=STATUS_OK,
        threshold_used=threshold_used,
        rank_deficient=rank < support.size,
    )


def reconstruct(
    measurement: Measurement, basis: HermiteBasis, p_nn: float = 0.99
) -> ReconstructionResult:
    """Single-pass threshold-based reconstruction of a sparse signal.

    Zero-filled transform -> noise-level estimate -> closed-form threshold
    -> support detection -> least-squares recovery on the support.  Never
    raises on an empty or oversized support; the status field reports it.
    """
    c0 = initial_estimate(measurement, basis)
    M = basis.order
    M_A = measurement.mask.n_available
    sigma = estimate_sigma_from_coefficients(c0, M, M_A)
    threshold = threshold_closed_form(
        ThresholdSpec(M=M, sigma_N=sigma, target_probability=p_nn)
    )
    support = detect_support(c0, threshold)
    return reconstruct_on_support(measurement, basis, support, threshold_used=threshold)
