"""Statistics of Hermite coefficients under random undersampling.

A signal observed through M_A of its M samples behaves, in the transform
domain, like the clean coefficients plus a zero-mean perturbation.  This
module provides the closed-form means and variances of that perturbation,
the folded/half-normal magnitude densities they induce, and the resulting
probability that a signal component is outranked by a noise coefficient.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.integrate import quad
from scipy.special import erf

from .basis import HermiteBasis
from .sampling import SamplingMask, SparseSignalSpec


@dataclass(frozen=True)
class ComponentStatistics:
    """Coefficient statistics for one sparse signal under one sampling regime.

    means[i] follows A_i * M_A / M; variances[i] is the coefficient variance
    at the i-th component position; noise_variance applies at every
    component-free position.
    """

    M: int
    M_A: int
    noise_variance: float
    orders: np.ndarray
    amplitudes: np.ndarray
    means: np.ndarray
    variances: np.ndarray

    @property
    def component_count(self) -> int:
        return int(self.orders.size)


def _unit_noise_variance(M: int, M_A: int) -> float:
    if M < 2:
        raise ValueError(f"signal length must be at least 2, got {M}")
    if not 1 <= M_A <= M:
        raise ValueError(f"need 1 <= M_A <= M, got M_A={M_A}, M={M}")
    return (M_A * M - M_A * M_A) / (M * M * (M - 1.0))


def noise_variance(M: int, M_A: int, amplitudes) -> float:
    """Coefficient variance at component-free positions.

    (M_A M - M_A^2) / (M^2 (M-1)) * sum(A_l^2): every component contributes
    an uncorrelated zero-mean perturbation proportional to its energy.
    """
    amps = np.asarray(amplitudes, dtype=float)
    return _unit_noise_variance(M, M_A) * float(np.sum(amps * amps))


def _quartic_ratio(p0: int, basis: HermiteBasis) -> np.ndarray:
    """Per-sample values (psi_{p0}^2 / psi_{M-1}^2)(t_m), as M w_m psi_{p0}^2."""
    return basis.order * basis.weights * basis.function_table[p0] ** 2


def component_energy(p0: int, basis: HermiteBasis, mask: SamplingMask | None = None) -> float:
    """Energy factor of a single basis component on the root grid.

    Sum over samples of (psi_{p0}^2(t_m) / psi_{M-1}^2(t_m))^2; with a mask,
    only the available positions contribute (the estimated counterpart).
    """
    if not 0 <= p0 < basis.order:
        raise ValueError(f"component order {p0} outside [0, {basis.order - 1}]")
    terms = _quartic_ratio(p0, basis) ** 2
    if mask is None:
        return float(terms.sum())
    if mask.total != basis.order:
        raise ValueError("mask length must equal the basis order")
    return float(terms[mask.indices].sum())


def signal_variance_exact(p0: int, basis: HermiteBasis, M_A: int, amplitude: float = 1.0) -> float:
    """Coefficient variance at the component position, full grid known.

    A^2 * unit-noise-variance * (P_{p0}/M - 1); the energy factor P_{p0} is
    at least M for every order (equal only at the top order, whose
    coefficient is deterministic under any mask), so the result is
    nonnegative up to rounding, which the clamp absorbs.
    """
    M = basis.order
    energy = component_energy(p0, basis)
    value = amplitude * amplitude * _unit_noise_variance(M, M_A) * (energy / M - 1.0)
    return max(value, 0.0)


def signal_variance_estimated(
    p0: int, basis: HermiteBasis, mask: SamplingMask, amplitude: float = 1.0
) -> float:
    """Coefficient variance at the component position, estimated from a mask.

    The masked energy sum underestimates the full one by the availability
    ratio on average, so (M/M_A) * energy-estimate replaces the exact energy
    factor before the variance formula is applied.  Clamped at zero: an
    unlucky mask can push the estimate below the variance floor.
    """
    M = basis.order
    M_A = mask.n_available
    energy_est = (M / M_A) * component_energy(p0, basis, mask)
    value = amplitude * amplitude * _unit_noise_variance(M, M_A) * (energy_est / M - 1.0)
    return max(value, 0.0)


def _component_stats(
    spec: SparseSignalSpec, basis: HermiteBasis, M_A: int, energies: np.ndarray
) -> ComponentStatistics:
    M = basis.order
    unit = _unit_noise_variance(M, M_A)
    amps = spec.amplitudes
    total_energy = float(np.sum(amps * amps))
    means = amps * (M_A / M)
    own = amps * amps * np.maximum(energies / M - 1.0, 0.0)
    cross = total_energy - amps * amps
    variances = unit * (own + cross)
    return ComponentStatistics(
        M=M,
        M_A=M_A,
        noise_variance=unit * total_energy,
        orders=spec.orders,
        amplitudes=amps,
        means=means,
        variances=variances,
    )


def multi_component_stats(
    spec: SparseSignalSpec, basis: HermiteBasis, mask: SamplingMask
) -> ComponentStatistics:
    """Per-component means/variances and the noise variance, from a mask.

    means[i] = A_i M_A / M; the variance at a component position combines
    the component's own missing-sample variance (estimated energy factor,
    bias-compensated by M/M_A) with the noise leaked by every other
    component.
    """
    if spec.length != basis.order or mask.total != basis.order:
        raise ValueError("spec, basis and mask sizes must agree")
    M = basis.order
    M_A = mask.n_available
    energies = np.array(
        [(M / M_A) * component_energy(p, basis, mask) for p in spec.orders]
    )
    return _component_stats(spec, basis, M_A, energies)


def expected_component_stats(
    spec: SparseSignalSpec, basis: HermiteBasis, M_A: int
) -> ComponentStatistics:
    """Mask-averaged component statistics for a given number of samples.

    The mask-estimated energy factor is unbiased for the full-grid one, so
    the expected statistics use the exact energies; this is what theoretical
    detection-error curves are computed from.
    """
    if spec.length != basis.order:
        raise ValueError("spec length must equal the basis order")
    energies = np.array([component_energy(p, basis) for p in spec.orders])
    return _component_stats(spec, basis, M_A, energies)


def folded_normal_pdf(x, mean: float, sigma: float):
    """Density of |X| for X normal with the given mean and spread."""
    if sigma <= 0:
        raise ValueError(f"sigma must be positive, got {sigma}")
    x = np.asarray(x, dtype=float)
    norm = 1.0 / (sigma * math.sqrt(2.0 * math.pi))
    out = norm * (
        np.exp(-((x - mean) ** 2) / (2.0 * sigma * sigma))
        + np.exp(-((x + mean) ** 2) / (2.0 * sigma * sigma))
    )
    return float(out) if out.ndim == 0 else out


def folded_normal_cdf(x, mean: float, sigma: float):
    """P(|X| <= x) for X normal with the given mean and spread."""
    if sigma <= 0:
        raise ValueError(f"sigma must be positive, got {sigma}")
    x = np.asarray(x, dtype=float)
    s = sigma * math.sqrt(2.0)
    out = 0.5 * (erf((x + mean) / s) + erf((x - mean) / s))
    return float(out) if out.ndim == 0 else out


def half_normal_pdf(x, sigma: float):
    """Density of |X| for zero-mean normal X: sqrt(2)/(sigma sqrt(pi)) exp(-x^2/2sigma^2)."""
    if sigma <= 0:
        raise ValueError(f"sigma must be positive, got {sigma}")
    x = np.asarray(x, dtype=float)
    out = math.sqrt(2.0) / (sigma * math.sqrt(math.pi)) * np.exp(
        -(x * x) / (2.0 * sigma * sigma)
    )
    return float(out) if out.ndim == 0 else out


def half_normal_cdf(x, sigma: float):
    """P(|X| <= x) for zero-mean normal X: erf(x / (sqrt(2) sigma))."""
    if sigma <= 0:
        raise ValueError(f"sigma must be positive, got {sigma}")
    x = np.asarray(x, dtype=float)
    out = erf(x / (sigma * math.sqrt(2.0)))
    return float(out) if out.ndim == 0 else out


def _all_noise_below(x: float, sigma_noise: float, exponent: int) -> float:
    """P(all `exponent` independent noise magnitudes < x)."""
    e = erf(x / (math.sqrt(2.0) * sigma_noise))
    if e <= 0.0:
        return 0.0
    return math.exp(exponent * math.log(e))


def _resolve_k(stats: ComponentStatistics, K: int | None) -> int:
    k = stats.component_count if K is None else int(K)
    if not 1 <= k < stats.M:
        raise ValueError(f"component count must be in [1, {stats.M - 1}], got {k}")
    return k


def misdetection_probability_exact(
    component_index: int, stats: ComponentStatistics, K: int | None = None
) -> float:
    """Probability that some noise coefficient outranks the component.

    Integrates P(at least one of the M-K noise magnitudes >= xi) against the
    folded-normal density of the component magnitude, over xi in
    [0, mean + 12 sigma]; the integrand decays like a Gaussian beyond.
    """
    k = _resolve_k(stats, K)
    sigma_noise = math.sqrt(stats.noise_variance)
    if sigma_noise == 0.0:
        return 0.0
    mean = float(stats.means[component_index])
    sigma_i = math.sqrt(float(stats.variances[component_index]))
    exponent = stats.M - k
    if sigma_i == 0.0:
        # degenerate component: all mass at its mean magnitude
        return min(max(1.0 - _all_noise_below(abs(mean), sigma_noise, exponent), 0.0), 1.0)

    def integrand(xi: float) -> float:
        tail = 1.0 - _all_noise_below(xi, sigma_noise, exponent)
        return tail * folded_normal_pdf(xi, mean, sigma_i)

    upper = abs(mean) + 12.0 * sigma_i
    value, _ = quad(integrand, 0.0, upper, epsabs=1e-10, epsrel=1e-10, limit=200)
    return min(max(value, 0.0), 1.0)


def misdetection_probability_approx(
    component_index: int,
    stats: ComponentStatistics,
    K: int | None = None,
    correction: float = 1.5,
) -> float:
    """Closed-form surrogate for the misdetection probability.

    Treats the component magnitude as deterministic at mean - correction *
    sigma (downward draws dominate the error), then evaluates the noise-max
    tail there.  correction=0 gives the uncorrected variant.
    """
    k = _resolve_k(stats, K)
    sigma_noise = math.sqrt(stats.noise_variance)
    if sigma_noise == 0.0:
        return 0.0
    level = float(stats.means[component_index]) - correction * math.sqrt(
        float(stats.variances[component_index])
    )
    exponent = stats.M - k
    e = float(erf(level / (math.sqrt(2.0) * sigma_noise)))
    if e > 0.0:
        value = 1.0 - math.exp(exponent * math.log(e))
    else:
        # negative effective level: keep the signed power, then clamp
        value = 1.0 - e ** exponent
    return min(max(value, 0.0), 1.0)
