"""Seeded Monte-Carlo experiment campaigns with CSV outputs.

Every experiment is fully determined by its configuration and master seed:
trial seeds derive from the master via a splitmix64 mix, aggregation happens
in trial order, and CSV floats are written in shortest round-trip form, so
reruns are byte-identical.  Sweep points are independent and may be
evaluated by a small thread pool (HERMITE_CS_THREADS caps it, 0 = auto).
"""
from __future__ import annotations

import json
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import __version__
from .basis import HermiteBasis, build_basis
from .detect import ThresholdSpec, estimate_sigma_from_coefficients, reconstruct, threshold_closed_form
from .sampling import (
    SparseSignalSpec,
    initial_estimate,
    measure,
    random_mask,
    synthesize,
    trial_seed,
)
from .stats import (
    expected_component_stats,
    folded_normal_cdf,
    folded_normal_pdf,
    half_normal_cdf,
    half_normal_pdf,
    misdetection_probability_approx,
    misdetection_probability_exact,
    _unit_noise_variance,
)
from .svgplot import svg_histogram, svg_lines

EXPERIMENT_IDS = ("ex1a", "ex1b", "ex2", "ex3", "ex4", "ex5", "histograms")

# five-component sweep signal used by the misdetection and threshold demos
SWEEP_COMPONENTS = ((20, 1.0), (54, 0.7), (94, 0.5), (162, 0.3), (192, 0.2))
# eight-component signal used by the end-to-end reconstruction demo
RECON_COMPONENTS = (
    (20, 2.5), (124, 3.3), (84, 2.6), (162, 3.1),
    (37, 2.7), (44, 3.5), (149, 2.3), (189, 3.4),
)
# histogram defaults: chosen so the closed-form variances track the realized
# ones to ~1.5%, keeping the fitted densities honest
HISTOGRAM_MONO_ORDER = 100
HISTOGRAM_MULTI_COMPONENTS = ((15, 1.0), (54, 3.0), (64, 4.0), (112, 2.0))


@dataclass(frozen=True)
class ExperimentConfig:
    """One experiment campaign: which study, at what scale, seeded how."""

    experiment: str
    M: int
    trials: int
    master_seed: int = 0
    m_a_values: tuple = ()
    p0_values: tuple | None = None   # None: sweep every order
    components: tuple | None = None
    p_nn: float = 0.99
    out_dir: str = "results"
    svg: bool = False
    bins: int = 100
    variant: str = "both"            # histograms: mono | multi | both

    def __post_init__(self):
        if self.experiment not in EXPERIMENT_IDS:
            raise ValueError(f"unknown experiment {self.experiment!r}")
        if self.trials < 1:
            raise ValueError("trial count must be at least 1")
        for m_a in self.m_a_values:
            if not 1 <= m_a <= self.M:
                raise ValueError(f"M_A={m_a} outside [1, {self.M}]")
        if self.variant not in ("mono", "multi", "both"):
            raise ValueError(f"unknown histogram variant {self.variant!r}")

    def spec(self) -> SparseSignalSpec:
        if self.components is None:
            raise ValueError(f"experiment {self.experiment} needs signal components")
        return SparseSignalSpec(length=self.M, components=self.components)


_DEFAULTS = {
    "ex1a": dict(M=200, trials=7000, m_a_values=tuple(range(2, 201, 2))),
    "ex1b": dict(M=400, trials=7000, m_a_values=tuple(range(4, 401, 4))),
    "ex2": dict(M=400, trials=5000, m_a_values=tuple(range(4, 401, 4)),
                p0_values=(1, 266, 390)),
    "ex3": dict(M=200, trials=3000, m_a_values=tuple(range(10, 201, 10)),
                components=SWEEP_COMPONENTS),
    "ex4": dict(M=200, trials=1, m_a_values=(56, 108, 154, 176),
                components=SWEEP_COMPONENTS),
    "ex5": dict(M=200, trials=100, m_a_values=(135,), components=RECON_COMPONENTS),
    "histograms": dict(M=200, trials=20000, m_a_values=(120,)),
}


def default_config(experiment: str, **overrides) -> ExperimentConfig:
    """Full-scale configuration for an experiment, with overrides."""
    if experiment not in _DEFAULTS:
        raise ValueError(f"unknown experiment {experiment!r}")
    kwargs = dict(_DEFAULTS[experiment])
    kwargs.update(overrides)
    return ExperimentConfig(experiment=experiment, **kwargs)


def config_from_dict(data: dict) -> ExperimentConfig:
    """Build a configuration from the JSON schema used by the CLI."""
    data = dict(data)
    experiment = data.pop("experiment", None)
    if experiment is None:
        raise ValueError("config needs an 'experiment' field")
    overrides = {}
    if "M" in data:
        overrides["M"] = int(data.pop("M"))
    if "trials" in data:
        overrides["trials"] = int(data.pop("trials"))
    if "seed" in data:
        overrides["master_seed"] = int(data.pop("seed"))
    if "pnn" in data:
        overrides["p_nn"] = float(data.pop("pnn"))
    if "out" in data:
        overrides["out_dir"] = str(data.pop("out"))
    if "svg" in data:
        overrides["svg"] = bool(data.pop("svg"))
    if "bins" in data:
        overrides["bins"] = int(data.pop("bins"))
    if "variant" in data:
        overrides["variant"] = str(data.pop("variant"))
    if "components" in data:
        comps = data.pop("components")
        overrides["components"] = tuple((int(c["p"]), float(c["A"])) for c in comps)
    if "p0" in data:
        overrides["p0_values"] = tuple(int(p) for p in data.pop("p0"))
    if "M_A" in data:
        m_a = data.pop("M_A")
        if isinstance(m_a, dict):
            overrides["m_a_values"] = tuple(
                range(int(m_a["start"]), int(m_a["stop"]) + 1, int(m_a.get("step", 1)))
            )
        else:
            overrides["m_a_values"] = tuple(int(v) for v in m_a)
    if data:
        raise ValueError(f"unknown config fields: {sorted(data)}")
    return default_config(experiment, **overrides)


def load_config(path) -> ExperimentConfig:
    with open(path, "r", encoding="utf-8") as fh:
        return config_from_dict(json.load(fh))


# ---------------------------------------------------------------------------
# shared machinery

def worker_count() -> int:
    """Thread-pool size from HERMITE_CS_THREADS (0 or unset = auto)."""
    raw = os.environ.get("HERMITE_CS_THREADS", "0")
    try:
        n = int(raw)
    except ValueError:
        raise ValueError(f"HERMITE_CS_THREADS must be an integer, got {raw!r}")
    if n < 0:
        raise ValueError("HERMITE_CS_THREADS must be nonnegative")
    return n if n > 0 else (os.cpu_count() or 1)


def _map_ordered(fn, items):
    """Apply fn over items, possibly in a thread pool; results keep order."""
    workers = min(worker_count(), len(items))
    if workers <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def point_seed(master_seed: int, point_index: int) -> int:
    """Seed base for one sweep point; trials mix this with their index."""
    return trial_seed(master_seed, point_index)


def mask_matrix(M: int, M_A: int, trials: int, seed_base: int) -> np.ndarray:
    """trials x M indicator matrix of per-trial random masks."""
    out = np.zeros((trials, M))
    for t in range(trials):
        mask = random_mask(M, M_A, trial_seed(seed_base, t))
        out[t, mask.indices] = 1.0
    return out


def _fmt(value) -> str:
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return repr(float(value))
    return str(value)


def _config_echo(config: ExperimentConfig) -> str:
    parts = [
        f"experiment={config.experiment}", f"M={config.M}", f"trials={config.trials}",
        f"seed={config.master_seed}", f"pnn={_fmt(config.p_nn)}",
    ]
    if config.m_a_values:
        parts.append("M_A=" + "/".join(str(v) for v in config.m_a_values))
    if config.p0_values is not None:
        parts.append("p0=" + "/".join(str(v) for v in config.p0_values))
    if config.components is not None:
        parts.append("components=" + "/".join(f"{p}:{_fmt(a)}" for p, a in config.components))
    return " ".join(parts)


def write_csv(path: Path, header: list, rows, config: ExperimentConfig,
              trailing_comments: list | None = None) -> Path:
    path.parent.mkdir(parents=True, exist_ok=True)
    lines = [f"# hermite-cs {__version__} {_config_echo(config)}"]
    lines.append(",".join(header))
    for row in rows:
        lines.append(",".join(_fmt(v) for v in row))
    for comment in trailing_comments or ():
        lines.append(f"# {comment}")
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return path


# ---------------------------------------------------------------------------
# variance sweeps (ex1a, ex1b, ex2)

@dataclass(frozen=True)
class VarianceSweepResult:
    path: Path
    m_a: np.ndarray
    p0: np.ndarray
    theory_var: np.ndarray
    estimated_var: np.ndarray
    empirical_var: np.ndarray
    mse_theory: dict
    mse_estimated: dict


def run_variance_sweep(config: ExperimentConfig, basis: HermiteBasis | None = None) -> VarianceSweepResult:
    """Coefficient variance at component positions vs. the closed forms.

    For each available-sample count, draws `trials` independent masks of a
    unit-amplitude single-component signal at every requested order and
    compares the empirical coefficient variance against the exact variance
    law and its mask-estimated counterpart (averaged over trials).
    """
    if config.experiment not in ("ex1a", "ex1b", "ex2"):
        raise ValueError(f"not a variance-sweep experiment: {config.experiment}")
    basis = basis if basis is not None else build_basis(config.M)
    M = config.M
    orders = np.arange(M) if config.p0_values is None else np.asarray(config.p0_values, dtype=np.int64)
    table = basis.function_table
    weighted_sq = basis.weights[None, :] * table[orders] ** 2      # w_m psi^2
    quartic = (M * weighted_sq) ** 2                               # (psi^2/psi_{M-1}^2)^2
    energies = quartic.sum(axis=1)

    def one_point(item):
        index, m_a = item
        unit = _unit_noise_variance(M, m_a)
        B = mask_matrix(M, m_a, config.trials, point_seed(config.master_seed, index))
        coeff = B @ weighted_sq.T
        empirical = coeff.var(axis=0, ddof=1)
        masked_energy = B @ quartic.T
        est = unit * ((M / m_a) * masked_energy / M - 1.0)
        estimated = np.maximum(est, 0.0).mean(axis=0)
        theory = unit * np.maximum(energies / M - 1.0, 0.0)
        return empirical, estimated, theory

    points = list(enumerate(config.m_a_values))
    results = _map_ordered(one_point, points)

    rows = []
    col_ma, col_p0, col_th, col_est, col_emp = [], [], [], [], []
    mse_theory, mse_estimated = {}, {}
    comments = []
    for (_, m_a), (empirical, estimated, theory) in zip(points, results):
        sq_th = (empirical - theory) ** 2
        sq_est = (empirical - estimated) ** 2
        mse_theory[m_a] = float(sq_th.mean())
        mse_estimated[m_a] = float(sq_est.mean())
        for j, p0 in enumerate(orders):
            rows.append((m_a, int(p0), theory[j], estimated[j], empirical[j], sq_th[j], sq_est[j]))
        col_ma.append(np.full(orders.size, m_a))
        col_p0.append(orders)
        col_th.append(theory)
        col_est.append(estimated)
        col_emp.append(empirical)
        comments.append(f"mse M_A={m_a} theory={_fmt(mse_theory[m_a])} estimated={_fmt(mse_estimated[m_a])}")
    comments.append(
        f"summary max_mse theory={_fmt(max(mse_theory.values()))} "
        f"estimated={_fmt(max(mse_estimated.values()))}"
    )

    path = Path(config.out_dir) / f"{config.experiment}_variance.csv"
    write_csv(
        path,
        ["M_A", "p0", "theory_var", "estimated_var", "empirical_var", "sq_err_theory", "sq_err_estimated"],
        rows, config, comments,
    )
    if config.svg:
        xs = list(mse_theory)
        svg_lines(
            path.with_suffix(".svg"),
            x=xs,
            series={"mse_theory": [mse_theory[v] for v in xs],
                    "mse_estimated": [mse_estimated[v] for v in xs]},
            title=f"{config.experiment}: variance-law MSE vs available samples",
            xlabel="M_A", ylabel="MSE", logy=True,
        )
    return VarianceSweepResult(
        path=path,
        m_a=np.concatenate(col_ma),
        p0=np.concatenate(col_p0),
        theory_var=np.concatenate(col_th),
        estimated_var=np.concatenate(col_est),
        empirical_var=np.concatenate(col_emp),
        mse_theory=mse_theory,
        mse_estimated=mse_estimated,
    )


# ---------------------------------------------------------------------------
# misdetection sweep (ex3)

@dataclass(frozen=True)
class MisdetectionSweepResult:
    path: Path
    m_a: np.ndarray
    component: np.ndarray
    p_exact: np.ndarray
    p_approx: np.ndarray
    p_empirical: np.ndarray


def run_misdetection_sweep(config: ExperimentConfig, basis: HermiteBasis | None = None) -> MisdetectionSweepResult:
    """Per-component misdetection rates: Monte Carlo vs. the two models.

    A component is misdetected in a trial when at least one coefficient at
    a component-free position has magnitude >= the component's coefficient
    magnitude.
    """
    if config.experiment != "ex3":
        raise ValueError(f"not a misdetection experiment: {config.experiment}")
    basis = basis if basis is not None else build_basis(config.M)
    spec = config.spec()
    M = config.M
    orders = spec.orders
    signal = synthesize(spec, basis)
    contributions = (basis.weights * signal)[None, :] * basis.function_table
    noise_positions = np.setdiff1d(np.arange(M), orders)

    def one_point(item):
        index, m_a = item
        B = mask_matrix(M, m_a, config.trials, point_seed(config.master_seed, index))
        coeffs = np.abs(B @ contributions.T)
        noise_max = coeffs[:, noise_positions].max(axis=1)
        empirical = (noise_max[:, None] >= coeffs[:, orders]).mean(axis=0)
        st = expected_component_stats(spec, basis, m_a)
        exact = np.array([misdetection_probability_exact(i, st) for i in range(spec.k)])
        approx = np.array([misdetection_probability_approx(i, st) for i in range(spec.k)])
        return empirical, exact, approx

    points = list(enumerate(config.m_a_values))
    results = _map_ordered(one_point, points)

    rows, m_a_col, comp_col, ex_col, ap_col, emp_col = [], [], [], [], [], []
    for (_, m_a), (empirical, exact, approx) in zip(points, results):
        for i in range(spec.k):
            rows.append((m_a, i + 1, exact[i], approx[i], empirical[i]))
            m_a_col.append(m_a)
            comp_col.append(i + 1)
            ex_col.append(exact[i])
            ap_col.append(approx[i])
            emp_col.append(empirical[i])

    path = Path(config.out_dir) / "ex3_misdetection.csv"
    write_csv(path, ["M_A", "component", "p_exact", "p_approx", "p_empirical"], rows, config)
    if config.svg:
        xs = list(config.m_a_values)
        series = {}
        for i in range(spec.k):
            sel = [j for j, c in enumerate(comp_col) if c == i + 1]
            series[f"exact_{i + 1}"] = [ex_col[j] for j in sel]
            series[f"empirical_{i + 1}"] = [emp_col[j] for j in sel]
        svg_lines(path.with_suffix(".svg"), x=xs, series=series,
                  title="misdetection probability vs available samples",
                  xlabel="M_A", ylabel="probability")
    return MisdetectionSweepResult(
        path=path,
        m_a=np.array(m_a_col), component=np.array(comp_col),
        p_exact=np.array(ex_col), p_approx=np.array(ap_col), p_empirical=np.array(emp_col),
    )


# ---------------------------------------------------------------------------
# threshold demo (ex4)

@dataclass(frozen=True)
class ThresholdDemoResult:
    path: Path
    m_a: np.ndarray
    order: np.ndarray
    magnitude: np.ndarray
    threshold: np.ndarray


def run_threshold_demo(config: ExperimentConfig, basis: HermiteBasis | None = None) -> ThresholdDemoResult:
    """One seeded realization per sample count: magnitudes vs. threshold."""
    if config.experiment != "ex4":
        raise ValueError(f"not a threshold demo: {config.experiment}")
    basis = basis if basis is not None else build_basis(config.M)
    spec = config.spec()
    signal = synthesize(spec, basis)
    rows, m_a_col, p_col, mag_col, th_col = [], [], [], [], []
    for index, m_a in enumerate(config.m_a_values):
        mask = random_mask(config.M, m_a, point_seed(config.master_seed, index))
        c0 = initial_estimate(measure(signal, mask), basis)
        sigma = estimate_sigma_from_coefficients(c0, config.M, m_a)
        threshold = threshold_closed_form(
            ThresholdSpec(M=config.M, sigma_N=sigma, target_probability=config.p_nn)
        )
        for p in range(config.M):
            rows.append((m_a, p, abs(c0[p]), threshold))
            m_a_col.append(m_a)
            p_col.append(p)
            mag_col.append(abs(c0[p]))
            th_col.append(threshold)
    path = Path(config.out_dir) / "ex4_threshold.csv"
    write_csv(path, ["M_A", "p", "abs_coefficient", "threshold"], rows, config)
    if config.svg:
        for m_a in config.m_a_values:
            sel = [j for j, v in enumerate(m_a_col) if v == m_a]
            svg_lines(
                path.with_name(f"ex4_threshold_MA{m_a}.svg"),
                x=[p_col[j] for j in sel],
                series={"magnitude": [mag_col[j] for j in sel],
                        "threshold": [th_col[j] for j in sel]},
                title=f"coefficient magnitudes and threshold, M_A={m_a}",
                xlabel="p", ylabel="|c_p|",
            )
    return ThresholdDemoResult(
        path=path, m_a=np.array(m_a_col), order=np.array(p_col),
        magnitude=np.array(mag_col), threshold=np.array(th_col),
    )


# ---------------------------------------------------------------------------
# reconstruction demo (ex5)

@dataclass(frozen=True)
class ReconstructionDemoResult:
    path: Path
    seeds: np.ndarray
    exact_support: np.ndarray
    signal_mse: np.ndarray
    statuses: tuple
    success_count: int
    median_success_mse: float


def run_reconstruction_demo(config: ExperimentConfig, basis: HermiteBasis | None = None) -> ReconstructionDemoResult:
    """Full pipeline per seed; exact-support rate and reconstruction error."""
    if config.experiment != "ex5":
        raise ValueError(f"not a reconstruction demo: {config.experiment}")
    basis = basis if basis is not None else build_basis(config.M)
    spec = config.spec()
    signal = synthesize(spec, basis)
    true_support = set(int(p) for p in spec.orders)
    m_a = config.m_a_values[0]

    rows, seeds, exact_flags, mses, statuses = [], [], [], [], []
    for t in range(config.trials):
        seed = trial_seed(config.master_seed, t)
        mask = random_mask(config.M, m_a, seed)
        result = reconstruct(measure(signal, mask), basis, p_nn=config.p_nn)
        mse = float(np.mean((signal - result.reconstructed_signal) ** 2))
        exact = set(int(p) for p in result.support) == true_support
        rows.append((seed, exact, mse, result.status))
        seeds.append(seed)
        exact_flags.append(exact)
        mses.append(mse)
        statuses.append(result.status)

    exact_arr = np.array(exact_flags, dtype=bool)
    mse_arr = np.array(mses)
    successes = int(exact_arr.sum())
    median_mse = float(np.median(mse_arr[exact_arr])) if successes else float("nan")
    comments = [
        f"summary exact_support={successes}/{config.trials} "
        f"median_success_mse={_fmt(median_mse)}"
    ]
    path = Path(config.out_dir) / "ex5_reconstruction.csv"
    write_csv(path, ["seed", "support_exact_match", "signal_mse", "status"], rows, config, comments)
    return ReconstructionDemoResult(
        path=path, seeds=np.array(seeds), exact_support=exact_arr,
        signal_mse=mse_arr, statuses=tuple(statuses),
        success_count=successes, median_success_mse=median_mse,
    )


# ---------------------------------------------------------------------------
# magnitude histograms

@dataclass(frozen=True)
class HistogramResult:
    paths: tuple
    ks: dict


def _ks_statistic(samples: np.ndarray, cdf) -> float:
    x = np.sort(samples)
    n = x.size
    c = cdf(x)
    grid_hi = np.arange(1, n + 1) / n
    grid_lo = np.arange(0, n) / n
    return float(max(np.abs(c - grid_hi).max(), np.abs(c - grid_lo).max()))


def _histogram_rows(samples: np.ndarray, label: str, bins: int, pdf):
    top = float(samples.max())
    counts, edges = np.histogram(samples, bins=bins, range=(0.0, top))
    centers = 0.5 * (edges[:-1] + edges[1:])
    width = edges[1] - edges[0]
    density = counts / (samples.size * width)
    return [(label, centers[i], density[i], pdf(centers[i])) for i in range(bins)]


def run_histograms(config: ExperimentConfig, basis: HermiteBasis | None = None) -> HistogramResult:
    """Magnitude histograms at component / component-free positions.

    Writes one CSV per variant with empirical bin densities next to the
    fitted folded-/half-normal densities, and records the KS statistic per
    class against the fitted distribution (component-free positions pooled).
    """
    if config.experiment != "histograms":
        raise ValueError(f"not a histogram experiment: {config.experiment}")
    basis = basis if basis is not None else build_basis(config.M)
    M = config.M
    m_a = config.m_a_values[0]
    unit = _unit_noise_variance(M, m_a)
    variants = ("mono", "multi") if config.variant == "both" else (config.variant,)
    paths, ks = [], {}
    for v_index, variant in enumerate(variants):
        if variant == "mono":
            components = ((HISTOGRAM_MONO_ORDER, 1.0),)
        else:
            components = (
                config.components if config.components is not None else HISTOGRAM_MULTI_COMPONENTS
            )
        spec = SparseSignalSpec(length=M, components=components)
        signal = synthesize(spec, basis)
        contributions = (basis.weights * signal)[None, :] * basis.function_table
        seed_base = point_seed(config.master_seed, 1000 + v_index)
        B = mask_matrix(M, m_a, config.trials, seed_base)
        coeffs = B @ contributions.T

        quartic = (M * basis.weights[None, :] * basis.function_table[spec.orders] ** 2) ** 2
        masked_energy = B @ quartic.T
        total_energy = float(np.sum(spec.amplitudes ** 2))
        rows = []
        for i, (p, amp) in enumerate(spec.components):
            own = amp * amp * np.maximum((M / m_a) * masked_energy[:, i] / M - 1.0, 0.0)
            var_i = float((unit * (own + (total_energy - amp * amp))).mean())
            mean_i = amp * m_a / M
            sigma_i = float(np.sqrt(var_i))
            samples = np.abs(coeffs[:, p])
            label = "signal" if spec.k == 1 else f"signal_{i + 1}"
            rows += _histogram_rows(
                samples, label, config.bins,
                lambda x, m=mean_i, s=sigma_i: folded_normal_pdf(x, m, s),
            )
            ks[(variant, label)] = _ks_statistic(
                samples, lambda x, m=mean_i, s=sigma_i: folded_normal_cdf(x, m, s)
            )
        sigma_noise = float(np.sqrt(unit * total_energy))
        noise_positions = np.setdiff1d(np.arange(M), spec.orders)
        noise_samples = np.abs(coeffs[:, noise_positions]).ravel()
        rows += _histogram_rows(
            noise_samples, "noise", config.bins,
            lambda x: half_normal_pdf(x, sigma_noise),
        )
        ks[(variant, "noise")] = _ks_statistic(
            noise_samples, lambda x: half_normal_cdf(x, sigma_noise)
        )

        comments = [
            f"ks class={label} value={_fmt(value)}"
            for (var, label), value in ks.items() if var == variant
        ]
        path = Path(config.out_dir) / f"histograms_{variant}.csv"
        write_csv(path, ["class", "bin_center", "empirical_density", "model_density"],
                  rows, config, comments)
        paths.append(path)
        if config.svg:
            classes = {}
            for label, center, density, model in rows:
                classes.setdefault(label, ([], [], []))
                classes[label][0].append(center)
                classes[label][1].append(density)
                classes[label][2].append(model)
            for label, (centers, density, model) in classes.items():
                svg_histogram(
                    path.with_name(f"histograms_{variant}_{label}.svg"),
                    centers, density, model,
                    title=f"{variant} {label} magnitudes",
                )
    return HistogramResult(paths=tuple(paths), ks=ks)


# ---------------------------------------------------------------------------

def run_experiment(config: ExperimentConfig, basis: HermiteBasis | None = None):
    """Dispatch a configuration to its experiment runner."""
    if config.experiment in ("ex1a", "ex1b", "ex2"):
        return run_variance_sweep(config, basis)
    if config.experiment == "ex3":
        return run_misdetection_sweep(config, basis)
    if config.experiment == "ex4":
        return run_threshold_demo(config, basis)
    if config.experiment == "ex5":
        return run_reconstruction_demo(config, basis)
    return run_histograms(config, basis)
