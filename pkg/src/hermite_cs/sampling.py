"""Compressive acquisition: sampling masks, measurements, sparse test signals.

Sample positions are 1-based (m = 1 .. M) in all public data structures,
matching the usual signal-indexing convention; 0-based indices for numpy
work are available via SamplingMask.indices.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from .basis import HermiteBasis
from .transform import forward

_MASK64 = (1 << 64) - 1
_SPLITMIX_GAMMA = 0x9E3779B97F4A7C15


def splitmix64(x: int) -> int:
    """One splitmix64 scramble of a 64-bit value."""
    z = (x + _SPLITMIX_GAMMA) & _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


def trial_seed(master_seed: int, trial_index: int) -> int:
    """Derived 64-bit seed for one trial of a seeded experiment.

    mix(master, i) = splitmix64(master + (i + 1) * 0x9E3779B97F4A7C15);
    distinct trials get decorrelated generator streams while staying fully
    reproducible from the master seed.
    """
    return splitmix64((master_seed + (trial_index + 1) * _SPLITMIX_GAMMA) & _MASK64)


@dataclass(frozen=True)
class SamplingMask:
    """Positions of the available samples of a length-`total` signal."""

    total: int
    available: np.ndarray  # sorted, distinct, 1-based

    def __post_init__(self):
        avail = np.asarray(self.available, dtype=np.int64)
        if avail.ndim != 1 or avail.size == 0:
            raise ValueError("mask needs at least one available position")
        if avail.size > self.total:
            raise ValueError("more available positions than samples")
        if avail.min() < 1 or avail.max() > self.total:
            raise ValueError(f"positions must lie in [1, {self.total}]")
        if np.unique(avail).size != avail.size:
            raise ValueError("positions must be distinct")
        avail = np.sort(avail)
        avail.setflags(write=False)
        object.__setattr__(self, "available", avail)

    @property
    def n_available(self) -> int:
        return int(self.available.size)

    @property
    def indices(self) -> np.ndarray:
        """0-based positions, for indexing numpy arrays."""
        return self.available - 1

    def boolean(self) -> np.ndarray:
        """Length-`total` boolean vector, True at available positions."""
        out = np.zeros(self.total, dtype=bool)
        out[self.indices] = True
        return out


@dataclass(frozen=True)
class Measurement:
    """Observed sample values together with the mask that selected them."""

    values: np.ndarray
    mask: SamplingMask

    def __post_init__(self):
        vals = np.asarray(self.values, dtype=float)
        if vals.shape != (self.mask.n_available,):
            raise ValueError("measurement length must match the mask")
        vals.setflags(write=False)
        object.__setattr__(self, "values", vals)


@dataclass(frozen=True)
class SparseSignalSpec:
    """Sparse synthetic signal: a few (order, amplitude) basis components."""

    length: int
    components: tuple = field(default_factory=tuple)

    def __post_init__(self):
        comps = tuple((int(p), float(a)) for p, a in self.components)
        orders = [p for p, _ in comps]
        if len(set(orders)) != len(orders):
            raise ValueError("component orders must be distinct")
        for p, a in comps:
            if not 0 <= p < self.length:
                raise ValueError(f"component order {p} outside [0, {self.length - 1}]")
            if a == 0.0:
                raise ValueError("component amplitudes must be nonzero")
        if len(comps) > self.length:
            raise ValueError("more components than basis functions")
        object.__setattr__(self, "components", comps)

    @property
    def k(self) -> int:
        return len(self.components)

    @property
    def orders(self) -> np.ndarray:
        return np.array([p for p, _ in self.components], dtype=np.int64)

    @property
    def amplitudes(self) -> np.ndarray:
        return np.array([a for _, a in self.components], dtype=float)


def random_mask(M: int, M_A: int, seed: int) -> SamplingMask:
    """Uniformly random size-M_A subset of {1..M}, deterministic per seed.

    Positions come from a Fisher-Yates shuffle of a PCG64 stream, so masks
    are reproducible across platforms.
    """
    if M < 1:
        raise ValueError(f"signal length must be positive, got {M}")
    if not 1 <= M_A <= M:
        raise ValueError(f"need 1 <= M_A <= M, got M_A={M_A}, M={M}")
    rng = np.random.Generator(np.random.PCG64(seed))
    picks = rng.permutation(M)[:M_A]
    return SamplingMask(total=M, available=np.sort(picks) + 1)


def synthesize(spec: SparseSignalSpec, basis: HermiteBasis) -> np.ndarray:
    """Samples of the sparse signal on the basis root grid."""
    if spec.length != basis.order:
        raise ValueError("signal length must equal the basis order")
    out = np.zeros(basis.order)
    for p, a in spec.components:
        out += a * basis.function_table[p]
    return out


def measure(signal, mask: SamplingMask) -> Measurement:
    """Extract the signal entries at the mask positions, in mask order."""
    vec = np.asarray(signal, dtype=float)
    if vec.ndim != 1 or vec.size != mask.total:
        raise ValueError(f"signal must be a length-{mask.total} vector")
    return Measurement(values=vec[mask.indices], mask=mask)


def initial_estimate(measurement: Measurement, basis: HermiteBasis) -> np.ndarray:
    """Expansion coefficients of the zero-filled measurement.

    Missing samples contribute nothing to the quadrature, so this is
    exactly the forward transform of the signal with zeros at the missing
    positions; it is the quantity whose statistics drive support detection.
    """
    mask = measurement.mask
    if mask.total != basis.order:
        raise ValueError("mask length must equal the basis order")
    filled = np.zeros(basis.order)
    filled[mask.indices] = measurement.values
    return forward(filled, basis)


def problem_from_dict(data: dict) -> tuple[SparseSignalSpec, SamplingMask | None]:
    """Parse the JSON problem schema.

    {"M": int, "components": [{"p": int, "A": float}, ...],
     "mask": {"M_A": int, "seed": int}}   (mask optional)
    """
    try:
        length = int(data["M"])
        comps = tuple((int(c["p"]), float(c["A"])) for c in data.get("components", ()))
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed problem description: {exc}") from exc
    spec = SparseSignalSpec(length=length, components=comps)
    mask = None
    if "mask" in data and data["mask"] is not None:
        m = data["mask"]
        try:
            mask = random_mask(length, int(m["M_A"]), int(m["seed"]))
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed mask description: {exc}") from exc
    return spec, mask


def load_problem(path) -> tuple[SparseSignalSpec, SamplingMask | None]:
    """Read a signal/mask problem description from a JSON file."""
    with open(path, "r", encoding="utf-8") as fh:
        return problem_from_dict(json.load(fh))
