"""Control-vector sequencers: collapsed Gibbs sampling and a digit-quantized
Lorenz flow.

Both produce a SampleLog of (x, y, z) triples that the planner later maps
onto speech rate, voice and volume.  The Gibbs chain draws

    x_i ~ Normal(rho * y_{i-1}, s)
    y_i ~ Normal(rho * x_i,     s)
    z_i = Normal(rho * x_i + rho * y_i, s) / 100        s = sqrt(rho + rho^3)

with row 0 pinned to the initial values.  The Lorenz sequencer Euler-steps

    dx = sigma * (y - x) * dt
    dy = (x * (rho_l - z) - y) * dt
    dz = (x * y - beta * z) * dt

and then quantizes: x becomes the ones digit of its integer part times
100, z the same digit divided by 10; the quantized state is what carries
into the next step, so x always lands on {0, 100, ..., 900} and z on
{0.0, 0.1, ..., 0.9}.

All randomness comes from a seeded PCG64 generator so identical configs
reproduce identical logs across runs and machines.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path
from typing import IO, Union

import numpy as np

from .errors import (
    EmptyLogError,
    InvalidConfigError,
    NonFiniteStateError,
    SinkError,
)

RNG_ALGORITHM = "pcg64"

METHOD_GIBBS = "gibbs"
METHOD_LORENZ = "lorenz"


def _require_finite(field: str, value: float) -> float:
    value = float(value)
    if not math.isfinite(value):
        raise InvalidConfigError(field, "must be a finite number")
    return value


@dataclass(frozen=True)
class GibbsConfig:
    """Parameters of the collapsed Gibbs chain.

    ``rho`` must satisfy rho + rho^3 >= 0 (equivalently rho >= 0) so the
    conditional standard deviation sqrt(rho + rho^3) is real; rho in
    [0, 1) is the supported stationary regime.
    """

    n: int
    rho: float
    x0: float
    y0: float
    z0: float
    seed: int = 0

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise InvalidConfigError("n", "must be an integer >= 1")
        rho = _require_finite("rho", self.rho)
        if rho + rho**3 < 0:
            raise InvalidConfigError(
                "rho", "rho + rho^3 must be >= 0 (imaginary standard deviation)"
            )
        for name in ("x0", "y0", "z0"):
            _require_finite(name, getattr(self, name))
        if not isinstance(self.seed, int) or self.seed < 0:
            raise InvalidConfigError("seed", "must be a non-negative integer")

    @property
    def conditional_sd(self) -> float:
        return math.sqrt(self.rho + self.rho**3)

    def to_dict(self) -> dict:
        return {
            "kind": METHOD_GIBBS,
            "n": self.n,
            "rho": self.rho,
            "x0": self.x0,
            "y0": self.y0,
            "z0": self.z0,
            "seed": self.seed,
            "rng": RNG_ALGORITHM,
        }


@dataclass(frozen=True)
class LorenzConfig:
    """Parameters of the Euler-stepped, digit-quantized Lorenz flow.

    ``seed`` is unused by the deterministic integrator and is retained
    only so plans built from this config stay seed-stamped.
    """

    n: int
    dt: float = 0.01
    sigma: float = 10.0
    rho_l: float = 28.0
    beta: float = 8.0 / 3.0
    x0: float = 0.0
    y0: float = 0.0
    z0: float = 0.0
    seed: int = 0

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise InvalidConfigError("n", "must be an integer >= 1")
        if not (_require_finite("dt", self.dt) > 0):
            raise InvalidConfigError("dt", "must be > 0")
        for name in ("sigma", "rho_l", "beta", "x0", "y0", "z0"):
            _require_finite(name, getattr(self, name))
        if not isinstance(self.seed, int) or self.seed < 0:
            raise InvalidConfigError("seed", "must be a non-negative integer")

    def to_dict(self) -> dict:
        return {
            "kind": METHOD_LORENZ,
            "n": self.n,
            "dt": self.dt,
            "sigma": self.sigma,
            "rho_l": self.rho_l,
            "beta": self.beta,
            "x0": self.x0,
            "y0": self.y0,
            "z0": self.z0,
            "seed": self.seed,
            "rng": RNG_ALGORITHM,
        }


@dataclass(frozen=True)
class ControlVector:
    """One simulated (x, y, z) triple: rate / voice / volume material."""

    x: float
    y: float
    z: float

    def __post_init__(self):
        for name in ("x", "y", "z"):
            if not math.isfinite(getattr(self, name)):
                raise NonFiniteStateError(-1)

    def astuple(self) -> tuple[float, float, float]:
        return (self.x, self.y, self.z)


@dataclass(frozen=True)
class SampleLog:
    """An ordered run of control vectors plus the config that produced it."""

    vectors: tuple[ControlVector, ...]
    method: str
    config: Union[GibbsConfig, LorenzConfig]
    rng: str = RNG_ALGORITHM

    def __post_init__(self):
        if len(self.vectors) != self.config.n:
            raise InvalidConfigError(
                "n", f"log holds {len(self.vectors)} vectors but config.n is {self.config.n}"
            )

    def __len__(self) -> int:
        return len(self.vectors)

    def samples(self) -> list[list[float]]:
        return [[v.x, v.y, v.z] for v in self.vectors]


def collapsed_gibbs(config: GibbsConfig) -> SampleLog:
    """Run the collapsed Gibbs chain; row 0 is the initial values exactly.

    z draws are divided by 100 inside the sampler so logged samples match
    the volume scale directly.
    """
    rng = np.random.Generator(np.random.PCG64(config.seed))
    rho = config.rho
    s = config.conditional_sd
    vectors = [ControlVector(config.x0, config.y0, config.z0)]
    y = config.y0
    for _ in range(1, config.n):
        x = float(rng.normal(rho * y, s))
        y = float(rng.normal(rho * x, s))
        z = float(rng.normal(rho * x + rho * y, s)) / 100.0
        vectors.append(ControlVector(x, y, z))
    return SampleLog(tuple(vectors), METHOD_GIBBS, config)


def digit0(value: float) -> int:
    """Ones digit of the absolute integer part: floor(|value|) mod 10."""
    return int(math.floor(abs(value))) % 10


def lorenz_sequence(config: LorenzConfig) -> SampleLog:
    """Euler-step the Lorenz system with digit quantization of x and z.

    The quantized state is carried into the next step, and the log's first
    vector is the transformed first step, never the raw initial state.
    Raises NonFiniteStateError with the step index if the state overflows.
    """
    x, y, z = config.x0, config.y0, config.z0
    sigma, rho_l, beta, dt = config.sigma, config.rho_l, config.beta, config.dt
    vectors = []
    for step in range(config.n):
        dx = (sigma * (y - x)) * dt
        dy = (x * (rho_l - z) - y) * dt
        dz = (x * y - beta * z) * dt
        x = x + dx
        y = y + dy
        z = z + dz
        if not (math.isfinite(x) and math.isfinite(y) and math.isfinite(z)):
            raise NonFiniteStateError(step)
        x = float(digit0(x) * 100)
        z = digit0(z) / 10
        vectors.append(ControlVector(x, y, z))
    return SampleLog(tuple(vectors), METHOD_LORENZ, config)


@dataclass(frozen=True)
class ComponentStats:
    mean: float
    std: float
    min: float
    max: float


@dataclass(frozen=True)
class DiagnosticsReport:
    """Per-component summary statistics over a sample log."""

    count: int
    x: ComponentStats
    y: ComponentStats
    z: ComponentStats


def emit_diagnostics(log: SampleLog, out: Union[str, Path, IO[str]]) -> DiagnosticsReport:
    """Write a ``step,x,y,z`` CSV of the log and return summary statistics.

    ``out`` may be a path or a writable text stream.  Standard deviations
    use the n-1 sample convention (0 for single-row logs).  Raises
    SinkError when the sink cannot be written.
    """
    if not log.vectors:
        raise EmptyLogError("sample log has no vectors")

    def _write(fh: IO[str]) -> None:
        fh.write("step,x,y,z\n")
        for step, v in enumerate(log.vectors):
            fh.write(f"{step},{v.x!r},{v.y!r},{v.z!r}\n")

    try:
        if hasattr(out, "write"):
            _write(out)  # type: ignore[arg-type]
        else:
            with open(out, "w", encoding="utf-8", newline="") as fh:  # type: ignore[arg-type]
                _write(fh)
    except OSError as exc:
        raise SinkError(f"could not write diagnostics: {exc}") from exc

    arr = np.array([[v.x, v.y, v.z] for v in log.vectors], dtype=float)
    means = arr.mean(axis=0)
    stds = arr.std(axis=0, ddof=1) if len(arr) > 1 else np.zeros(3)
    mins = arr.min(axis=0)
    maxs = arr.max(axis=0)
    stats = [
        ComponentStats(float(means[i]), float(stds[i]), float(mins[i]), float(maxs[i]))
        for i in range(3)
    ]
    return DiagnosticsReport(count=len(arr), x=stats[0], y=stats[1], z=stats[2])
