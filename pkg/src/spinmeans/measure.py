"""Simulated projective spin measurements along x, y and z.

Random streams
--------------
Each (seed, stream, axis) triple gets its own Philox4x64 counter-based
generator, keyed through ``numpy.random.SeedSequence([seed, stream, axis])``.
The number of +1/2 outcomes among N shots is drawn with
``Generator.binomial(N, p)``, which has the same distribution as counting N
independent Bernoulli(p) outcomes. Counts are reproducible for a given numpy
release; the golden files in ``tests/golden`` pin them.

``stream`` separates independently prepared states: the experiment uses
stream 0 for the first input state and stream 1 for the second.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import InvalidValue, MissingAxis, ZeroVector
from .qcore import MeanSpinVector, SigmaTriple
from .superpose import SuperpositionResult, check_pure_pair, superpose_checked


class Axis(str, enum.Enum):
    X = "x"
    Y = "y"
    Z = "z"

    @property
    def index(self) -> int:
        return "xyz".index(self.value)


AXES = (Axis.X, Axis.Y, Axis.Z)


@dataclass(frozen=True)
class ShotRecord:
    axis: Axis
    shots: int
    ups: int

    def __post_init__(self):
        object.__setattr__(self, "axis", Axis(self.axis))
        if isinstance(self.shots, bool) or not isinstance(self.shots, (int, np.integer)):
            raise InvalidValue(f"shots must be an integer, got {self.shots!r}")
        if isinstance(self.ups, bool) or not isinstance(self.ups, (int, np.integer)):
            raise InvalidValue(f"ups must be an integer, got {self.ups!r}")
        object.__setattr__(self, "shots", int(self.shots))
        object.__setattr__(self, "ups", int(self.ups))
        if self.shots < 1:
            raise InvalidValue(f"shots must be positive, got {self.shots}")
        if not 0 <= self.ups <= self.shots:
            raise InvalidValue(f"ups = {self.ups} outside [0, {self.shots}]")

    @property
    def frequency(self) -> float:
        return self.ups / self.shots


@dataclass(frozen=True)
class EstimatedMeans:
    """Per-axis frequency estimates.

    ``means`` is a plain triple rather than a :class:`MeanSpinVector` because
    sampling noise can push a near-pure estimate just outside the Bloch ball.
    """

    means: tuple[float, float, float]
    stderr: tuple[float, float, float]
    shots_per_axis: int

    def vector(self) -> MeanSpinVector:
        """The estimate as a validated mean vector (fails outside the ball)."""
        return MeanSpinVector(*self.means)


def _check_shots(shots_per_axis) -> int:
    if isinstance(shots_per_axis, bool) or not isinstance(shots_per_axis, (int, np.integer)):
        raise InvalidValue(f"shots_per_axis must be an integer, got {shots_per_axis!r}")
    if shots_per_axis < 1:
        raise InvalidValue(f"shots_per_axis must be >= 1, got {shots_per_axis}")
    return int(shots_per_axis)


def _check_seed(seed) -> int:
    if isinstance(seed, bool) or not isinstance(seed, (int, np.integer)):
        raise InvalidValue(f"seed must be an integer, got {seed!r}")
    if not 0 <= seed < 2**64:
        raise InvalidValue(f"seed must be a 64-bit unsigned integer, got {seed}")
    return int(seed)


def axis_generator(seed: int, stream: int, axis: Axis) -> np.random.Generator:
    ss = np.random.SeedSequence([_check_seed(seed), int(stream), Axis(axis).index])
    return np.random.Generator(np.random.Philox(ss))


def simulate_shots(
    true_means: MeanSpinVector, shots_per_axis: int, seed: int, stream: int = 0
) -> tuple[ShotRecord, ShotRecord, ShotRecord]:
    """Count +1/2 outcomes of ``shots_per_axis`` measurements along each axis."""
    n = _check_shots(shots_per_axis)
    records = []
    for axis, mean in zip(AXES, true_means.as_tuple()):
        p = min(max(0.5 + mean, 0.0), 1.0)
        ups = int(axis_generator(seed, stream, axis).binomial(n, p))
        records.append(ShotRecord(axis, n, ups))
    return tuple(records)


def estimate_means(records: Sequence[ShotRecord]) -> EstimatedMeans:
    by_axis = {}
    for r in records:
        if r.axis in by_axis:
            raise InvalidValue(f"duplicate record for axis {r.axis.value}")
        by_axis[r.axis] = r
    missing = [a.value for a in AXES if a not in by_axis]
    if missing:
        raise MissingAxis(f"no shot record for axis {', '.join(missing)}")
    means, errs = [], []
    for axis in AXES:
        r = by_axis[axis]
        f = r.frequency
        means.append(f - 0.5)
        errs.append(math.sqrt(f * (1.0 - f) / r.shots))
    return EstimatedMeans(
        tuple(means), tuple(errs), min(r.shots for r in by_axis.values())
    )


def project_to_pure(m: MeanSpinVector | Sequence[float]) -> MeanSpinVector:
    """Radially rescale a mean triple onto the pure-state sphere |s| = 1/2."""
    v = m.as_tuple() if isinstance(m, MeanSpinVector) else tuple(float(x) for x in m)
    r = math.sqrt(sum(x * x for x in v))
    if not r > 1e-12:
        raise ZeroVector("mean vector is zero; no nearest pure state")
    k = 0.5 / r
    return MeanSpinVector(*(x * k for x in v))


@dataclass(frozen=True)
class ExperimentReport:
    estimate_a: EstimatedMeans
    estimate_b: EstimatedMeans
    projected_a: MeanSpinVector
    projected_b: MeanSpinVector
    result: SuperpositionResult
    reference: SuperpositionResult
    # sup-norm distance between measured and noiseless superposed means
    deviation: float


def end_to_end_experiment(
    a_true: MeanSpinVector,
    b_true: MeanSpinVector,
    sig: SigmaTriple,
    shots_per_axis: int,
    seed: int,
) -> ExperimentReport:
    """Measure both states, purify the estimates and superpose them.

    The measured superposition is compared with the noiseless one computed
    from the true means.
    """
    check_pure_pair(a_true, b_true)
    reference = superpose_checked(a_true, b_true, sig)
    est_a = estimate_means(simulate_shots(a_true, shots_per_axis, seed, stream=0))
    est_b = estimate_means(simulate_shots(b_true, shots_per_axis, seed, stream=1))
    proj_a = project_to_pure(est_a.means)
    proj_b = project_to_pure(est_b.means)
    result = superpose_checked(proj_a, proj_b, sig)
    deviation = max(
        abs(u - v)
        for u, v in zip(result.means_out.as_tuple(), reference.means_out.as_tuple())
    )
    return ExperimentReport(est_a, est_b, proj_a, proj_b, result, reference, deviation)
