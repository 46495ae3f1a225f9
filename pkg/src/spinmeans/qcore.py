"""Value types for a single spin-1/2 system and the 2x2 primitives they need.

All types are frozen dataclasses validated on construction. Complex scalars
are plain Python ``complex``; there is no separate wrapper type.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    ConstraintViolation,
    InvalidDensity,
    InvalidValue,
    NotPure,
    ZeroSpinor,
)

# construction-time invariant checks
CHECK_TOL = 1e-12
# purity and cross-path comparisons
PURE_TOL = 1e-10
# squared norm below which a spinor is treated as zero
ZERO_NORM2 = 1e-24

SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)


def _real(name: str, value) -> float:
    try:
        x = float(value)
    except (TypeError, ValueError):
        raise InvalidValue(f"{name} must be a real number, got {value!r}") from None
    if not math.isfinite(x):
        raise InvalidValue(f"{name} must be finite, got {x!r}")
    return x


def _complex(name: str, value) -> complex:
    try:
        z = complex(value)
    except (TypeError, ValueError):
        raise InvalidValue(f"{name} must be a complex number, got {value!r}") from None
    if not cmath.isfinite(z):
        raise InvalidValue(f"{name} must be finite, got {z!r}")
    return z


@dataclass(frozen=True)
class Spinor:
    """Two complex amplitudes for the m=+1/2 and m=-1/2 basis states."""

    up: complex
    down: complex

    def __post_init__(self):
        object.__setattr__(self, "up", _complex("up", self.up))
        object.__setattr__(self, "down", _complex("down", self.down))

    @property
    def norm2(self) -> float:
        return abs(self.up) ** 2 + abs(self.down) ** 2

    @property
    def is_normalized(self) -> bool:
        return abs(self.norm2 - 1.0) <= CHECK_TOL

    def normalized(self) -> Spinor:
        n2 = self.norm2
        if n2 <= ZERO_NORM2:
            raise ZeroSpinor(f"spinor has squared norm {n2:.3e}")
        n = math.sqrt(n2)
        return Spinor(self.up / n, self.down / n)

    def __add__(self, other: Spinor) -> Spinor:
        return Spinor(self.up + other.up, self.down + other.down)

    def scaled(self, c: complex) -> Spinor:
        return Spinor(c * self.up, c * self.down)

    def to_array(self) -> np.ndarray:
        return np.array([self.up, self.down], dtype=complex)


@dataclass(frozen=True)
class DensityMatrix2:
    """Hermitian 2x2 density matrix.

    Only the real diagonal and the upper off-diagonal entry are stored; the
    lower entry is derived as its conjugate, so Hermiticity cannot drift.
    """

    r11: float
    r22: float
    rho12: complex

    def __post_init__(self):
        r11 = _real("r11", self.r11)
        r22 = _real("r22", self.r22)
        rho12 = _complex("rho12", self.rho12)
        object.__setattr__(self, "r11", r11)
        object.__setattr__(self, "r22", r22)
        object.__setattr__(self, "rho12", rho12)
        if abs(r11 + r22 - 1.0) > CHECK_TOL:
            raise InvalidDensity(f"trace is {r11 + r22!r}, expected 1")
        if r11 < -CHECK_TOL or r22 < -CHECK_TOL:
            raise InvalidDensity("negative diagonal entry")
        if r11 * r22 - abs(rho12) ** 2 < -CHECK_TOL:
            raise InvalidDensity("matrix is not positive semidefinite")

    @property
    def rho21(self) -> complex:
        return self.rho12.conjugate()

    def entry(self, row: int, col: int) -> complex:
        """Matrix entry with 1-based indices."""
        table = {
            (1, 1): complex(self.r11),
            (1, 2): self.rho12,
            (2, 1): self.rho21,
            (2, 2): complex(self.r22),
        }
        try:
            return table[(row, col)]
        except KeyError:
            raise IndexError(f"no entry ({row}, {col}) in a 2x2 matrix") from None

    @property
    def determinant(self) -> float:
        return self.r11 * self.r22 - abs(self.rho12) ** 2

    def to_array(self) -> np.ndarray:
        return np.array([[self.r11, self.rho12], [self.rho21, self.r22]], dtype=complex)


@dataclass(frozen=True)
class MeanSpinVector:
    """Mean spin projections onto x, y and z (each in [-1/2, 1/2])."""

    sx: float
    sy: float
    sz: float

    def __post_init__(self):
        for name in ("sx", "sy", "sz"):
            object.__setattr__(self, name, _real(name, getattr(self, name)))
        if self.norm2 > 0.25 + CHECK_TOL:
            raise ConstraintViolation(
                f"|s|^2 = {self.norm2!r} exceeds 1/4: outside the Bloch ball"
            )

    @property
    def norm2(self) -> float:
        return self.sx * self.sx + self.sy * self.sy + self.sz * self.sz

    def is_pure(self, tol: float = PURE_TOL) -> bool:
        return abs(self.norm2 - 0.25) <= tol

    def require_pure(self, what: str = "state") -> None:
        if not self.is_pure():
            raise NotPure(f"{what} has |s|^2 = {self.norm2!r}, expected 1/4")

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.sx, self.sy, self.sz)

    def to_array(self) -> np.ndarray:
        return np.array(self.as_tuple())


@dataclass(frozen=True)
class ProbabilityTriple:
    """Probabilities of the +1/2 outcome along x, y, z."""

    p1: float
    p2: float
    p3: float

    def __post_init__(self):
        for name in ("p1", "p2", "p3"):
            p = _real(name, getattr(self, name))
            if not -CHECK_TOL <= p <= 1.0 + CHECK_TOL:
                raise ConstraintViolation(f"{name} = {p!r} is not a probability")
            object.__setattr__(self, name, p)
        r2 = (self.p1 - 0.5) ** 2 + (self.p2 - 0.5) ** 2 + (self.p3 - 0.5) ** 2
        if r2 > 0.25 + CHECK_TOL:
            raise ConstraintViolation(f"sum of (p_k - 1/2)^2 = {r2!r} exceeds 1/4")

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.p1, self.p2, self.p3)


def density_from_spinor(s: Spinor) -> DensityMatrix2:
    """Projector |s><s| / <s|s>."""
    n2 = s.norm2
    if n2 <= ZERO_NORM2:
        raise ZeroSpinor(f"spinor has squared norm {n2:.3e}")
    r11 = abs(s.up) ** 2 / n2
    r22 = abs(s.down) ** 2 / n2
    return DensityMatrix2(r11, r22, s.up * s.down.conjugate() / n2)


def purity(rho: DensityMatrix2) -> float:
    """Tr(rho^2) = r11^2 + r22^2 + 2|rho12|^2."""
    return rho.r11 ** 2 + rho.r22 ** 2 + 2.0 * abs(rho.rho12) ** 2


@dataclass(frozen=True)
class SigmaTriple:
    """Superposition coefficients (c1, c2) written as a formal mean triple.

    ``sig3 = |c1|^2 - 1/2`` and ``sig1 + i sig2 = c1 c2`` with ``c1`` real and
    non-negative. Normalized coefficients put the triple on the sphere of
    radius 1/2.
    """

    sig1: float
    sig2: float
    sig3: float

    def __post_init__(self):
        for name in ("sig1", "sig2", "sig3"):
            x = _real(name, getattr(self, name))
            if abs(x) > 0.5 + CHECK_TOL:
                raise ConstraintViolation(f"{name} = {x!r} is outside [-1/2, 1/2]")
            object.__setattr__(self, name, x)
        if abs(self.norm2 - 0.25) > PURE_TOL:
            raise NotPure(
                f"sigma triple has |sig|^2 = {self.norm2!r}, expected 1/4"
            )

    @property
    def norm2(self) -> float:
        return self.sig1 ** 2 + self.sig2 ** 2 + self.sig3 ** 2

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.sig1, self.sig2, self.sig3)
