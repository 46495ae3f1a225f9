"""Conversions among mean spin projections, probabilities, density matrices
and spinors for one spin-1/2 system.

The mean projections are s_k = <sigma_k>/2 and the probabilities of the +1/2
outcome are p_k = 1/2 + s_k.
"""
from __future__ import annotations

import cmath
import math

from .errors import InvalidDensity, ZeroSpinor
from .qcore import (
    DensityMatrix2,
    MeanSpinVector,
    ProbabilityTriple,
    Spinor,
    ZERO_NORM2,
)

def means_from_probabilities(p: ProbabilityTriple) -> MeanSpinVector:
    return MeanSpinVector(p.p1 - 0.5, p.p2 - 0.5, p.p3 - 0.5)


def probabilities_from_means(m: MeanSpinVector) -> ProbabilityTriple:
    return ProbabilityTriple(m.sx + 0.5, m.sy + 0.5, m.sz + 0.5)


def density_from_means(m: MeanSpinVector) -> DensityMatrix2:
    """[[1/2 + sz, sx - i sy], [sx + i sy, 1/2 - sz]]"""
    return DensityMatrix2(0.5 + m.sz, 0.5 - m.sz, complex(m.sx, -m.sy))


def density_from_probabilities(p: ProbabilityTriple) -> DensityMatrix2:
    # Routed through the means so both paths agree bit for bit.
    return density_from_means(means_from_probabilities(p))


def means_from_density(rho: DensityMatrix2) -> MeanSpinVector:
    """Read the means off a density matrix.

    ``rho21 = sx + i sy`` and ``sz = (rho11 - rho22) / 2``.
    """
    if not isinstance(rho, DensityMatrix2):
        raise InvalidDensity(f"expected DensityMatrix2, got {type(rho).__name__}")
    rho21 = rho.rho21
    return MeanSpinVector(rho21.real, rho21.imag, 0.5 * (rho.r11 - rho.r22))


def means_from_state(s: Spinor) -> MeanSpinVector:
    """Means of the (internally normalized) pure state ``s``."""
    n2 = s.norm2
    if n2 <= ZERO_NORM2:
        raise ZeroSpinor(f"spinor has squared norm {n2:.3e}")
    # <s_+> = conj(chi1) chi2
    s_plus = s.up.conjugate() * s.down / n2
    sz = 0.5 * (abs(s.up) ** 2 - abs(s.down) ** 2) / n2
    return MeanSpinVector(s_plus.real, s_plus.imag, sz)


def state_from_means(m: MeanSpinVector, alpha: float = 0.0) -> Spinor:
    """Pure-state spinor with the given means.

    Returns ``exp(i alpha) * (sqrt(1/2 + sz), (sx + i sy) / sqrt(1/2 + sz))``,
    so with ``alpha = 0`` the first component is real and non-negative. The
    south pole maps to ``exp(i alpha) * (0, 1)``.
    """
    m.require_pure()
    phase = cmath.exp(1j * float(alpha))
    up2, down2 = 0.5 + m.sz, 0.5 - m.sz
    transverse = complex(m.sx, m.sy)
    if up2 >= 0.5:
        a = math.sqrt(up2)
        return Spinor(phase * a, phase * transverse / a)
    # Lower hemisphere: the same spinor with the magnitude of the second
    # component taken from 1/2 - sz. For exactly pure input the two forms
    # agree; this one does not amplify rounding in |m|^2 as sz -> -1/2.
    b = math.sqrt(down2)
    r = abs(transverse)
    if r == 0.0:
        return Spinor(0.0, phase * b)
    return Spinor(phase * (r / b), phase * b * (transverse / r))


def relative_phase(p: ProbabilityTriple) -> tuple[float, float]:
    """(cos gamma, sin gamma) of the relative phase between spinor components.

    Only defined for 0 < p3 < 1; for a pure state the pair lies on the unit
    circle.
    """
    d = math.sqrt(p.p3 * (1.0 - p.p3))
    if d == 0.0:
        raise ZeroDivisionError("relative phase is undefined at p3 = 0 or p3 = 1")
    return (p.p1 - 0.5) / d, (p.p2 - 0.5) / d
