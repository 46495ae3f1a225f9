"""Superposition of two pure qubit states in the mean-projection picture.

Given the means ``a`` and ``b`` of two pure states and the coefficients of
``c1|a> + c2|b>`` packed into a :class:`SigmaTriple`, return the means of the
normalized superposed state. Two independent routes are provided:

``superpose_closed``
    the nonlinear addition rule, evaluated on the nine real inputs with no
    complex arithmetic;
``superpose_oracle``
    builds both spinors and the sum vector explicitly and reads the means
    off the result.

All spinors use the gauge where the first component is real and
non-negative.
"""
from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass

from .errors import (
    CrossCheckMismatch,
    DegenerateSuperposition,
    NonzeroC1Phase,
    NotNormalized,
    NotPure,
    PoleError,
)
from .qcore import PURE_TOL, MeanSpinVector, SigmaTriple
from .represent import means_from_state, state_from_means

# minimum 1/2 + s_z for each input state
POLE_MARGIN = 1e-8
DEGENERATE_T = 1e-12
# cross-check limits for superpose_checked
CHECK_MEANS_TOL = 1e-8
CHECK_T_TOL = 1e-10


class Method(str, enum.Enum):
    CLOSED_FORM = "closed_form"
    ORACLE = "oracle"


@dataclass(frozen=True)
class SuperpositionResult:
    means_out: MeanSpinVector
    normalization_T: float
    method: Method
    # sup-norm gap between the two routes, only set by superpose_checked
    max_deviation: float | None = None

    def __post_init__(self):
        self.means_out.require_pure("superposed state")
        if not 0.0 < self.normalization_T <= 4.0 + 1e-12:
            raise ValueError(f"normalization T = {self.normalization_T!r} outside (0, 4]")


def gauge_coefficients(c1: complex, c2: complex) -> tuple[complex, complex]:
    """Rotate both coefficients by exp(-i arg c1) so that c1 becomes real."""
    c1, c2 = complex(c1), complex(c2)
    if c1 == 0:
        return 0j, c2
    phase = cmath.exp(-1j * cmath.phase(c1))
    return complex(abs(c1), 0.0), c2 * phase


def sigma_from_coefficients(c1: complex, c2: complex) -> SigmaTriple:
    """Pack normalized coefficients (c1 real, non-negative) into a sigma triple."""
    c1, c2 = complex(c1), complex(c2)
    n2 = abs(c1) ** 2 + abs(c2) ** 2
    if not math.isfinite(n2) or abs(n2 - 1.0) > PURE_TOL:
        raise NotNormalized(f"|c1|^2 + |c2|^2 = {n2!r}, expected 1")
    if abs(c1.imag) > PURE_TOL or c1.real < -PURE_TOL:
        raise NonzeroC1Phase(
            f"c1 = {c1!r} must be real and non-negative; see gauge_coefficients"
        )
    n = math.sqrt(n2)
    r1 = max(c1.real, 0.0) / n
    prod = r1 * (c2 / n)
    return SigmaTriple(prod.real, prod.imag, r1 * r1 - 0.5)


def coefficients_from_sigma(sig: SigmaTriple) -> tuple[complex, complex]:
    """Inverse of :func:`sigma_from_coefficients`.

    The pair is the gauge-fixed spinor whose means are the sigma triple:
    ``c1 = sqrt(1/2 + sig3)``, ``c2 = (sig1 + i sig2) / c1``. At ``sig3 = -1/2``
    this gives ``(0, 1)``; the phase of ``c2`` is then global and irrelevant.
    """
    chi = state_from_means(MeanSpinVector(*sig.as_tuple()))
    return chi.up, chi.down


def check_pure_pair(a: MeanSpinVector, b: MeanSpinVector) -> None:
    a.require_pure("first state")
    b.require_pure("second state")
    for label, m in (("first", a), ("second", b)):
        if 0.5 + m.sz < POLE_MARGIN:
            raise PoleError(
                f"{label} state has 1/2 + sz = {0.5 + m.sz!r} < {POLE_MARGIN:g}"
            )


def _overlap_term(a: MeanSpinVector, b: MeanSpinVector, sig: SigmaTriple) -> float:
    """T - 1, i.e. 2 Re(c1 c2 <a|b>) written in means."""
    pa, pb = 0.5 + a.sz, 0.5 + b.sz
    bracket = sig.sig1 * (b.sx * a.sx + b.sy * a.sy + pa * pb) + sig.sig2 * (
        a.sy * b.sx - a.sx * b.sy
    )
    return 2.0 / math.sqrt(pa * pb) * bracket


def normalization_T(a: MeanSpinVector, b: MeanSpinVector, sig: SigmaTriple) -> float:
    """Squared norm of ``c1|a> + c2|b>``."""
    check_pure_pair(a, b)
    return 1.0 + _overlap_term(a, b, sig)


def superpose_closed(
    a: MeanSpinVector, b: MeanSpinVector, sig: SigmaTriple
) -> SuperpositionResult:
    """Means of the superposed state from the real addition rule."""
    check_pure_pair(a, b)
    pa, pb = 0.5 + a.sz, 0.5 + b.sz
    w1, w2 = 0.5 + sig.sig3, 0.5 - sig.sig3
    s1, s2 = sig.sig1, sig.sig2
    x = _overlap_term(a, b, sig)
    t = 1.0 + x
    if t < DEGENERATE_T:
        raise DegenerateSuperposition(f"normalization T = {t!r}")
    ratio_ba = math.sqrt(pb / pa)
    ratio_ab = math.sqrt(pa / pb)
    sx = (
        a.sx * w1
        + b.sx * w2
        + ratio_ba * (s1 * a.sx + s2 * a.sy)
        + ratio_ab * (s1 * b.sx - s2 * b.sy)
    ) / t
    sy = (
        a.sy * w1
        + b.sy * w2
        + ratio_ba * (s1 * a.sy - s2 * a.sx)
        + ratio_ab * (s2 * b.sx + s1 * b.sy)
    ) / t
    # -1/2 + [w1 pa + w2 pb + 2 sqrt(pa pb) s1] / T, with the 1/2 folded into
    # the numerator to avoid cancellation: w1 pa + w2 pb = 1/2 + w1 sz + w2 Sz.
    sz = (w1 * a.sz + w2 * b.sz + 2.0 * math.sqrt(pa * pb) * s1 - 0.5 * x) / t
    return SuperpositionResult(_pure_vector(sx, sy, sz), t, Method.CLOSED_FORM)


def _pure_vector(sx: float, sy: float, sz: float) -> MeanSpinVector:
    # Rounding in T is amplified by 1/T; an overshoot of the sphere within the
    # purity tolerance is pulled back so the Bloch-ball check accepts it.
    r2 = sx * sx + sy * sy + sz * sz
    if 0.25 < r2 <= 0.25 + PURE_TOL:
        k = 0.5 / math.sqrt(r2)
        sx, sy, sz = sx * k, sy * k, sz * k
    elif r2 > 0.25 + PURE_TOL:
        raise NotPure(f"superposed means have |s|^2 = {r2!r}")
    return MeanSpinVector(sx, sy, sz)


def superpose_oracle(
    a: MeanSpinVector, b: MeanSpinVector, sig: SigmaTriple
) -> SuperpositionResult:
    """Means of the superposed state by explicit spinor arithmetic."""
    check_pure_pair(a, b)
    chi1 = state_from_means(a)
    chi2 = state_from_means(b)
    c1, c2 = coefficients_from_sigma(sig)
    chi = chi1.scaled(c1) + chi2.scaled(c2)
    t = chi.norm2
    if t < DEGENERATE_T:
        raise DegenerateSuperposition(f"superposed vector has squared norm {t!r}")
    return SuperpositionResult(means_from_state(chi), t, Method.ORACLE)


def superpose_checked(
    a: MeanSpinVector, b: MeanSpinVector, sig: SigmaTriple
) -> SuperpositionResult:
    """Closed-form result, verified against the spinor route."""
    closed = superpose_closed(a, b, sig)
    oracle = superpose_oracle(a, b, sig)
    dev = max(
        abs(u - v)
        for u, v in zip(closed.means_out.as_tuple(), oracle.means_out.as_tuple())
    )
    dt = abs(closed.normalization_T - oracle.normalization_T)
    if dev > CHECK_MEANS_TOL or dt > CHECK_T_TOL:
        raise CrossCheckMismatch(
            f"closed form and spinor routes disagree: means by {dev:.3e}, T by {dt:.3e}"
        )
    return SuperpositionResult(
        closed.means_out, closed.normalization_T, Method.CLOSED_FORM, dev
    )


def superpose(
    a: MeanSpinVector,
    b: MeanSpinVector,
    sig: SigmaTriple,
    method: str = "checked",
) -> SuperpositionResult:
    """Dispatch on ``method``: ``closed``, ``oracle`` or ``checked``."""
    try:
        fn = {
            "closed": superpose_closed,
            "closed_form": superpose_closed,
            "oracle": superpose_oracle,
            "checked": superpose_checked,
        }[method]
    except KeyError:
        raise ValueError(f"unknown method {method!r}") from None
    return fn(a, b, sig)


def printed_sz_bracket(
    a: MeanSpinVector, b: MeanSpinVector, sig: SigmaTriple, *, corrected: bool = True
) -> float:
    """z mean of the superposed state written literally as
    ``-1/2 + [first + (1/2 - sig3)(1/2 + Sz) + 2 sqrt(...) sig1] / T``.

    With ``corrected=False`` the first term is ``1/2 + sz`` alone, which is
    wrong whenever ``sig3 != 1/2``; kept so the discrepancy stays testable.
    """
    check_pure_pair(a, b)
    pa, pb = 0.5 + a.sz, 0.5 + b.sz
    t = 1.0 + _overlap_term(a, b, sig)
    first = (0.5 + sig.sig3) * pa if corrected else pa
    return -0.5 + (first + (0.5 - sig.sig3) * pb + 2.0 * math.sqrt(pa * pb) * sig.sig1) / t
