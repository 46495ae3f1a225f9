import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from spinmeans import (
    DensityMatrix2,
    MeanSpinVector,
    ProbabilityTriple,
    Spinor,
    density_from_means,
    density_from_probabilities,
    means_from_density,
    means_from_probabilities,
    means_from_state,
    probabilities_from_means,
    state_from_means,
)
from spinmeans.errors import ConstraintViolation, NotPure, ZeroSpinor
from spinmeans.represent import relative_phase

import oracles
from conftest import ball_points, sphere_points

R2 = 1 / math.sqrt(2)
angles = st.floats(-20.0, 20.0, allow_nan=False)


def probs_of(m):
    return ProbabilityTriple(*(0.5 + x for x in m))


@pytest.mark.parametrize(
    "p, m",
    [
        ((0.5, 0.5, 1.0), (0.0, 0.0, 0.5)),
        ((1.0, 0.5, 0.5), (0.5, 0.0, 0.0)),
        ((0.5, 0.5, 0.5), (0.0, 0.0, 0.0)),
    ],
)
def test_means_from_probabilities(p, m):
    assert means_from_probabilities(ProbabilityTriple(*p)).as_tuple() == m


@pytest.mark.parametrize(
    "m, p",
    [
        ((0.0, 0.0, 0.5), (0.5, 0.5, 1.0)),
        ((0.0, -0.5, 0.0), (0.5, 0.0, 0.5)),
        ((0.25, 0.0, 0.25), (0.75, 0.5, 0.75)),
    ],
)
def test_probabilities_from_means(m, p):
    assert probabilities_from_means(MeanSpinVector(*m)).as_tuple() == p


@pytest.mark.parametrize(
    "m, rho",
    [
        ((0, 0, 0.5), [[1, 0], [0, 0]]),
        ((0, 0, 0), [[0.5, 0], [0, 0.5]]),
        ((0.25, 0, 0.25), [[0.75, 0.25], [0.25, 0.25]]),
    ],
)
def test_density_from_means(m, rho):
    np.testing.assert_array_equal(
        density_from_means(MeanSpinVector(*m)).to_array(), np.array(rho, dtype=complex)
    )


@pytest.mark.parametrize(
    "p, rho",
    [
        ((0.5, 0.5, 1), [[1, 0], [0, 0]]),
        ((1, 0.5, 0.5), [[0.5, 0.5], [0.5, 0.5]]),
        ((0.5, 1, 0.5), [[0.5, -0.5j], [0.5j, 0.5]]),
    ],
)
def test_density_from_probabilities(p, rho):
    np.testing.assert_array_equal(
        density_from_probabilities(ProbabilityTriple(*p)).to_array(),
        np.array(rho, dtype=complex),
    )


@pytest.mark.parametrize(
    "rho, m",
    [
        (DensityMatrix2(1, 0, 0), (0, 0, 0.5)),
        (DensityMatrix2(0.5, 0.5, 0.5), (0.5, 0, 0)),
        (DensityMatrix2(0.75, 0.25, 0.25), (0.25, 0, 0.25)),
    ],
)
def test_means_from_density(rho, m):
    assert means_from_density(rho).as_tuple() == pytest.approx(m, abs=1e-15)


@pytest.mark.parametrize(
    "s, m",
    [
        (Spinor(1, 0), (0, 0, 0.5)),
        (Spinor(R2, 1j * R2), (0, 0.5, 0)),
        (Spinor(R2, -R2), (-0.5, 0, 0)),
    ],
)
def test_means_from_state(s, m):
    assert means_from_state(s).as_tuple() == pytest.approx(m, abs=1e-15)


@pytest.mark.parametrize(
    "m, s",
    [
        ((0, 0, 0.5), (1, 0)),
        ((0.5, 0, 0), (R2, R2)),
        ((0, 0, -0.5), (0, 1)),
    ],
)
def test_state_from_means(m, s):
    out = state_from_means(MeanSpinVector(*m))
    np.testing.assert_allclose(out.to_array(), np.array(s, dtype=complex), atol=1e-15)


def test_state_from_means_rejects_mixed():
    with pytest.raises(NotPure):
        state_from_means(MeanSpinVector(0.1, 0.1, 0.1))


def test_state_from_means_gauge_phase():
    s = state_from_means(MeanSpinVector(0.5, 0, 0), alpha=math.pi / 2)
    np.testing.assert_allclose(s.to_array(), [1j * R2, 1j * R2], atol=1e-15)


def test_means_from_state_zero():
    with pytest.raises(ZeroSpinor):
        means_from_state(Spinor(0, 0))


def test_mixed_density_outside_ball():
    with pytest.raises(ConstraintViolation):
        density_from_means(MeanSpinVector(0.4, 0.4, 0.0))


@given(ball_points())
def test_round_trip_probabilities(m):
    # p -> means -> p is exact whenever p - 1/2 is representable: always for
    # p >= 1/4, and for any p produced as fl(1/2 + s)
    p = probs_of(m)
    assert probabilities_from_means(means_from_probabilities(p)) == p


@given(ball_points())
def test_round_trip_means_within_an_ulp(m):
    m = MeanSpinVector(*m)
    back = means_from_probabilities(probabilities_from_means(m))
    assert max(abs(u - v) for u, v in zip(back.as_tuple(), m.as_tuple())) <= 2**-54


@given(st.integers(0, 40), st.data())
def test_round_trip_dyadic_frequencies(j, data):
    n = 2**j
    p = ProbabilityTriple(0.5, 0.5, data.draw(st.integers(0, n)) / n)
    assert probabilities_from_means(means_from_probabilities(p)) == p


@given(st.floats(0.25, 1.0))
def test_round_trip_upper_probabilities(q):
    p = ProbabilityTriple(q, 0.5, 0.5)
    assert probabilities_from_means(means_from_probabilities(p)) == p


@given(st.floats(0.0, 1.0))
def test_round_trip_any_probability_within_an_ulp(q):
    # below 1/4, bits of p finer than 2**-54 cannot survive the shift by 1/2
    p = ProbabilityTriple(q, 0.5, 0.5)
    back = probabilities_from_means(means_from_probabilities(p))
    assert abs(back.p1 - q) <= 2**-54


def test_round_trip_lossy_examples():
    for q in (1e-20, 0.001):
        back = probabilities_from_means(means_from_probabilities(ProbabilityTriple(q, 0.5, 0.5)))
        assert back.p1 != q
        assert abs(back.p1 - q) <= 2**-54


@given(ball_points())
def test_round_trip_density(m):
    back = means_from_density(density_from_means(MeanSpinVector(*m)))
    assert max(abs(u - v) for u, v in zip(back.as_tuple(), m)) <= 1e-14


@given(ball_points())
def test_density_paths_agree_bitwise(m):
    p = probs_of(m)
    assert density_from_probabilities(p) == density_from_means(means_from_probabilities(p))


@given(sphere_points(min_up=1e-8), angles)
def test_round_trip_state(m, alpha):
    s = state_from_means(MeanSpinVector(*m), alpha)
    assert abs(s.norm2 - 1) <= 1e-12
    back = means_from_state(s)
    assert max(abs(u - v) for u, v in zip(back.as_tuple(), m)) <= 1e-10


@given(sphere_points(min_up=1e-8))
def test_state_matches_eigenvector_oracle(m):
    s = state_from_means(MeanSpinVector(*m))
    psi = oracles.pure_vector_from_means(m)
    np.testing.assert_allclose(s.to_array(), psi, atol=1e-7)
    np.testing.assert_allclose(oracles.means_of_vector(s.to_array()), m, atol=1e-12)


@given(sphere_points())
def test_density_matches_pauli_oracle(m):
    rho = density_from_means(MeanSpinVector(*m))
    np.testing.assert_allclose(oracles.means_of_density(rho.to_array()), m, atol=1e-15)


@given(st.complex_numbers(max_magnitude=1e3), st.complex_numbers(max_magnitude=1e3))
def test_spinor_means_on_sphere(u, d):
    s = Spinor(u, d)
    if s.norm2 <= 1e-20:
        return
    m = means_from_state(s)
    assert abs(m.norm2 - 0.25) <= 1e-12
    np.testing.assert_allclose(m.to_array(), oracles.means_of_vector([u, d]), atol=1e-12)


@given(sphere_points())
def test_relative_phase_on_unit_circle(m):
    p = probs_of(m)
    if not 1e-6 < p.p3 < 1 - 1e-6:
        return
    c, s = relative_phase(p)
    assert abs(c * c + s * s - 1) <= 1e-10
