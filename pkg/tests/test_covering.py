import cmath
import math
from fractions import Fraction as F

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from anyonstat.covering import (
    PlaneWaveFunction,
    PolarGridSpec,
    RelativeWaveFunction,
    equivariance_defect,
    gauss_wrap,
    gaussian_packet,
    inner_plane,
    inner_relative,
    intertwiner_V,
    intertwiner_V_adjoint,
    intertwining_residual,
    norm_plane,
    norm_relative,
    random_packet_mixture,
    random_plane,
    rotate_plane,
    rotate_plane_by_angle,
    rotate_relative,
    rotate_relative_by_angle,
    theorem1_roundtrip_residual,
    trapezoid_grid,
)
from anyonstat.errors import GridMismatch, KappaMismatch, NotGridAligned
from anyonstat.phases import phase_from_turns

SPINS = [0, F(1, 2), F(1, 3), 0.137]
COEFFS = {-2: 0.3 - 0.1j, 0: 1.0, 1: -0.4 + 0.7j, 3: 0.2j}


def packet_value(r, phi):
    return sum(c * r ** abs(m) * math.exp(-r * r / 2) * cmath.exp(1j * m * phi) for m, c in COEFFS.items())


def wrap_oracle(x):
    return x - 2 * math.pi * math.floor(x / (2 * math.pi))


def v_value(s, r, chi):
    """Oracle: the defining formula of V Psi at any covering angle chi."""
    return cmath.exp(-2j * float(s) * chi) * packet_value(r, wrap_oracle(2 * chi))


def packet(grid):
    samples = [[packet_value(r, phi) for phi in grid.phi] for r in grid.radial_nodes]
    return PlaneWaveFunction(grid, samples)


@pytest.fixture
def grid():
    return trapezoid_grid(16, 6)


@pytest.fixture
def rng():
    return np.random.default_rng(1234)


def test_grid_validation():
    with pytest.raises(ValueError):
        PolarGridSpec(3, [1.0], [1.0])
    with pytest.raises(ValueError):
        PolarGridSpec(0, [1.0], [1.0])
    with pytest.raises(ValueError):
        PolarGridSpec(4, [1.0, 0.5], [1.0, 1.0])
    with pytest.raises(ValueError):
        PolarGridSpec(4, [0.0, 1.0], [1.0, 1.0])
    with pytest.raises(ValueError):
        PolarGridSpec(4, [1.0], [-1.0])
    g = trapezoid_grid(2, 1)
    assert g.shape == (1, 2)
    with pytest.raises(ValueError):
        PlaneWaveFunction(g, np.zeros((2, 2)))


def test_trapezoid_weights():
    g = trapezoid_grid(4, 5, 1.0, 3.0)
    assert np.allclose(g.radial_nodes, [1.0, 1.5, 2.0, 2.5, 3.0])
    assert np.allclose(g.radial_weights, [0.25, 0.5, 0.5, 0.5, 0.25])


@pytest.mark.parametrize(
    "xi, expected",
    [(3 * math.pi, math.pi), (-math.pi / 2, 3 * math.pi / 2), (2 * math.pi, 0.0), (0.0, 0.0)],
)
def test_gauss_wrap(xi, expected):
    assert gauss_wrap(xi) == pytest.approx(expected, abs=1e-15)


@given(st.floats(-1e6, 1e6))
def test_gauss_wrap_range(xi):
    w = gauss_wrap(xi)
    assert 0 <= w < 2 * math.pi
    k = (xi - w) / (2 * math.pi)
    assert abs(k - round(k)) < 1e-6


def test_rotate_plane_examples(grid, rng):
    psi = random_plane(grid, rng)
    assert np.array_equal(rotate_plane(psi, 0, F(1, 3)).samples, psi.samples)
    assert np.array_equal(rotate_plane(psi, grid.M, 0).samples, psi.samples)
    assert np.allclose(rotate_plane(psi, grid.M, F(1, 2)).samples, -psi.samples, atol=0)
    # index shift matches (j - k) mod M
    out = rotate_plane(psi, 3, 0).samples
    assert np.array_equal(out[:, 3], psi.samples[:, 0])


def test_rotate_relative_examples(grid, rng):
    kappa = phase_from_turns(F(1, 3))
    phi = RelativeWaveFunction(grid, kappa, random_plane(grid, rng).samples)
    assert np.array_equal(rotate_relative(phi, 0).samples, phi.samples)
    assert np.allclose(rotate_relative(phi, grid.M).samples, complex(kappa) * phi.samples, atol=1e-15)
    assert np.allclose(rotate_relative(phi, 2 * grid.M).samples, complex(kappa) ** 2 * phi.samples, atol=1e-15)
    assert np.allclose(rotate_relative(phi, -grid.M).samples, phi.samples / complex(kappa), atol=1e-15)


def test_angle_entry_points(grid, rng):
    psi = random_plane(grid, rng)
    out = rotate_plane_by_angle(psi, 2 * math.pi * 3 / grid.M, F(1, 2))
    assert np.array_equal(out.samples, rotate_plane(psi, 3, F(1, 2)).samples)
    with pytest.raises(NotGridAligned):
        rotate_plane_by_angle(psi, 0.1, 0)
    phi = intertwiner_V(psi, F(1, 2))
    assert np.array_equal(
        rotate_relative_by_angle(phi, math.pi).samples, rotate_relative(phi, grid.M).samples
    )
    with pytest.raises(NotGridAligned):
        rotate_relative_by_angle(phi, 0.1)


@pytest.mark.parametrize("k1, k2", [(1, 2), (-5, 17), (16, 16), (-33, 4)])
@pytest.mark.parametrize("s", SPINS)
def test_rotation_composition(grid, rng, k1, k2, s):
    psi = random_plane(grid, rng)
    twice = rotate_plane(rotate_plane(psi, k1, s), k2, s).samples
    assert np.allclose(twice, rotate_plane(psi, k1 + k2, s).samples, atol=1e-14)
    phi = intertwiner_V(psi, s)
    twice = rotate_relative(rotate_relative(phi, k1), k2).samples
    assert np.allclose(twice, rotate_relative(phi, k1 + k2).samples, atol=1e-14)


def test_intertwiner_examples(grid, rng):
    psi = random_plane(grid, rng)
    out = intertwiner_V(psi, 0)
    assert np.array_equal(out.samples, psi.samples)
    assert out.kappa == phase_from_turns(0)

    ones = PlaneWaveFunction(grid, np.ones(grid.shape))
    out = intertwiner_V(ones, F(1, 2))
    assert out.kappa == phase_from_turns(F(1, 2))
    expected = [[cmath.exp(-1j * chi) for chi in grid.chi]] * grid.K
    assert np.allclose(out.samples, expected, atol=1e-15)

    assert norm_relative(intertwiner_V(psi, F(1, 3))) == pytest.approx(norm_plane(psi), rel=1e-14)


@pytest.mark.parametrize("s", SPINS)
def test_adjoint(grid, rng, s):
    psi = random_plane(grid, rng)
    assert np.allclose(intertwiner_V_adjoint(intertwiner_V(psi, s), s).samples, psi.samples, atol=1e-14, rtol=0)
    phi = RelativeWaveFunction(grid, phase_from_turns(s), random_plane(grid, rng).samples)
    assert np.allclose(intertwiner_V(intertwiner_V_adjoint(phi, s), s).samples, phi.samples, atol=1e-14, rtol=0)
    with pytest.raises(KappaMismatch):
        intertwiner_V_adjoint(phi, 0.25 if s != 0.25 else 0)


def test_adjoint_is_hilbert_adjoint(grid, rng):
    s = F(1, 3)
    psi = random_plane(grid, rng)
    phi = RelativeWaveFunction(grid, phase_from_turns(s), random_plane(grid, rng).samples)
    lhs = inner_relative(intertwiner_V(psi, s), phi)
    rhs = inner_plane(psi, intertwiner_V_adjoint(phi, s))
    assert abs(lhs - rhs) < 1e-12 * norm_plane(psi) * norm_relative(phi)


def test_inner_plane(grid, rng):
    a, b = random_plane(grid, rng), random_plane(grid, rng)
    assert inner_plane(a, a).real > 0 and abs(inner_plane(a, a).imag) < 1e-12
    zero = PlaneWaveFunction(grid, np.zeros(grid.shape))
    assert inner_plane(zero, zero) == 0
    ones = PlaneWaveFunction(grid, np.ones(grid.shape))
    expected = 2 * math.pi * sum(w * r for w, r in zip(grid.radial_weights, grid.radial_nodes))
    assert inner_plane(ones, ones) == pytest.approx(expected, rel=1e-14)
    assert inner_plane(a, b) == pytest.approx(inner_plane(b, a).conjugate(), rel=1e-14)
    with pytest.raises(GridMismatch):
        inner_plane(a, PlaneWaveFunction(trapezoid_grid(16, 7), np.ones((7, 16))))


def test_inner_relative(grid, rng):
    s = F(1, 2)
    phi = intertwiner_V(random_plane(grid, rng), s)
    assert inner_relative(phi, phi).real >= 0
    for k in (-40, -16, -3, 0, 1, 16, 31):
        assert norm_relative(rotate_relative(phi, k)) == pytest.approx(norm_relative(phi), rel=1e-14)
    other = RelativeWaveFunction(grid, phase_from_turns(0), phi.samples)
    with pytest.raises(KappaMismatch):
        inner_relative(phi, other)


def test_packet_norm_approximates_continuum():
    # ∫ |e^{-r^2/2}|^2 r dr dphi over r > 0 equals π
    g = trapezoid_grid(8, 2001, 1e-6, 12.0)
    assert norm_plane(gaussian_packet(g, 0)) ** 2 == pytest.approx(math.pi, rel=1e-5)


@pytest.mark.parametrize("s", SPINS)
@pytest.mark.parametrize("k", [-33, -16, -5, 0, 1, 7, 16, 17, 32, 40])
def test_intertwining_against_pointwise_oracle(s, k):
    g = trapezoid_grid(16, 5)
    psi = packet(g)
    M = g.M
    theta = math.pi * k / M
    lhs = rotate_relative(intertwiner_V(psi, s), k).samples
    rhs = intertwiner_V(rotate_plane(psi, k, s), s).samples
    lhs_oracle = np.array([[v_value(s, r, chi - theta) for chi in g.chi] for r in g.radial_nodes])
    rhs_oracle = np.array(
        [
            [
                cmath.exp(-2j * float(s) * chi) * cmath.exp(1j * float(s) * 2 * theta) * packet_value(r, phi - 2 * theta)
                for chi, phi in zip(g.chi, g.phi)
            ]
            for r in g.radial_nodes
        ]
    )
    assert np.allclose(lhs, lhs_oracle, atol=1e-12, rtol=0)
    assert np.allclose(rhs, rhs_oracle, atol=1e-12, rtol=0)
    assert intertwining_residual(psi, k, s) < 1e-10


def test_intertwining_residual_examples(grid, rng):
    psi = random_packet_mixture(grid, rng)
    assert intertwining_residual(psi, 0, F(1, 2)) == 0
    for k in range(-2 * grid.M, 2 * grid.M + 1):
        assert intertwining_residual(psi, k, F(1, 2)) < 1e-10
    kappa = complex(phase_from_turns(F(1, 2)))
    v = intertwiner_V(psi, F(1, 2))
    assert np.allclose(rotate_relative(v, grid.M).samples, kappa * v.samples, atol=1e-14)
    assert np.allclose(
        intertwiner_V(rotate_plane(psi, grid.M, F(1, 2)), F(1, 2)).samples, kappa * v.samples, atol=1e-14
    )


def test_roundtrip_examples(grid, rng):
    psi = random_packet_mixture(grid, rng)
    assert theorem1_roundtrip_residual(psi, 0, F(1, 3)) < 1e-14
    assert theorem1_roundtrip_residual(psi, 1, F(1, 3)) < 1e-10
    assert theorem1_roundtrip_residual(psi, 2 * grid.M, F(1, 3)) < 1e-10
    assert theorem1_roundtrip_residual(psi, 2 * grid.M, 0.137) < 1e-10


def test_equivariance_defect(grid):
    psi = gaussian_packet(grid, 1)
    n = norm_plane(psi)
    assert equivariance_defect(psi, F(1, 2), phase_from_turns(F(1, 2))) < 1e-12 * n
    assert equivariance_defect(psi, 0, phase_from_turns(0)) < 1e-12 * n
    # |kappa_true - kappa_claim| * ||Psi|| = |-1 - 1| * ||Psi||
    assert equivariance_defect(psi, F(1, 2), phase_from_turns(0)) == pytest.approx(2 * n, rel=1e-12)


@pytest.mark.parametrize("s", [0, F(1, 4), F(1, 2), F(1, 3), 0.137])
@pytest.mark.parametrize("claim", [0, F(1, 4), F(1, 2), F(3, 4), 0.137])
def test_equivariance_defect_formula(s, claim):
    g = trapezoid_grid(8, 4)
    psi = gaussian_packet(g, 0)
    expected = abs(complex(phase_from_turns(s)) - complex(phase_from_turns(claim))) * norm_plane(psi)
    assert equivariance_defect(psi, s, phase_from_turns(claim)) == pytest.approx(expected, abs=1e-12)


grids = st.builds(
    trapezoid_grid,
    M=st.integers(1, 16).map(lambda m: 2 * m),
    K=st.integers(1, 8),
)


@settings(max_examples=60, deadline=None)
@given(grids, st.integers(0, 2**32 - 1), st.sampled_from(SPINS), st.integers(-64, 64))
def test_properties_on_random_grids(g, seed, s, k):
    rng = np.random.default_rng(seed)
    a, b = random_plane(g, rng), random_plane(g, rng)
    va, vb = intertwiner_V(a, s), intertwiner_V(b, s)
    assert abs(inner_relative(va, vb) - inner_plane(a, b)) <= 1e-12 * norm_plane(a) * norm_plane(b)
    assert norm_plane(rotate_plane(a, k, s)) == pytest.approx(norm_plane(a), rel=1e-13)
    assert norm_relative(rotate_relative(va, k)) == pytest.approx(norm_relative(va), rel=1e-13)
    assert intertwining_residual(a, k, s) < 1e-10
    assert theorem1_roundtrip_residual(a, k, s) < 1e-10
    assert np.allclose(rotate_relative(va, g.M).samples, complex(va.kappa) * va.samples, atol=1e-12, rtol=0)
