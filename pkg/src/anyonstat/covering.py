"""Sampled wave functions on the plane and on the covered two-particle cone.

Both spaces share one polar grid: K radial nodes and M angular samples.
Plane samples sit at ``phi_j = 2πj/M`` on ``[0, 2π)``; relative samples sit
at ``chi_j = πj/M`` on the fundamental domain ``[0, π)`` of the covering
angle. Because ``2 chi_j = phi_j``, the intertwiner V is a diagonal phase on
samples and every identity checked here is exact up to roundoff.

A relative wave function is extended off the fundamental domain by
``Phi(r, chi + qπ) = kappa^(-q) Phi(r, chi)``, which is what makes the
relative rotation by π act as multiplication by ``kappa``.

Measures: plane ``r dr dphi``; cone ``2 r dr dchi`` on ``[0, π)`` so that the
substitution ``phi = 2 chi`` preserves norms.
"""

from __future__ import annotations

import dataclasses
import functools
import math
from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import GridMismatch, KappaMismatch, NotGridAligned
from .phases import Phase, Turns, as_turns, phase_from_turns, phase_pow

TWO_PI = 2.0 * math.pi


@dataclasses.dataclass(frozen=True, eq=False)
class PolarGridSpec:
    """Angular sample count ``M`` and a radial quadrature for ``∫ dr``.

    The ``r`` Jacobian is applied by the inner products, not folded into
    ``radial_weights``.
    """

    M: int
    radial_nodes: np.ndarray
    radial_weights: np.ndarray

    def __post_init__(self):
        nodes = np.asarray(self.radial_nodes, dtype=float).ravel()
        weights = np.asarray(self.radial_weights, dtype=float).ravel()
        if self.M < 2 or self.M % 2:
            raise ValueError(f"M must be even and >= 2, got {self.M}")
        if nodes.size < 1 or nodes.shape != weights.shape:
            raise ValueError("need K >= 1 radial nodes with one weight each")
        if np.any(nodes <= 0) or np.any(np.diff(nodes) <= 0):
            raise ValueError("radial nodes must be positive and strictly increasing")
        if np.any(weights <= 0):
            raise ValueError("radial weights must be positive")
        nodes.flags.writeable = False
        weights.flags.writeable = False
        object.__setattr__(self, "radial_nodes", nodes)
        object.__setattr__(self, "radial_weights", weights)

    @property
    def K(self) -> int:
        return self.radial_nodes.size

    @property
    def shape(self) -> tuple[int, int]:
        return (self.K, self.M)

    @property
    def phi(self) -> np.ndarray:
        return TWO_PI * np.arange(self.M) / self.M

    @property
    def chi(self) -> np.ndarray:
        return math.pi * np.arange(self.M) / self.M

    def same_as(self, other: PolarGridSpec) -> bool:
        return (
            self is other
            or (
                self.M == other.M
                and np.array_equal(self.radial_nodes, other.radial_nodes)
                and np.array_equal(self.radial_weights, other.radial_weights)
            )
        )


def trapezoid_grid(M: int, K: int, r_min: float = 0.05, r_max: float = 6.0) -> PolarGridSpec:
    """Composite trapezoid rule on ``[r_min, r_max]``; a single midpoint node if K == 1."""
    if K < 1:
        raise ValueError(f"K must be >= 1, got {K}")
    if K == 1:
        return PolarGridSpec(M, [0.5 * (r_min + r_max)], [r_max - r_min])
    nodes = np.linspace(r_min, r_max, K)
    h = (r_max - r_min) / (K - 1)
    weights = np.full(K, h)
    weights[[0, -1]] = h / 2
    return PolarGridSpec(M, nodes, weights)


def _checked_samples(grid: PolarGridSpec, samples) -> np.ndarray:
    arr = np.array(samples, dtype=complex)
    if arr.shape != grid.shape:
        raise ValueError(f"samples have shape {arr.shape}, grid expects {grid.shape}")
    arr.flags.writeable = False
    return arr


@dataclasses.dataclass(frozen=True, eq=False)
class PlaneWaveFunction:
    """``samples[i, j] = Psi(r_i, phi_j)``."""

    grid: PolarGridSpec
    samples: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "samples", _checked_samples(self.grid, self.samples))

    def __sub__(self, other: PlaneWaveFunction) -> PlaneWaveFunction:
        _require_same_grid(self.grid, other.grid)
        return PlaneWaveFunction(self.grid, self.samples - other.samples)


@dataclasses.dataclass(frozen=True, eq=False)
class RelativeWaveFunction:
    """``samples[i, j] = Phi(r_i, chi_j)`` on the fundamental domain, plus ``kappa``."""

    grid: PolarGridSpec
    kappa: Phase
    samples: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "samples", _checked_samples(self.grid, self.samples))

    def __sub__(self, other: RelativeWaveFunction) -> RelativeWaveFunction:
        _require_same_grid(self.grid, other.grid)
        _require_same_kappa(self.kappa, other.kappa)
        return RelativeWaveFunction(self.grid, self.kappa, self.samples - other.samples)

    def extended(self, j: np.ndarray | int) -> np.ndarray:
        """Samples at ``chi = πj/M`` for arbitrary integer j, via the extension rule."""
        j = np.asarray(j)
        q, j0 = np.divmod(j, self.grid.M)
        return kappa_powers(self.kappa, -q) * self.samples[:, j0]


def _require_same_grid(a: PolarGridSpec, b: PolarGridSpec) -> None:
    if not a.same_as(b):
        raise GridMismatch("wave functions live on different grids")


def _require_same_kappa(a: Phase, b: Phase) -> None:
    if a != b:
        raise KappaMismatch(f"statistics phases differ: {a} vs {b}")


def kappa_powers(kappa: Phase, exponents) -> np.ndarray:
    """``kappa ** e`` for an integer array ``e``, computed from exact turns."""
    exponents = np.asarray(exponents)
    if kappa.exact:
        uniq = np.unique(exponents)
        table = {int(e): complex(phase_pow(kappa, int(e))) for e in uniq}
        return np.vectorize(table.__getitem__, otypes=[complex])(exponents)
    turns = (float(kappa.turns) * exponents) % 1.0
    return np.exp(2j * math.pi * turns)


def gauss_wrap(xi):
    """``xi - 2π floor(xi / 2π)``, in ``[0, 2π)``."""
    out = xi - TWO_PI * np.floor(np.asarray(xi) / TWO_PI)
    out = np.where(out >= TWO_PI, out - TWO_PI, out)
    out = np.where(out < 0, 0.0, out)
    return float(out) if np.ndim(out) == 0 else out


def plane_index_for_angle(theta: float, M: int, tol: float = 1e-9) -> int:
    """Index shift k with ``theta == 2πk/M``; raises :class:`NotGridAligned` otherwise."""
    k = theta * M / TWO_PI
    if abs(k - round(k)) > tol:
        raise NotGridAligned(f"angle {theta} is not a multiple of 2π/{M}")
    return int(round(k))


def relative_index_for_angle(theta: float, M: int, tol: float = 1e-9) -> int:
    """Index shift k with ``theta == πk/M``; raises :class:`NotGridAligned` otherwise."""
    k = theta * M / math.pi
    if abs(k - round(k)) > tol:
        raise NotGridAligned(f"angle {theta} is not a multiple of π/{M}")
    return int(round(k))


def _mul_turns(s, theta_turns: Fraction) -> Phase:
    return Phase(as_turns(s) * theta_turns)


def rotate_plane(psi: PlaneWaveFunction, k: int, s: Turns | str) -> PlaneWaveFunction:
    """Single-particle rotation ``D_1(θ)`` with ``θ = 2πk/M``.

    ``(D_1(θ)Psi)(r, phi) = exp(i s θ) Psi(r, phi - θ)``.
    """
    M = psi.grid.M
    factor = complex(_mul_turns(s, Fraction(k, M)))
    return PlaneWaveFunction(psi.grid, factor * np.roll(psi.samples, k, axis=1))


def rotate_relative(phi: RelativeWaveFunction, k: int) -> RelativeWaveFunction:
    """Relative rotation ``(D_2^rel(θ)Phi)(r, chi) = Phi(r, chi - θ)`` with ``θ = πk/M``."""
    j = np.arange(phi.grid.M) - k
    return RelativeWaveFunction(phi.grid, phi.kappa, phi.extended(j))


def rotate_plane_by_angle(psi: PlaneWaveFunction, theta: float, s: Turns | str) -> PlaneWaveFunction:
    """:func:`rotate_plane` for an angle in radians; it must be a multiple of 2π/M."""
    return rotate_plane(psi, plane_index_for_angle(theta, psi.grid.M), s)


def rotate_relative_by_angle(phi: RelativeWaveFunction, theta: float) -> RelativeWaveFunction:
    """:func:`rotate_relative` for an angle in radians; it must be a multiple of π/M."""
    return rotate_relative(phi, relative_index_for_angle(theta, phi.grid.M))


def _v_phases(grid: PolarGridSpec, s: Turns | str) -> np.ndarray:
    return _v_phase_table(as_turns(s), grid.M)


@functools.lru_cache(maxsize=256)
def _v_phase_table(s: Fraction | float, M: int) -> np.ndarray:
    # exp(-2 i s chi_j) = exp(-2πi s j / M)
    table = np.array([complex(Phase(s * Fraction(-j, M))) for j in range(M)])
    table.flags.writeable = False
    return table


def intertwiner_V(psi: PlaneWaveFunction, s: Turns | str) -> RelativeWaveFunction:
    """``(V Psi)(r, chi) = exp(-2 i s chi) Psi(r, Λ(2 chi))`` with ``kappa = exp(2πi s)``."""
    return RelativeWaveFunction(
        psi.grid, phase_from_turns(s), _v_phases(psi.grid, s) * psi.samples
    )


def intertwiner_V_adjoint(phi: RelativeWaveFunction, s: Turns | str) -> PlaneWaveFunction:
    """``(V* Phi)(r, phi) = exp(i s phi) Phi(r, phi / 2)`` for ``phi`` in ``[0, 2π)``."""
    if phi.kappa != phase_from_turns(s):
        raise KappaMismatch(
            f"V* for spin {s} needs kappa = {phase_from_turns(s)}, got {phi.kappa}"
        )
    return PlaneWaveFunction(phi.grid, np.conj(_v_phases(phi.grid, s)) * phi.samples)


def _weighted_sum(grid: PolarGridSpec, a: np.ndarray, b: np.ndarray) -> complex:
    rw = grid.radial_weights * grid.radial_nodes
    return complex(np.sum(rw[:, None] * np.conj(a) * b))


def inner_plane(a: PlaneWaveFunction, b: PlaneWaveFunction) -> complex:
    """Quadrature of ``∫ conj(a) b r dr dphi`` over the plane."""
    _require_same_grid(a.grid, b.grid)
    return (TWO_PI / a.grid.M) * _weighted_sum(a.grid, a.samples, b.samples)


def inner_relative(a: RelativeWaveFunction, b: RelativeWaveFunction) -> complex:
    """Quadrature of ``∫ conj(a) b 2 r dr dchi`` over ``chi`` in ``[0, π)``."""
    _require_same_grid(a.grid, b.grid)
    _require_same_kappa(a.kappa, b.kappa)
    return 2.0 * (math.pi / a.grid.M) * _weighted_sum(a.grid, a.samples, b.samples)


def norm_plane(a: PlaneWaveFunction) -> float:
    return math.sqrt(max(inner_plane(a, a).real, 0.0))


def norm_relative(a: RelativeWaveFunction) -> float:
    return math.sqrt(max(inner_relative(a, a).real, 0.0))


def intertwining_residual(psi: PlaneWaveFunction, k: int, s: Turns | str) -> float:
    """``‖D_2^rel(θ) V Psi - V D_1(2θ) Psi‖`` with ``θ = πk/M``."""
    lhs = rotate_relative(intertwiner_V(psi, s), k)
    rhs = intertwiner_V(rotate_plane(psi, k, s), s)
    return norm_relative(lhs - rhs)


def theorem1_roundtrip_residual(psi: PlaneWaveFunction, k: int, s: Turns | str) -> float:
    """``‖D_1(-2θ) V* D_2^rel(θ) V Psi - Psi‖`` with ``θ = πk/M``."""
    moved = rotate_relative(intertwiner_V(psi, s), k)
    back = rotate_plane(intertwiner_V_adjoint(moved, s), -k, s)
    return norm_plane(back - psi)


def evaluate_V_formula(psi: PlaneWaveFunction, s: Turns | str, chi_index) -> np.ndarray:
    """Evaluate the defining formula of ``V Psi`` at ``chi = π j / M`` for any integers j.

    Uses the Gauss-bracket wrap of ``2 chi`` directly, with no reference to
    a statistics phase or extension rule.
    """
    M = psi.grid.M
    j = np.asarray(chi_index)
    wrapped = gauss_wrap(TWO_PI * j / M)
    plane_j = np.rint(np.asarray(wrapped) * M / TWO_PI).astype(int) % M
    phase = np.array(
        [complex(_mul_turns(s, Fraction(-int(jj), M))) for jj in np.ravel(j)]
    ).reshape(j.shape)
    return phase * psi.samples[:, plane_j]


def equivariance_defect(psi: PlaneWaveFunction, s: Turns | str, kappa_claim: Phase) -> float:
    """Mismatch between the true π-rotation of ``V Psi`` and the claimed statistics phase.

    ``V Psi`` is stamped with ``kappa_claim`` and rotated by π through the
    extension rule; the result is compared with the V formula evaluated at
    ``chi - π``, which carries the true phase ``exp(2πi s)``. Zero iff the
    claim is right (for nonzero Psi).
    """
    M = psi.grid.M
    stamped = RelativeWaveFunction(psi.grid, kappa_claim, intertwiner_V(psi, s).samples)
    claimed = rotate_relative(stamped, M)
    true = RelativeWaveFunction(
        psi.grid, kappa_claim, evaluate_V_formula(psi, s, np.arange(M) - M)
    )
    return norm_relative(claimed - true)


def gaussian_packet(grid: PolarGridSpec, m: int = 0) -> PlaneWaveFunction:
    """``r^|m| exp(-r^2/2) exp(i m phi)``: angular momentum m eigenmode."""
    r = grid.radial_nodes[:, None]
    return PlaneWaveFunction(
        grid, r ** abs(m) * np.exp(-r * r / 2) * np.exp(1j * m * grid.phi[None, :])
    )


def random_plane(grid: PolarGridSpec, rng: np.random.Generator) -> PlaneWaveFunction:
    """Standard complex Gaussian samples."""
    shape = grid.shape
    return PlaneWaveFunction(grid, rng.standard_normal(shape) + 1j * rng.standard_normal(shape))


def random_packet_mixture(
    grid: PolarGridSpec, rng: np.random.Generator, modes: Sequence[int] = range(-3, 4)
) -> PlaneWaveFunction:
    """Random complex combination of Gaussian packets."""
    total = np.zeros(grid.shape, dtype=complex)
    for m in modes:
        c = rng.standard_normal() + 1j * rng.standard_normal()
        total += c * gaussian_packet(grid, m).samples
    return PlaneWaveFunction(grid, total)
