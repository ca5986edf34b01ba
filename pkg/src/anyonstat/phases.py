"""Unit-modulus phases stored as turns, and the spin-statistics predicates.

A :class:`Phase` represents ``exp(2πi * turns)``. Rational turns (``int``,
``Fraction`` or a ``"p/q"`` string) stay exact, so equality between phases
built from rationals is decided without rounding. A ``float`` gives an
inexact phase, compared with tolerance :data:`TURNS_TOL` on the circle.
"""

from __future__ import annotations

import cmath
import dataclasses
import math
from fractions import Fraction
from typing import Union

from .braids import BraidWord, cluster_exchange, exponent_sum, full_twist
from .errors import InvalidStrandCount

Turns = Union[int, Fraction, float]

TURNS_TOL = 1e-12


def as_turns(value: Turns | str) -> Fraction | float:
    """Coerce user input to exact ``Fraction`` or inexact ``float`` turns.

    Strings containing ``/`` or made only of digits are parsed exactly;
    decimal literals such as ``"0.137"`` become floats.
    """
    if isinstance(value, bool):
        raise TypeError("bool is not a valid number of turns")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        if not math.isfinite(value):
            raise ValueError(f"turns must be finite, got {value}")
        return value
    if isinstance(value, str):
        text = value.strip()
        if "/" in text or text.lstrip("+-").isdigit():
            return Fraction(text)
        return as_turns(float(text))
    raise TypeError(f"cannot interpret {value!r} as turns")


def _circle_distance(a: float, b: float) -> float:
    d = (a - b) % 1.0
    return min(d, 1.0 - d)


def is_integer(x: Fraction | float, tol: float = TURNS_TOL) -> bool:
    """Exact integrality for rationals, tolerance for floats."""
    if isinstance(x, Fraction):
        return x.denominator == 1
    return _circle_distance(float(x), 0.0) <= tol


@dataclasses.dataclass(frozen=True, eq=False)
class Phase:
    turns: Fraction | float

    def __post_init__(self):
        t = as_turns(self.turns)
        t = t % 1
        if isinstance(t, float) and t >= 1.0:
            t = 0.0
        object.__setattr__(self, "turns", t)

    @property
    def exact(self) -> bool:
        return isinstance(self.turns, Fraction)

    @property
    def value(self) -> complex:
        if self.exact:
            # exact quarter turns give exact complex values
            q = self.turns * 4
            if q.denominator == 1:
                return (1, 1j, -1, -1j)[int(q)]
        return cmath.exp(2j * math.pi * float(self.turns))

    def __complex__(self) -> complex:
        return complex(self.value)

    def __mul__(self, other: Phase) -> Phase:
        if not isinstance(other, Phase):
            return NotImplemented
        return Phase(self.turns + other.turns)

    def __truediv__(self, other: Phase) -> Phase:
        if not isinstance(other, Phase):
            return NotImplemented
        return Phase(self.turns - other.turns)

    def __pow__(self, m: int) -> Phase:
        return phase_pow(self, m)

    def conjugate(self) -> Phase:
        return Phase(-self.turns)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Phase):
            return NotImplemented
        if self.exact and other.exact:
            return self.turns == other.turns
        return _circle_distance(float(self.turns), float(other.turns)) <= TURNS_TOL

    __hash__ = None  # tolerance equality is not transitive

    def __str__(self) -> str:
        named = {Fraction(0): "+1", Fraction(1, 2): "-1", Fraction(1, 4): "+i", Fraction(3, 4): "-i"}
        if self.exact and self.turns in named:
            return f"turns {self.turns} ({named[self.turns]})"
        return f"turns {self.turns}"


def phase_from_turns(alpha: Turns | str) -> Phase:
    return Phase(alpha)


def phase_pow(k: Phase, m: int) -> Phase:
    return Phase(k.turns * int(m))


@dataclasses.dataclass(frozen=True)
class SpinAssignment:
    """Single-particle spin ``s`` and the n-particle rotation weight ``s_n``."""

    s: Fraction | float
    s_n: Fraction | float
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise InvalidStrandCount(f"particle number must be >= 1, got {self.n}")
        object.__setattr__(self, "s", as_turns(self.s))
        object.__setattr__(self, "s_n", as_turns(self.s_n))


def scalar_rep(w: BraidWord, kappa: Phase) -> Phase:
    """Scalar representation sending every generator to ``kappa``."""
    return phase_pow(kappa, exponent_sum(w))


def composite_statistics_phase(kappa: Phase, n: int) -> Phase:
    """Statistics phase ``kappa^(n^2)`` of a cluster of n identical particles."""
    if n < 1:
        raise InvalidStrandCount(f"particle number must be >= 1, got {n}")
    return phase_pow(kappa, n * n)


def rotation_phase(kappa: Phase, n: int) -> Phase:
    """Phase ``kappa^(n(n-1))`` picked up by n particles under a 2π rotation."""
    if n < 1:
        raise InvalidStrandCount(f"particle number must be >= 1, got {n}")
    return phase_pow(kappa, n * (n - 1))


def d_n_two_pi(sa: SpinAssignment, kappa: Phase) -> Phase:
    """``D_n(2π) = exp(2πi s_n) * kappa^(n(n-1))``."""
    return phase_from_turns(sa.s_n) * rotation_phase(kappa, sa.n)


def spin_statistics_single(s: Turns | str, kappa: Phase) -> bool:
    """True iff ``kappa == exp(2πi s)``."""
    return phase_from_turns(s) == kappa


def composite_spin_statistics(sa: SpinAssignment) -> bool:
    """True iff ``s_n - n s`` is an integer."""
    return is_integer(sa.s_n - sa.n * sa.s)


def certify_composite_phase(kappa: Phase, n: int) -> bool:
    """Closed form against the cluster-exchange braid."""
    return composite_statistics_phase(kappa, n) == scalar_rep(cluster_exchange(n), kappa)


def certify_rotation_phase(kappa: Phase, n: int) -> bool:
    """Closed form against the full-twist braid."""
    return rotation_phase(kappa, n) == scalar_rep(full_twist(n), kappa)
