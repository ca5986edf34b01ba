"""Braid words on n strands and the symmetric-group data they carry.

A braid word is a sequence of signed Artin generators. Words are kept
unreduced; :func:`free_reduce` and :func:`apply_relation_move` are explicit
rewriting steps, and :func:`exponent_sum` / :func:`underlying_permutation`
are the invariants they preserve.

Permutations act on labeled configurations from the right::

    (y p)[i] = y[p(i)]

so ``(y p) q == y (p q)`` requires ``(p q)(i) == p(q(i))``. The product
``p * q`` below follows that rule, and :func:`underlying_permutation` is a
homomorphism with respect to it.
"""

from __future__ import annotations

import dataclasses
from typing import Iterable, Literal, Sequence

from .errors import (
    IndexOutOfRange,
    InvalidStrandCount,
    LengthMismatch,
    MoveNotApplicable,
    StrandMismatch,
)

_SUBSCRIPTS = str.maketrans("0123456789", "₀₁₂₃₄₅₆₇₈₉")

MoveKind = Literal["braid", "far_commute"]


@dataclasses.dataclass(frozen=True)
class GeneratorLetter:
    """``σ_index`` (sign +1, counterclockwise exchange) or its inverse (sign -1)."""

    index: int
    sign: int = 1

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign!r}")
        if self.index < 1:
            raise IndexOutOfRange(f"generator index {self.index} < 1")

    def inverse(self) -> GeneratorLetter:
        return GeneratorLetter(self.index, -self.sign)

    def __str__(self) -> str:
        s = "σ" + str(self.index).translate(_SUBSCRIPTS)
        return s if self.sign == 1 else s + "⁻¹"


@dataclasses.dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[GeneratorLetter, ...] = ()

    def __post_init__(self):
        if self.strands < 1:
            raise InvalidStrandCount(f"strand count must be >= 1, got {self.strands}")
        object.__setattr__(self, "letters", tuple(self.letters))
        for letter in self.letters:
            if not 1 <= letter.index <= self.strands - 1:
                raise IndexOutOfRange(
                    f"generator σ{letter.index} not in B_{self.strands} "
                    f"(valid indices 1..{self.strands - 1})"
                )

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __mul__(self, other: BraidWord) -> BraidWord:
        return compose(self, other)

    def __str__(self) -> str:
        if not self.letters:
            return "e"
        return "".join(str(l) for l in self.letters)

    def to_ints(self) -> list[int]:
        """Signed-integer form, e.g. ``σ₁σ₂⁻¹ -> [1, -2]``."""
        return [l.index * l.sign for l in self.letters]


def make_braid_word(n: int, letters: Iterable[tuple[int, int]] = ()) -> BraidWord:
    """Build a validated word in B_n from ``(index, sign)`` pairs."""
    return BraidWord(n, tuple(GeneratorLetter(i, s) for i, s in letters))


def compose(w1: BraidWord, w2: BraidWord) -> BraidWord:
    if w1.strands != w2.strands:
        raise StrandMismatch(f"cannot compose B_{w1.strands} with B_{w2.strands}")
    return BraidWord(w1.strands, w1.letters + w2.letters)


def inverse(w: BraidWord) -> BraidWord:
    return BraidWord(w.strands, tuple(l.inverse() for l in reversed(w.letters)))


def exponent_sum(w: BraidWord) -> int:
    """Signed crossing count; the abelianization B_n -> Z."""
    return sum(l.sign for l in w.letters)


def free_reduce(w: BraidWord) -> BraidWord:
    stack: list[GeneratorLetter] = []
    for letter in w.letters:
        if stack and stack[-1].index == letter.index and stack[-1].sign == -letter.sign:
            stack.pop()
        else:
            stack.append(letter)
    return BraidWord(w.strands, tuple(stack))


def _move_rhs(
    letters: tuple[GeneratorLetter, ...], position: int, kind: str
) -> tuple[GeneratorLetter, ...] | None:
    if kind == "braid":
        window = letters[position:position + 3]
        if position < 0 or len(window) != 3:
            return None
        a, b, c = window
        if a != c or abs(a.index - b.index) != 1 or not a.sign == b.sign == c.sign:
            return None
        return (b, a, b)
    if kind == "far_commute":
        window = letters[position:position + 2]
        if position < 0 or len(window) != 2:
            return None
        a, b = window
        if abs(a.index - b.index) < 2:
            return None
        return (b, a)
    raise ValueError(f"unknown move kind {kind!r}")


def apply_relation_move(w: BraidWord, position: int, kind: MoveKind) -> BraidWord:
    """Rewrite ``w`` at ``position`` (0-based) by a defining relation of B_n.

    ``braid``: ``σ_i σ_j σ_i -> σ_j σ_i σ_j`` for ``|i - j| = 1``, all three
    letters of the same sign. ``far_commute``: ``σ_i^a σ_j^b -> σ_j^b σ_i^a``
    for ``|i - j| >= 2``.
    """
    rhs = _move_rhs(w.letters, position, kind)
    if rhs is None:
        raise MoveNotApplicable(f"{kind} move does not match {w} at position {position}")
    width = len(rhs)
    return BraidWord(
        w.strands, w.letters[:position] + rhs + w.letters[position + width:]
    )


def applicable_moves(w: BraidWord) -> list[tuple[int, MoveKind]]:
    """All ``(position, kind)`` pairs accepted by :func:`apply_relation_move`."""
    out: list[tuple[int, MoveKind]] = []
    for pos in range(len(w.letters)):
        for kind in ("braid", "far_commute"):
            if _move_rhs(w.letters, pos, kind) is not None:
                out.append((pos, kind))
    return out


@dataclasses.dataclass(frozen=True)
class Permutation:
    """A bijection of ``{1, ..., n}`` stored as its image sequence."""

    images: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(int(v) for v in self.images))
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"{self.images} is not a permutation of 1..{len(self.images)}")

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def transposition(cls, n: int, i: int, j: int) -> Permutation:
        images = list(range(1, n + 1))
        images[i - 1], images[j - 1] = images[j - 1], images[i - 1]
        return cls(tuple(images))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        # (p * q)(i) = p(q(i)), matching the right action on configurations
        if self.n != other.n:
            raise LengthMismatch(f"permutations of different degree {self.n} != {other.n}")
        return Permutation(tuple(self(other(i)) for i in range(1, self.n + 1)))

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for i, v in enumerate(self.images, start=1):
            inv[v - 1] = i
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return self.images == tuple(range(1, self.n + 1))

    def __str__(self) -> str:
        return "(" + ", ".join(f"{i}↦{v}" for i, v in enumerate(self.images, start=1)) + ")"


def underlying_permutation(w: BraidWord) -> Permutation:
    """Image of ``w`` in S_n, each ``σ_i^{±1}`` sent to the transposition (i i+1)."""
    perm = Permutation.identity(w.strands)
    for letter in w.letters:
        perm = perm * Permutation.transposition(w.strands, letter.index, letter.index + 1)
    return perm


def full_twist(n: int) -> BraidWord:
    """``(σ₁σ₂⋯σ_{n-1})^n``: the 2π rotation of n particles, n(n-1) crossings."""
    if n < 1:
        raise InvalidStrandCount(f"strand count must be >= 1, got {n}")
    run = [GeneratorLetter(i) for i in range(1, n)]
    return BraidWord(n, tuple(run * n))


def cluster_exchange(n: int) -> BraidWord:
    """Counterclockwise exchange of two clusters of n strands each, in B_{2n}.

    Positive word of n² letters: for k = 0..n-1 the run ``σ_{n-k} ⋯ σ_{2n-1-k}``.
    Its permutation swaps the blocks ``{1..n}`` and ``{n+1..2n}``.
    """
    if n < 1:
        raise InvalidStrandCount(f"cluster size must be >= 1, got {n}")
    letters = [
        GeneratorLetter(i)
        for k in range(n)
        for i in range(n - k, 2 * n - k)
    ]
    return BraidWord(2 * n, tuple(letters))


@dataclasses.dataclass(frozen=True)
class LabeledConfiguration:
    """n pairwise distinct labeled points in the plane."""

    points: tuple[tuple[float, float], ...]

    def __post_init__(self):
        pts = tuple((float(x), float(y)) for x, y in self.points)
        object.__setattr__(self, "points", pts)
        if len(set(pts)) != len(pts):
            raise ValueError("configuration points must be pairwise distinct")

    def __len__(self) -> int:
        return len(self.points)


def permute_configuration(y: LabeledConfiguration, p: Permutation) -> LabeledConfiguration:
    """Right action ``y p``: point i of the result is point ``p(i)`` of ``y``."""
    if len(y) != p.n:
        raise LengthMismatch(f"configuration of {len(y)} points, permutation of degree {p.n}")
    return LabeledConfiguration(tuple(y.points[p(i) - 1] for i in range(1, p.n + 1)))


def parse_word(n: int, text: Sequence[int] | str) -> BraidWord:
    """Build a word from signed integers, e.g. ``"1 -2 3"`` or ``[1, -2, 3]``."""
    if isinstance(text, str):
        text = [int(tok) for tok in text.replace(",", " ").split()]
    pairs = []
    for v in text:
        if v == 0:
            raise IndexOutOfRange("generator index 0 is not valid")
        pairs.append((abs(v), 1 if v > 0 else -1))
    return make_braid_word(n, pairs)
