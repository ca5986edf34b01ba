"""Braid-group statistics phases and a sampled spin-statistics intertwiner."""

from .braids import (
    BraidWord,
    GeneratorLetter,
    LabeledConfiguration,
    Permutation,
    apply_relation_move,
    cluster_exchange,
    compose,
    exponent_sum,
    free_reduce,
    full_twist,
    inverse,
    make_braid_word,
    permute_configuration,
    underlying_permutation,
)
from .phases import (
    Phase,
    SpinAssignment,
    composite_spin_statistics,
    composite_statistics_phase,
    d_n_two_pi,
    phase_from_turns,
    phase_pow,
    rotation_phase,
    scalar_rep,
    spin_statistics_single,
)

__version__ = "0.1.0"
