"""Counting colorful necklaces and bracelets in three colors."""
from .counts import (
    Kind,
    SequenceKind,
    alpha,
    bracelet_count,
    chi,
    classical_bracelet,
    classical_necklace,
    correction_term,
    exact_color_count,
    exact_period_count,
    fixed_points,
    necklace_count,
    necklace_count_components,
    reflection_term,
)
from .group import GroupElement, GroupKind, S3Perm, group_elements
from .number_theory import divisors, euler_phi, moebius, nu3, signed_phi_divisor_sum

__version__ = "0.1.0"
