"""Closed-form counts of colorful necklaces and bracelets in three colors.

A word is colorful when no two cyclically adjacent letters agree. Necklaces
identify words up to rotation and color permutation; bracelets additionally
allow reversal. Everything here is integer arithmetic; any division that a
formula promises to be exact goes through :func:`exact_div`.
"""
from __future__ import annotations

import enum
from fractions import Fraction
from math import gcd
from typing import NamedTuple

from .group import CycleType, GroupElement
from .number_theory import divisors, euler_phi, exact_div, moebius, nu3, require_positive


class Kind(enum.Enum):
    NECKLACE = "necklace"
    BRACELET = "bracelet"


def alpha(n: int) -> int:
    """Number of colorful words of length ``n``: ``2**n + 2*(-1)**n``."""
    require_positive(n)
    return 2**n + 2 * (-1) ** n


def chi(k: int) -> int:
    """Weight 1, 4, 3 or 6 according as gcd(k, 6) is 1, 2, 3 or 6."""
    require_positive(k, "k")
    return (1 + 3 * (k % 2 == 0) + 2 * (k % 3 == 0))


def fixed_points(n: int, g: GroupElement) -> int:
    """Number of colorful words of length ``n`` fixed by ``g``, by closed form.

    The color permutation is reduced to its cycle type (conjugate elements fix
    equally many words) and, for reflections, the shift to its parity.
    """
    require_positive(n)
    if g.n != n:
        raise ValueError(f"group element is for n={g.n}, not n={n}")
    ctype = g.sigma.cycle_type
    ell = g.shift

    if g.eps == 0:
        if ctype is CycleType.IDENTITY:
            return alpha(gcd(ell, n))
        if ctype is CycleType.THREE_CYCLE:
            if n % 3:
                return 0
            d = gcd(n // 3, ell)
            return 0 if (ell // d) % 3 == 0 else 2**d - (-1) ** d
        # transposition
        if n % 2:
            return 0
        d = gcd(n // 2, ell)
        return 0 if (ell // d) % 2 == 0 else 2**d

    odd_shift = ell % 2 == 1
    if ctype is CycleType.IDENTITY:
        if odd_shift or n % 2:
            return 0
        return 3 * 2 ** (n // 2)
    if ctype is CycleType.TRANSPOSITION:
        m = n // 2 + 1 if odd_shift else (n + 1) // 2
        return exact_div(alpha(m), 3)
    return 0


def _necklace_sum(n: int) -> int:
    """``sum over d | n of chi(n/d) * phi(n/d) * 2**d``; equals 6n times b_n."""
    return sum(chi(n // d) * euler_phi(n // d) * 2**d for d in divisors(n))


def correction_term(n: int) -> Fraction:
    """Gap between K(n) and the real number b_n: ``-1/3**(1+nu3(n))`` for odd n, else 0."""
    require_positive(n)
    if n % 2 == 0:
        return Fraction(0)
    return Fraction(-1, 3 ** (1 + nu3(n)))


def necklace_count(n: int) -> int:
    """K(n): colorful n-bead necklaces in at most three colors, up to color permutation."""
    require_positive(n)
    total = _necklace_sum(n)
    k = total // (6 * n)
    # floor form must agree with the exact form K = total/(6n) + correction
    if Fraction(total, 6 * n) + correction_term(n) != k:
        raise ArithmeticError(f"floor and exact forms of K({n}) disagree")
    return k


class NecklaceComponents(NamedTuple):
    identity: int  # A_n, fixed points summed over pure rotations
    transposition: int  # B_n, per transposition
    three_cycle: int  # C_n, per three-cycle


def necklace_count_components(n: int) -> NecklaceComponents:
    """The three Burnside divisor sums with K(n) = (A + 3B + 2C) / (6n)."""
    require_positive(n)
    a = sum(alpha(d) * euler_phi(n // d) for d in divisors(n))
    b = 0
    if n % 2 == 0:
        b = sum(2**d * euler_phi(n // d) for d in divisors(n // 2))
    c = 0
    if n % 3 == 0:
        c = sum((2**d - (-1) ** d) * euler_phi(n // d) for d in divisors(n // 3))
    return NecklaceComponents(a, b, c)


def reflection_term(n: int) -> int:
    """R(n) = 2K'(n) - K(n), the averaged contribution of the reflections."""
    require_positive(n)
    if n % 2 == 0:
        return 2 ** (n // 2 - 1)
    h = (n - 1) // 2
    return exact_div(2**h - (-1) ** h, 3)


def bracelet_count(n: int) -> int:
    """K'(n): colorful n-bead bracelets, up to rotation, reversal and color permutation."""
    return exact_div(necklace_count(n) + reflection_term(n), 2)


def _count(n: int, kind: Kind) -> int:
    return necklace_count(n) if Kind(kind) is Kind.NECKLACE else bracelet_count(n)


def exact_color_count(n: int, kind: Kind) -> int:
    """Classes using all three colors; the lone two-color class exists only for even n."""
    require_positive(n)
    return _count(n, kind) - (1 if n % 2 == 0 else 0)


def exact_period_count(n: int, kind: Kind) -> int:
    """Classes whose words have minimal period exactly ``n`` (Moebius inversion)."""
    require_positive(n)
    value = sum(moebius(n // d) * _count(d, kind) for d in divisors(n))
    if value < 0:
        raise ArithmeticError(f"negative exact-period count at n={n}")
    return value


def classical_necklace(n: int, c: int) -> int:
    """N(n, c): necklaces of n beads in at most c colors, up to rotation only."""
    require_positive(n)
    require_positive(c, "c")
    return exact_div(sum(euler_phi(d) * c ** (n // d) for d in divisors(n)), n)


def classical_reflection_term(n: int, c: int) -> int:
    require_positive(n)
    require_positive(c, "c")
    if n % 2:
        return c ** ((n + 1) // 2)
    return exact_div((1 + c) * c ** (n // 2), 2)


def classical_bracelet(n: int, c: int) -> int:
    """N'(n, c): bracelets of n beads in at most c colors."""
    return exact_div(classical_necklace(n, c) + classical_reflection_term(n, c), 2)


class SequenceKind(enum.Enum):
    ALPHA = "alpha"
    NECKLACE = "necklace"
    BRACELET = "bracelet"
    NECKLACE_EXACT_COLORS = "necklace-exact-colors"
    BRACELET_EXACT_COLORS = "bracelet-exact-colors"
    NECKLACE_EXACT_PERIOD = "necklace-exact-period"
    BRACELET_EXACT_PERIOD = "bracelet-exact-period"
    CLASSICAL_NECKLACE = "classical-necklace"
    CLASSICAL_BRACELET = "classical-bracelet"

    @property
    def needs_colors(self) -> bool:
        return self in (SequenceKind.CLASSICAL_NECKLACE, SequenceKind.CLASSICAL_BRACELET)


SEQUENCE_ALIASES = {
    "K": SequenceKind.NECKLACE,
    "K'": SequenceKind.BRACELET,
    "K*": SequenceKind.NECKLACE_EXACT_COLORS,
    "K'*": SequenceKind.BRACELET_EXACT_COLORS,
    "K~": SequenceKind.NECKLACE_EXACT_PERIOD,
    "K'~": SequenceKind.BRACELET_EXACT_PERIOD,
    "N": SequenceKind.CLASSICAL_NECKLACE,
    "N'": SequenceKind.CLASSICAL_BRACELET,
}


def parse_sequence_kind(name: str) -> SequenceKind:
    name = name.strip()
    if name in SEQUENCE_ALIASES:
        return SEQUENCE_ALIASES[name]
    try:
        return SequenceKind(name)
    except ValueError:
        valid = ", ".join([k.value for k in SequenceKind] + list(SEQUENCE_ALIASES))
        raise ValueError(f"unknown sequence kind {name!r}; expected one of {valid}") from None


def sequence_value(kind: SequenceKind, n: int, colors: int | None = None) -> int:
    if kind.needs_colors:
        if colors is None:
            raise ValueError(f"{kind.value} requires a number of colors")
        fn = classical_necklace if kind is SequenceKind.CLASSICAL_NECKLACE else classical_bracelet
        return fn(n, colors)
    if colors is not None:
        raise ValueError(f"{kind.value} is fixed to three colors; --colors does not apply")
    dispatch = {
        SequenceKind.ALPHA: alpha,
        SequenceKind.NECKLACE: necklace_count,
        SequenceKind.BRACELET: bracelet_count,
        SequenceKind.NECKLACE_EXACT_COLORS: lambda m: exact_color_count(m, Kind.NECKLACE),
        SequenceKind.BRACELET_EXACT_COLORS: lambda m: exact_color_count(m, Kind.BRACELET),
        SequenceKind.NECKLACE_EXACT_PERIOD: lambda m: exact_period_count(m, Kind.NECKLACE),
        SequenceKind.BRACELET_EXACT_PERIOD: lambda m: exact_period_count(m, Kind.BRACELET),
    }
    return dispatch[kind](n)
