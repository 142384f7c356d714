"""Brute-force ground truth for the closed forms, at desk scale.

Words are tuples over {1, 2, 3}. Nothing in this module calls into
:mod:`colorful_necklaces.counts`; orbits and fixed points are found by
enumerating words and acting on them explicitly.
"""
from __future__ import annotations

from functools import lru_cache

from .group import GroupElement, GroupKind, S3Perm
from .number_theory import divisors, require_positive

DEFAULT_CAP = 16

Word = tuple[int, ...]


class CapExceededError(ValueError):
    """Requested word length is above the enumeration cap."""


def _check_cap(n: int, cap: int) -> None:
    require_positive(n)
    if n > cap:
        raise CapExceededError(f"n={n} exceeds the enumeration cap {cap}")


def is_colorful(w: Word) -> bool:
    n = len(w)
    return n >= 1 and all(w[i] != w[(i + 1) % n] for i in range(n))


@lru_cache(maxsize=None)
def _enumerate(n: int) -> tuple[Word, ...]:
    out: list[Word] = []
    prefix = [0] * n

    def extend(i: int) -> None:
        if i == n:
            if prefix[-1] != prefix[0]:
                out.append(tuple(prefix))
            return
        for color in (1, 2, 3):
            if i == 0 or color != prefix[i - 1]:
                prefix[i] = color
                extend(i + 1)

    if n > 1:
        extend(0)
    return tuple(out)


def enumerate_colorful(n: int, cap: int = DEFAULT_CAP) -> list[Word]:
    """All colorful words of length ``n`` in lexicographic order."""
    _check_cap(n, cap)
    return list(_enumerate(n))


def _action(g: GroupElement):
    sigma = (0,) + g.sigma.value
    pos = g.positions()
    return lambda w: tuple([sigma[w[j]] for j in pos])


def apply(g: GroupElement, w: Word) -> Word:
    if len(w) != g.n:
        raise ValueError(f"word of length {len(w)} acted on by an element for n={g.n}")
    return _action(g)(w)


# Canonical forms work on strings: rotations become slices of the doubled
# string and recolorings become str.translate, both done in C.
_RECOLOR = [str.maketrans("123", "".join(map(str, p.value))) for p in S3Perm]


def canonical_form(w: Word, kind: GroupKind) -> str:
    """Lexicographically least image of ``w`` under the whole group, as a string."""
    n = len(w)
    base = "".join(map(str, w))
    variants = [base.translate(t) for t in _RECOLOR]
    if kind is GroupKind.DIHEDRAL:
        variants += [v[::-1] for v in variants]
    best = base
    for v in variants:
        vv = v + v
        m = min(vv[k:k + n] for k in range(n))
        if m < best:
            best = m
    return best


def orbit_count(n: int, kind: GroupKind, cap: int = DEFAULT_CAP) -> int:
    _check_cap(n, cap)
    return len({canonical_form(w, kind) for w in _enumerate(n)})


def fixed_point_scan(n: int, g: GroupElement, cap: int = DEFAULT_CAP) -> int:
    _check_cap(n, cap)
    act = _action(g)
    return sum(1 for w in _enumerate(n) if act(w) == w)


def minimal_period(w: Word) -> int:
    n = len(w)
    for d in divisors(n):
        if all(w[i] == w[(i + d) % n] for i in range(n)):
            return d
    return n  # unreachable: d = n always qualifies


def exact_period_scan(n: int, kind: GroupKind, cap: int = DEFAULT_CAP) -> int:
    """Orbit count restricted to words of minimal period exactly ``n``."""
    _check_cap(n, cap)
    return len({canonical_form(w, kind) for w in _enumerate(n) if minimal_period(w) == n})
