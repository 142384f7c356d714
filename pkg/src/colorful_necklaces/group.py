"""Color permutations and the groups acting on cyclic 3-colored words.

A group element is a triple ``(sigma, eps, shift)`` for a fixed word length
``n``. It acts on a word ``w`` (positions ``0..n-1``) by

    apply(g, w)[i] = sigma(w[(-1)**eps * (i + shift) mod n])

that is, ``w`` is replaced by ``sigma o w o r**eps o s**shift`` where
``s(i) = i + 1`` and ``r(i) = -i``. With this convention the words fixed by
``g`` are exactly the ``f`` with ``f = sigma o f o r**eps o s**shift``, so
fixed-point counts computed by scanning line up element by element with the
closed forms in :mod:`colorful_necklaces.counts`.

The product that makes this a left action is

    (s1, e1, l1) * (s2, e2, l2) = (s1 o s2, e1 xor e2, l1 + (-1)**e1 * l2).
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterator

from .number_theory import require_positive


class CycleType(enum.Enum):
    IDENTITY = "identity"
    TRANSPOSITION = "transposition"
    THREE_CYCLE = "three-cycle"


class S3Perm(enum.Enum):
    """The six permutations of the colors {1, 2, 3}; value = (image of 1, 2, 3)."""

    ID = (1, 2, 3)
    T12 = (2, 1, 3)
    T13 = (3, 2, 1)
    T23 = (1, 3, 2)
    C = (2, 3, 1)  # 1 -> 2 -> 3 -> 1
    C2 = (3, 1, 2)

    def __call__(self, color: int) -> int:
        return self.value[color - 1]

    def compose(self, other: S3Perm) -> S3Perm:
        """``self o other`` (apply ``other`` first)."""
        return S3Perm(tuple(self(other(x)) for x in (1, 2, 3)))

    def inverse(self) -> S3Perm:
        inv = [0, 0, 0]
        for x in (1, 2, 3):
            inv[self(x) - 1] = x
        return S3Perm(tuple(inv))

    @property
    def cycle_type(self) -> CycleType:
        fixed = sum(self(x) == x for x in (1, 2, 3))
        if fixed == 3:
            return CycleType.IDENTITY
        if fixed == 1:
            return CycleType.TRANSPOSITION
        return CycleType.THREE_CYCLE

    @property
    def cli_name(self) -> str:
        return self.name.lower()

    @classmethod
    def from_name(cls, name: str) -> S3Perm:
        try:
            return cls[name.strip().upper()]
        except KeyError:
            valid = ", ".join(p.cli_name for p in cls)
            raise ValueError(f"unknown permutation {name!r}; expected one of {valid}") from None


class GroupKind(enum.Enum):
    ROTATIONS = "rotations"  # S3 x <s>, necklaces
    DIHEDRAL = "dihedral"  # S3 x <s, r>, bracelets

    def order(self, n: int) -> int:
        return (6 if self is GroupKind.ROTATIONS else 12) * n


@dataclass(frozen=True)
class GroupElement:
    n: int
    sigma: S3Perm = S3Perm.ID
    eps: int = 0
    shift: int = 0

    def __post_init__(self):
        require_positive(self.n)
        if self.eps not in (0, 1):
            raise ValueError(f"eps must be 0 or 1, got {self.eps}")
        object.__setattr__(self, "shift", self.shift % self.n)

    @classmethod
    def identity(cls, n: int) -> GroupElement:
        return cls(n)

    def __mul__(self, other: GroupElement) -> GroupElement:
        if other.n != self.n:
            raise ValueError(f"cannot multiply elements for n={self.n} and n={other.n}")
        sign = -1 if self.eps else 1
        return GroupElement(
            self.n,
            self.sigma.compose(other.sigma),
            self.eps ^ other.eps,
            self.shift + sign * other.shift,
        )

    def positions(self) -> list[int]:
        """Source index read by each output position under :func:`apply`."""
        sign = -1 if self.eps else 1
        return [(sign * (i + self.shift)) % self.n for i in range(self.n)]


def group_elements(n: int, kind: GroupKind) -> Iterator[GroupElement]:
    """All ``6n`` (rotations) or ``12n`` (dihedral) elements, in a fixed order."""
    require_positive(n)
    eps_values = (0,) if kind is GroupKind.ROTATIONS else (0, 1)
    for eps in eps_values:
        for sigma in S3Perm:
            for shift in range(n):
                yield GroupElement(n, sigma, eps, shift)
