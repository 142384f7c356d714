"""Exact integer primitives: divisors, totient, Moebius, 3-adic valuation.

Inputs are small indices (a few thousand at most), so plain trial division
is used throughout. Every function is pure and returns Python ints.
"""
from __future__ import annotations

from math import isqrt


class InexactDivisionError(ArithmeticError):
    """A division that a closed formula guarantees to be exact left a remainder."""


def require_positive(n: int, name: str = "n") -> int:
    if isinstance(n, bool) or not isinstance(n, int):
        raise TypeError(f"{name} must be an int, got {type(n).__name__}")
    if n < 1:
        raise ValueError(f"{name} must be a positive integer, got {n}")
    return n


def exact_div(a: int, b: int) -> int:
    q, r = divmod(a, b)
    if r:
        raise InexactDivisionError(f"{a} is not divisible by {b}")
    return q


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of ``n`` as ``{prime: exponent}``; ``{}`` for 1."""
    require_positive(n)
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def divisors(n: int) -> list[int]:
    """All positive divisors of ``n`` in increasing order."""
    require_positive(n)
    small, large = [], []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
    return small + large[::-1]


def euler_phi(n: int) -> int:
    result = n
    for p in factorize(n):
        result -= result // p
    return result


def moebius(n: int) -> int:
    fac = factorize(n)
    if any(e > 1 for e in fac.values()):
        return 0
    return -1 if len(fac) % 2 else 1


def nu3(n: int) -> int:
    """Exponent of the largest power of 3 dividing ``n``."""
    require_positive(n)
    e = 0
    while n % 3 == 0:
        n //= 3
        e += 1
    return e


def signed_phi_divisor_sum(n: int) -> int:
    """Literal sum of ``(-1)**d * phi(n // d)`` over the divisors ``d`` of ``n``.

    Deliberately evaluated term by term; the closed value (0 for even ``n``,
    ``-n`` for odd ``n``) is checked by the test suite, not assumed here.
    """
    return sum((-1) ** d * euler_phi(n // d) for d in divisors(n))
