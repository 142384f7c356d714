"""Tiny brute-force helpers, independent of both counts and oracle."""
from itertools import product

import pytest


def brute_colorful(n, colors=3):
    return [w for w in product(range(1, colors + 1), repeat=n)
            if all(w[i] != w[(i + 1) % n] for i in range(n))]


def brute_fixed(n, sigma, eps, shift):
    """Words f with f(i) = sigma(f((-1)**eps * (i + shift))) for all i."""
    sign = -1 if eps else 1
    return sum(
        1 for w in brute_colorful(n)
        if all(w[i] == sigma[w[(sign * (i + shift)) % n] - 1] for i in range(n))
    )


def brute_classes(n, colors, reflect):
    """Classical necklace/bracelet classes of all c-colored words (rotation, optional reversal)."""
    seen = set()
    for w in product(range(colors), repeat=n):
        images = [w[k:] + w[:k] for k in range(n)]
        if reflect:
            r = w[::-1]
            images += [r[k:] + r[:k] for k in range(n)]
        seen.add(min(images))
    return len(seen)


@pytest.fixture
def fresh_oracle():
    from colorful_necklaces import oracle
    oracle._enumerate.cache_clear()
    yield oracle
