"""Exit criteria. Each test prints one PASS/FAIL line; tolerances are exact.

Run alone with ``pytest tests/test_acceptance.py -v``.
"""
import random
import time
from fractions import Fraction
from math import gcd

import pytest

from colorful_necklaces import counts, oracle
from colorful_necklaces.counts import Kind
from colorful_necklaces.group import GroupElement, GroupKind, group_elements
from colorful_necklaces.number_theory import divisors, euler_phi, nu3, signed_phi_divisor_sum
from colorful_necklaces.published import BRACELETS, NECKLACES


@pytest.fixture
def report(capsys):
    def emit(label, failures, elapsed=None, budget=None):
        over = budget is not None and elapsed >= budget
        ok = not failures and not over
        timing = f" [{elapsed:.2f}s / budget {budget:g}s]" if budget is not None else ""
        detail = f" first failure: {failures[0]}" if failures else (" over time budget" if over else "")
        with capsys.disabled():
            print(f"\n{'PASS' if ok else 'FAIL'} {label}{timing}{detail}")
        assert not failures, failures[:5]
        assert not over, f"{elapsed:.2f}s >= {budget}s"
    return emit


def is_prime(p):
    return p > 1 and all(p % q for q in range(2, int(p**0.5) + 1))


def test_ac01_necklace_table(report):
    t0 = time.perf_counter()
    got = [counts.necklace_count(n) for n in range(1, 41)]
    elapsed = time.perf_counter() - t0
    failures = [(n, g, e) for n, (g, e) in enumerate(zip(got, NECKLACES), start=1) if g != e]
    report("AC1 K(1..40) equals published table", failures, elapsed, 1.0)


def test_ac02_bracelet_table(report):
    t0 = time.perf_counter()
    got = [counts.bracelet_count(n) for n in range(1, 41)]
    elapsed = time.perf_counter() - t0
    failures = [(n, g, e) for n, (g, e) in enumerate(zip(got, BRACELETS), start=1) if g != e]
    report("AC2 K'(1..40) equals published table", failures, elapsed, 1.0)


def test_ac03_oracle_orbits(report):
    oracle._enumerate.cache_clear()
    t0 = time.perf_counter()
    failures = []
    for n in range(1, 15):
        if oracle.orbit_count(n, GroupKind.ROTATIONS) != counts.necklace_count(n):
            failures.append((n, "K"))
        if oracle.orbit_count(n, GroupKind.DIHEDRAL) != counts.bracelet_count(n):
            failures.append((n, "K'"))
    report("AC3 brute-force orbit counts equal K, K' for n=1..14", failures, time.perf_counter() - t0, 10.0)


def test_ac04_fixed_points_every_element(report):
    oracle._enumerate.cache_clear()
    t0 = time.perf_counter()
    failures = []
    checked = 0
    for n in range(1, 13):
        for g in group_elements(n, GroupKind.DIHEDRAL):
            checked += 1
            if oracle.fixed_point_scan(n, g) != counts.fixed_points(n, g):
                failures.append((n, g))
    assert checked == sum(12 * n for n in range(1, 13))
    report("AC4 scanned fixed points equal closed form, all 12n elements, n=1..12",
           failures, time.perf_counter() - t0, 10.0)


def test_ac05_signed_totient_sum(report):
    failures = [n for n in range(1, 501) if signed_phi_divisor_sum(n) != (0 if n % 2 == 0 else -n)]
    report("AC5 signed totient divisor sum is 0 (even) / -n (odd), n=1..500", failures)


def test_ac06_prime_formula(report):
    failures = []
    primes = [p for p in range(4, 98) if is_prime(p)]
    assert primes[0] == 5 and primes[-1] == 97
    for p in primes:
        q, r = divmod(2**p - 2, 6 * p)
        if r or counts.necklace_count(p) != q:
            failures.append(p)
    report("AC6 K(p) = (2^p - 2)/(6p) exactly for primes 3 < p <= 97", failures)


def test_ac07_coprime_to_six(report):
    failures = []
    for n in range(1, 501):
        if gcd(n, 6) == 1:
            q, r = divmod(counts.classical_necklace(n, 2) - 2, 6)
            if r or counts.necklace_count(n) != q:
                failures.append(n)
    report("AC7 K(n) = (N(n,2) - 2)/6 for gcd(n,6) = 1, n <= 500", failures)


def literal_epsilon(n):
    """eps_n straight from its defining divisor sums, before any simplification."""
    def signed(m):
        return sum((-1) ** d * euler_phi(n // d) for d in divisors(m))
    return Fraction(signed(n) - (signed(n // 3) if n % 3 == 0 else 0), 3 * n)


def test_ac08_floor_and_exact_forms(report):
    failures = []
    for n in range(1, 501):
        s = sum((1 + (d % 2 == 0 and d % 3 != 0)) * gcd(d, 6) * euler_phi(d) * 2 ** (n // d) for d in divisors(n))
        closed_eps = -Fraction(1, 3 ** (1 + nu3(n))) if n % 2 else Fraction(0)
        exact = Fraction(s, 6 * n) + closed_eps
        floor = s // (6 * n)
        if exact != floor or floor != counts.necklace_count(n):
            failures.append((n, "forms"))
        eps = literal_epsilon(n)
        if eps != closed_eps or not Fraction(-1, 3) <= eps <= 0:
            failures.append((n, "eps"))
    report("AC8 exact and floor forms of K agree, -1/3 <= eps_n <= 0, n=1..500", failures)


def test_ac09_bracelet_decomposition_and_parity(report):
    failures = []
    for n in range(1, 501):
        k, kb, r = counts.necklace_count(n), counts.bracelet_count(n), counts.reflection_term(n)
        if n % 2 == 0:
            expected_r = Fraction(2 ** (n // 2), 2)
        else:
            h = (n - 1) // 2
            expected_r = Fraction(2**h - (-1) ** h, 3)
        if 2 * kb - k != r or r != expected_r:
            failures.append((n, "R"))
        if n >= 3 and (r % 2 != n % 2 or k % 2 != n % 2):
            failures.append((n, "parity"))
    report("AC9 2K' - K = R(n), R and K have the parity of n for n=3..500", failures)


def test_ac10_coincidence_window(report):
    failures = [n for n in range(1, 9) if counts.necklace_count(n) != counts.bracelet_count(n)]
    failures += [n for n in range(9, 41) if not counts.bracelet_count(n) < counts.necklace_count(n)]
    report("AC10 K = K' for n=1..8 and K' < K for n=9..40", failures)


def test_ac11_moebius_round_trip(report):
    failures = []
    for kind, full, gk in ((Kind.NECKLACE, counts.necklace_count, GroupKind.ROTATIONS),
                           (Kind.BRACELET, counts.bracelet_count, GroupKind.DIHEDRAL)):
        for n in range(1, 101):
            parts = [counts.exact_period_count(d, kind) for d in divisors(n)]
            if any(p < 0 for p in parts) or sum(parts) != full(n):
                failures.append((kind.value, n, "round trip"))
        for n in range(1, 15):
            if oracle.exact_period_scan(n, gk) != counts.exact_period_count(n, kind):
                failures.append((kind.value, n, "oracle"))
    report("AC11 Moebius round trip n<=100, non-negative, oracle agreement n<=14", failures)


def test_ac12_group_action_laws(report):
    rng = random.Random(20261016)
    failures = []
    for n in range(1, 9):
        words = oracle.enumerate_colorful(n)
        elems = list(group_elements(n, GroupKind.DIHEDRAL))
        e = GroupElement.identity(n)
        for w in words:
            if oracle.apply(e, w) != w:
                failures.append((n, w, "identity"))
            for g in elems:
                if not oracle.is_colorful(oracle.apply(g, w)):
                    failures.append((n, w, g, "closure"))
        if not words:
            continue
        for _ in range(400):
            g, h, w = rng.choice(elems), rng.choice(elems), rng.choice(words)
            if oracle.apply(g, oracle.apply(h, w)) != oracle.apply(g * h, w):
                failures.append((n, g, h, w, "compatibility"))
    report("AC12 identity, compatibility and colorful closure of the action, n<=8", failures)
