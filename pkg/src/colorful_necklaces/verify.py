"""Cross-checks of the closed forms against brute force and published tables."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator

from . import counts, oracle, published
from .group import GroupKind, group_elements
from .number_theory import divisors, euler_phi, moebius, require_positive, signed_phi_divisor_sum


@dataclass(frozen=True)
class VerifyConfig:
    max_n: int = 14  # orbit and exact-period comparisons
    fixed_max_n: int = 12  # per-element fixed-point comparison
    identity_max_n: int = 500  # number-theoretic identities
    cap: int = oracle.DEFAULT_CAP

    def __post_init__(self):
        require_positive(self.max_n, "max_n")
        require_positive(self.fixed_max_n, "fixed_max_n")
        require_positive(self.identity_max_n, "identity_max_n")
        if self.max_n > self.cap:
            raise oracle.CapExceededError(f"max_n={self.max_n} exceeds the enumeration cap {self.cap}")


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.name}" + (f": {self.detail}" if self.detail else "")


def _closed(kind: GroupKind) -> Callable[[int], int]:
    return counts.necklace_count if kind is GroupKind.ROTATIONS else counts.bracelet_count


def check_orbits(cfg: VerifyConfig) -> CheckResult:
    for n in range(1, cfg.max_n + 1):
        for kind in GroupKind:
            brute = oracle.orbit_count(n, kind, cap=cfg.cap)
            closed = _closed(kind)(n)
            if brute != closed:
                return CheckResult("orbit counts", False, f"n={n} {kind.value}: scan {brute} != formula {closed}")
    return CheckResult("orbit counts", True, f"n=1..{cfg.max_n}, both groups")


def check_fixed_points(cfg: VerifyConfig) -> CheckResult:
    top = min(cfg.max_n, cfg.fixed_max_n)
    for n in range(1, top + 1):
        for g in group_elements(n, GroupKind.DIHEDRAL):
            brute = oracle.fixed_point_scan(n, g, cap=cfg.cap)
            closed = counts.fixed_points(n, g)
            if brute != closed:
                witness = f"n={n} g=({g.sigma.cli_name},{g.eps},{g.shift})"
                return CheckResult("fixed points", False, f"{witness}: scan {brute} != formula {closed}")
    return CheckResult("fixed points", True, f"n=1..{top}, every element of the dihedral group")


def check_exact_period(cfg: VerifyConfig) -> CheckResult:
    for n in range(1, cfg.max_n + 1):
        for kind, ck in ((GroupKind.ROTATIONS, counts.Kind.NECKLACE), (GroupKind.DIHEDRAL, counts.Kind.BRACELET)):
            brute = oracle.exact_period_scan(n, kind, cap=cfg.cap)
            closed = counts.exact_period_count(n, ck)
            if brute != closed:
                return CheckResult("exact period", False, f"n={n} {kind.value}: scan {brute} != formula {closed}")
    return CheckResult("exact period", True, f"n=1..{cfg.max_n}")


def check_tables(cfg: VerifyConfig) -> CheckResult:
    for label, table, fn in (("K", published.NECKLACES, counts.necklace_count),
                             ("K'", published.BRACELETS, counts.bracelet_count)):
        for n, expected in enumerate(table, start=1):
            got = fn(n)
            if got != expected:
                return CheckResult("published tables", False, f"{label}({n}) = {got}, table says {expected}")
    return CheckResult("published tables", True, "K and K' for n=1..40")


def check_identities(cfg: VerifyConfig) -> CheckResult:
    for n in range(1, cfg.identity_max_n + 1):
        if signed_phi_divisor_sum(n) != (0 if n % 2 == 0 else -n):
            return CheckResult("number theory", False, f"signed totient sum fails at n={n}")
        if sum(euler_phi(d) for d in divisors(n)) != n:
            return CheckResult("number theory", False, f"totient divisor sum fails at n={n}")
        if sum(moebius(d) for d in divisors(n)) != (n == 1):
            return CheckResult("number theory", False, f"Moebius divisor sum fails at n={n}")
    return CheckResult("number theory", True, f"n=1..{cfg.identity_max_n}")


CHECKS = (check_tables, check_identities, check_orbits, check_fixed_points, check_exact_period)


def run(cfg: VerifyConfig) -> Iterator[CheckResult]:
    for check in CHECKS:
        yield check(cfg)
