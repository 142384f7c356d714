#!/usr/bin/env python3
"""Print K(n) and K'(n) for n = 1..40 next to the published values."""
from colorful_necklaces import bracelet_count, necklace_count
from colorful_necklaces.published import BRACELETS, NECKLACES


def main():
    bad = 0
    print("{:>3} {:>12} {:>12} {:>12} {:>12}".format("n", "K(n)", "K_pub", "K'(n)", "K'_pub"))
    for n in range(1, 41):
        k, kb = necklace_count(n), bracelet_count(n)
        flag = "" if (k, kb) == (NECKLACES[n - 1], BRACELETS[n - 1]) else "  <-- mismatch"
        bad += bool(flag)
        print(f"{n:>3} {k:>12} {NECKLACES[n - 1]:>12} {kb:>12} {BRACELETS[n - 1]:>12}{flag}")
    print(f"{40 - bad}/40 rows agree")
    return 1 if bad else 0


if __name__ == "__main__":
    raise SystemExit(main())
