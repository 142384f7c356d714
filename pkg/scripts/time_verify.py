#!/usr/bin/env python3
"""Time the brute-force verification at increasing word lengths."""
import time

from colorful_necklaces import oracle
from colorful_necklaces.verify import VerifyConfig, check_fixed_points, check_orbits

for max_n in (8, 10, 12, 14, 16):
    oracle._enumerate.cache_clear()
    cfg = VerifyConfig(max_n=max_n, fixed_max_n=min(max_n, 12))
    t0 = time.perf_counter()
    results = [check_orbits(cfg), check_fixed_points(cfg)]
    status = "ok" if all(r.passed for r in results) else "MISMATCH"
    print(f"max_n={max_n:>2}  {time.perf_counter() - t0:6.2f}s  {status}")
