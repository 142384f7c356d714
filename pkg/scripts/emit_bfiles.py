#!/usr/bin/env python3
"""Write OEIS-style b-files (``n value`` per line) for the exported sequences.

The exact-period bracelet and necklace files are the ones to diff against
A011768 and A011957; the bracelet file against A114438.
"""
import argparse
from dataclasses import dataclass
from pathlib import Path

from colorful_necklaces.cli import render_table
from colorful_necklaces.counts import SequenceKind


@dataclass
class Config:
    out_dir: Path = Path("bfiles")
    last: int = 500


FILES = {
    "necklace.txt": SequenceKind.NECKLACE,
    "bracelet_A114438.txt": SequenceKind.BRACELET,
    "necklace_exact_period_A011957.txt": SequenceKind.NECKLACE_EXACT_PERIOD,
    "bracelet_exact_period_A011768.txt": SequenceKind.BRACELET_EXACT_PERIOD,
    "necklace_exact_colors.txt": SequenceKind.NECKLACE_EXACT_COLORS,
    "bracelet_exact_colors.txt": SequenceKind.BRACELET_EXACT_COLORS,
}


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out-dir", type=Path, default=Config.out_dir)
    ap.add_argument("--to", type=int, default=Config.last)
    cfg = Config(*vars(ap.parse_args()).values())
    cfg.out_dir.mkdir(parents=True, exist_ok=True)
    for name, kind in FILES.items():
        path = cfg.out_dir / name
        path.write_bytes(render_table([kind], 1, cfg.last, "bfile").encode("ascii"))
        print(f"wrote {path} (n=1..{cfg.last})")


if __name__ == "__main__":
    main()
