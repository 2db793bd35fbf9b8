#!/usr/bin/env python3
"""Write the two bound-to-HT ratio grids as CSV files.

grid1.csv: nu = 1..6, d0 = 2..20, single-parity-check geometry m = nu + 2
           (the ratio exceeds 1 exactly when d0 > 3).
grid2.csv: nu = 6, d0 = 2..20, Reed-Solomon geometry m = nu+2 .. nu+6
           (the ratio degrades as the locator distance m - nu grows).
"""

import argparse
import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from cycbound import nzl  # noqa: E402


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out-dir", default=".", help="where to write grid1.csv / grid2.csv")
    args = parser.parse_args()
    os.makedirs(args.out_dir, exist_ok=True)
    path1 = os.path.join(args.out_dir, "grid1.csv")
    with open(path1, "w", encoding="utf-8") as fh:
        nzl.ratio_grid_csv(range(1, 7), range(2, 21), lambda nu: [nu + 2], fh)
    path2 = os.path.join(args.out_dir, "grid2.csv")
    with open(path2, "w", encoding="utf-8") as fh:
        nzl.ratio_grid_csv([6], range(2, 21), lambda nu: range(nu + 2, nu + 7), fh)
    print(f"wrote {path1} and {path2}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
