"""Run every catalog scenario and write CSV, SVG and peak summaries.

Usage: python3 scripts/reproduce_figures.py [--out-dir figures] [--only fig3 fig4]
"""

import argparse
import sys
import time

from isingent.experiments.cli import main as cli_main
from isingent.experiments.scenarios import load_catalog


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--out-dir", default="figures")
    parser.add_argument("--only", nargs="*", default=None, help="subset of catalog names")
    args = parser.parse_args()

    names = args.only or list(load_catalog())
    for name in names:
        start = time.perf_counter()
        code = cli_main(["scenario", name, "--out-dir", args.out_dir])
        if code:
            return code
        print(f"{name}: {time.perf_counter() - start:.1f} s")
    return 0


if __name__ == "__main__":
    sys.exit(main())
