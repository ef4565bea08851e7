"""Observed depth functions of forests with m components against the plateau guess.

Report only: prints every (forest, k) with observed depth and predicted value.
"""

import argparse

from polarkoszul.experiments import ExperimentConfig, emit_report, suite_forest


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--nmax", type=int, default=3)
    ap.add_argument("--kmax", type=int, default=None)
    ap.add_argument("--format", default="text", choices=["text", "json", "csv"])
    args = ap.parse_args()
    rep = suite_forest(ExperimentConfig(nmax=args.nmax, kmax=args.kmax))
    print(emit_report([rep], args.format), end="")
    for note in rep.notes:
        print(note)


if __name__ == "__main__":
    main()
