"""depth(S*/I(T*)^k) for all labelled trees T, against n - k + 1."""

import argparse

from polarkoszul.experiments import ExperimentConfig, emit_report, run_verification_suite


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--nmax", type=int, default=4)
    ap.add_argument("--kmax", type=int, default=None)
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--format", default="text", choices=["text", "json", "csv"])
    args = ap.parse_args()
    cfg = ExperimentConfig(nmax=args.nmax, kmax=args.kmax, jobs=args.jobs)
    reports = run_verification_suite(cfg, ["tree"])
    print(emit_report(reports, args.format), end="")


if __name__ == "__main__":
    main()
