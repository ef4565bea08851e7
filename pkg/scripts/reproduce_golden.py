"""Depth functions of the small whisker examples (C3, C4, 2K2, P2)."""

import argparse

from polarkoszul.experiments import ExperimentConfig, depth_series, emit_report
from polarkoszul.graphs import SimpleGraph, cycle_graph, path_graph

CASES = {
    "C3": (cycle_graph(3), 4),
    "C4": (cycle_graph(4), 3),
    "2K2": (SimpleGraph.from_edges(4, [(1, 2), (3, 4)]), 4),
    "P2": (path_graph(2), 4),
}


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--format", default="text", choices=["text", "json", "csv"])
    ap.add_argument("--primes", type=int, nargs="+", default=[32003, 2])
    args = ap.parse_args()
    cfg = ExperimentConfig(primes=tuple(args.primes))
    series = []
    for name, (G, kmax) in CASES.items():
        s = depth_series(G, kmax, cfg)
        series.append(s)
        if args.format == "text":
            print(f"{name:4s} depths k=1..{kmax}: {s.depths}")
    if args.format != "text":
        print(emit_report(series, args.format), end="")


if __name__ == "__main__":
    main()
