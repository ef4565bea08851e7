"""Tabulate where the whisker certificate class vanishes, next to the observed depth.

For each connected graph on at most --nmax vertices and k = 1..n prints
graph, k, depth, n-k+1 and whether the certificate element is a boundary.
"""

import argparse
import csv
import sys
from collections import Counter

from polarkoszul.experiments import whisker_powers
from polarkoszul.graphs import graph_id, iter_connected_graphs
from polarkoszul.koszul import depth
from polarkoszul.whisker import certificate, verify_certificate


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--nmax", type=int, default=4)
    ap.add_argument("--no-depth", action="store_true", help="skip the depth computation")
    args = ap.parse_args()
    w = csv.writer(sys.stdout)
    w.writerow(["graph", "k", "depth", "bound", "certificate"])
    tally = Counter()
    for n in range(1, args.nmax + 1):
        for G in iter_connected_graphs(n):
            for k, P in whisker_powers(G, n):
                ok = verify_certificate(certificate(G, k))
                d = "" if args.no_depth else depth(P).depth
                tally[(n, k, ok)] += 1
                w.writerow([graph_id(G), k, d, n - k + 1, "nonzero" if ok else "boundary"])
    print("", file=sys.stderr)
    for n in range(1, args.nmax + 1):
        for k in range(1, n + 1):
            good, bad = tally[(n, k, True)], tally[(n, k, False)]
            print(f"n={n} k={k}: nonzero {good}, boundary {bad}", file=sys.stderr)


if __name__ == "__main__":
    main()
