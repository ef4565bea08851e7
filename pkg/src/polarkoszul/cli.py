"""Command line interface: ``polarkoszul <command> ...``.

Exit codes: 0 when everything checked passes, 1 on a verification failure,
2 on usage, input or capacity errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import experiments as ex
from .errors import LatticeCapacityError, PreconditionError
from .graphs import (
    SimpleGraph,
    friendly_independent_set,
    gamma_graph,
    graph_id,
    parse_graph,
    spanning_tree_leaf_order,
)
from .koszul import FieldConfig, depth
from .monomials import DEFAULT_LATTICE_CAP, format_ideal, parse_ideal, polarize_ideal
from .polar import verify_polarized_basis
from .whisker import certificate, verify_certificate

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _parse_graph_id(text: str) -> SimpleGraph:
    head, _, body = text.partition(":")
    n = int(head[1:])
    edges = [tuple(int(v) for v in e.split("-")) for e in body.split(",") if e]
    return SimpleGraph.from_edges(n, edges)


def load_graph(spec: str) -> SimpleGraph:
    """A graph file (``n`` then one ``i j`` edge per line) or an id like ``n3:1-2,2-3``."""
    if os.path.exists(spec):
        with open(spec) as fh:
            return parse_graph(fh.read())
    if spec.startswith("n") and ":" in spec:
        return _parse_graph_id(spec)
    raise FileNotFoundError(f"no graph file {spec!r}")


def load_ideal(path: str):
    with open(path) as fh:
        return parse_ideal(fh.read())


def _emit(args, payload, text: str = None) -> None:
    if args.format == "json" or text is None:
        out = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    else:
        out = text if text.endswith("\n") else text + "\n"
    _write(args, out)


def _write(args, out: str) -> None:
    if args.out:
        try:
            with open(args.out, "w") as fh:
                fh.write(out)
        except OSError as exc:
            raise OSError(f"cannot write {args.out}: {exc.strerror}") from exc
    else:
        sys.stdout.write(out)


def _config(args, **kw) -> ex.ExperimentConfig:
    prime = getattr(args, "prime", None)
    base = dict(seed=args.seed, jobs=args.jobs, format=args.format, out=args.out)
    if prime:
        base["primes"] = (prime,)
    if getattr(args, "cap", None):
        base["cap"] = args.cap
    base.update(kw)
    return ex.ExperimentConfig(**base)


# ---------------------------------------------------------------------------
# commands


def cmd_depth(args) -> int:
    field = FieldConfig(args.prime)
    if args.ideal:
        I = load_ideal(args.ideal)
        r = depth(I, field, args.cap)
        _emit(args, r.as_dict(), f"depth {r.depth} (pd {r.pd}, {r.nvars} variables)")
        return EXIT_OK
    if not args.graph:
        raise PreconditionError("depth needs --graph or --ideal")
    G = load_graph(args.graph)
    if args.power:
        cfg = _config(args, kmin=args.power, kmax=args.power)
        series = ex.depth_series(G, args.power, cfg)
    else:
        kmax = args.kmax or G.n
        cfg = _config(args, kmax=kmax)
        series = ex.depth_series(G, kmax, cfg)
    _write(args, ex.emit_report([series], args.format))
    if series.truncated:
        return EXIT_USAGE
    return EXIT_OK if series.passed else EXIT_FAIL


def cmd_polarize(args) -> int:
    I = load_ideal(args.ideal)
    P, space = polarize_ideal(I)
    text = format_ideal(P)
    _emit(args, {"ideal": format_ideal(I), "polarization": text, "variables": list(space.labels)}, text)
    return EXIT_OK


def cmd_friendly(args) -> int:
    G = load_graph(args.graph)
    S = friendly_independent_set(G)
    gamma = gamma_graph(G, S)
    tree = spanning_tree_leaf_order(G, S)
    payload = {
        "graph": graph_id(G),
        "S": list(S),
        "gamma_edges": [list(e) for e in gamma.edges],
        "tree_edges": [list(e) for e in tree.original_edges()],
        "witnesses": list(tree.witnesses),
    }
    text = f"S = {list(S)}\ntree edges = {tree.original_edges()}\nwitnesses = {list(tree.witnesses)}"
    _emit(args, payload, text)
    return EXIT_OK


def cmd_certificate(args) -> int:
    G = load_graph(args.graph)
    cert = certificate(G, args.power, FieldConfig(args.prime))
    ok = verify_certificate(cert)
    d = cert.as_dict()
    text = (f"graph {d['graph']} k={d['k']} S={d['S']}\n"
            f"class {'nonzero' if ok else 'zero (boundary)'}"
            + (f"; depth <= {d['implied_bound']}" if ok else "") + "\n" + d["element"])
    _emit(args, d, text)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_verify(args) -> int:
    if args.suite == "main" and args.ideal:
        I = load_ideal(args.ideal)
        rep = verify_polarized_basis(I, args.homdeg, FieldConfig(args.prime))
        _emit(args, rep.as_dict(), f"H_{rep.i}: r={rep.r} {'PASS' if rep.passed else 'FAIL'}\n"
              + "\n".join(rep.witness_failures))
        return EXIT_OK if rep.passed else EXIT_FAIL
    kw = {"nmax": args.nmax, "trials": args.trials}
    if args.kmax:
        kw["kmax"] = args.kmax
    cfg = _config(args, **kw)
    reports = ex.run_verification_suite(cfg, [args.suite])
    _write(args, ex.emit_report(reports, args.format))
    return EXIT_OK if ex.all_passed(reports) else EXIT_FAIL


def cmd_depth_series(args) -> int:
    kw = {"family": args.family, "nmin": args.nmin, "nmax": args.nmax}
    if args.kmax:
        kw["kmax"] = args.kmax
    cfg = _config(args, **kw)
    series = ex.run_depth_series(cfg)
    _write(args, ex.emit_report(series, args.format))
    if any(s.truncated for s in series):
        return EXIT_USAGE
    return EXIT_OK if ex.all_passed(series) else EXIT_FAIL


# ---------------------------------------------------------------------------
# parser


def _globals(defaults: bool) -> argparse.ArgumentParser:
    sup = {} if defaults else {"default": argparse.SUPPRESS}
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--format", choices=ex.FORMATS, **({"default": "json"} if defaults else sup))
    p.add_argument("--out", **({"default": None} if defaults else sup))
    p.add_argument("--seed", type=int, **({"default": 0} if defaults else sup))
    p.add_argument("--jobs", type=int, **({"default": 1} if defaults else sup))
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polarkoszul",
        description="Koszul homology, polarization and depth of powers of whisker edge ideals.",
        parents=[_globals(True)],
    )
    common = _globals(False)
    sub = parser.add_subparsers(dest="command", required=True)

    def field_opts(p):
        p.add_argument("--prime", type=int, default=FieldConfig().p)
        p.add_argument("--cap", type=int, default=DEFAULT_LATTICE_CAP)

    p = sub.add_parser("depth", parents=[common], help="depth of S*/I(G*)^k or of S/I")
    p.add_argument("--graph")
    p.add_argument("--ideal")
    grp = p.add_mutually_exclusive_group()
    grp.add_argument("--power", type=int)
    grp.add_argument("--kmax", type=int)
    field_opts(p)
    p.set_defaults(func=cmd_depth)

    p = sub.add_parser("polarize", parents=[common], help="polarize a monomial ideal")
    p.add_argument("--ideal", required=True)
    p.set_defaults(func=cmd_polarize)

    p = sub.add_parser("friendly", parents=[common], help="friendly maximal independent set")
    p.add_argument("--graph", required=True)
    p.set_defaults(func=cmd_friendly)

    p = sub.add_parser("certificate", parents=[common], help="whisker depth certificate")
    p.add_argument("--graph", required=True)
    p.add_argument("--power", type=int, required=True)
    field_opts(p)
    p.set_defaults(func=cmd_certificate)

    p = sub.add_parser("verify", parents=[common], help="verification suites")
    p.add_argument("suite", choices=ex.SUITES)
    p.add_argument("--ideal")
    p.add_argument("--homdeg", type=int, default=1)
    p.add_argument("--nmax", type=int, default=3)
    p.add_argument("--kmax", type=int)
    p.add_argument("--trials", type=int, default=50)
    field_opts(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("depth-series", parents=[common], help="depth functions over a graph family")
    p.add_argument("--family", choices=[f for f in ex.FAMILIES if f != "explicit"], required=True)
    p.add_argument("--nmin", type=int, default=1)
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--kmax", type=int)
    field_opts(p)
    p.set_defaults(func=cmd_depth_series)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except LatticeCapacityError as exc:
        print(f"capacity error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (PreconditionError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
