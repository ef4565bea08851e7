"""Depth sweeps over graph families and the verification suites."""

from __future__ import annotations

import csv
import io
import json
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Callable, Iterable, Optional

from .errors import LatticeCapacityError, PreconditionError
from .graphs import (
    SimpleGraph,
    connected_components,
    cycle_graph,
    enumerate_trees,
    friendly_independent_set,
    graph_id,
    gamma_graph,
    is_bipartite,
    is_connected,
    is_maximal_independent,
    iter_connected_graphs,
    iter_graphs,
    path_graph,
    random_tree,
    whisker_ideal,
)
from .koszul import DEFAULT_FIELD, FieldConfig, depth
from .linalg import check_prime
from .monomials import (
    DEFAULT_LATTICE_CAP,
    MonomialIdeal,
    colon,
    divides,
    ideal_power,
    ideal_product,
    ideal_sum,
    minimalize,
    VariableSpace,
    format_ideal,
    substitute_zero,
)
from .polar import verify_polarized_basis
from .whisker import certificate, verify_certificate

FAMILIES = ("trees", "connected", "cycles", "paths", "explicit")
SUITES = ("tree", "whisker", "limit", "colon", "forest", "friendly", "main")
FORMATS = ("json", "csv", "text")


@dataclass
class ExperimentConfig:
    primes: tuple = (DEFAULT_FIELD.p,)
    nmin: int = 1
    nmax: int = 4
    kmin: int = 1
    kmax: Optional[int] = None  # None: up to n
    family: str = "connected"
    graphs: tuple = ()  # used by the explicit family
    cap: int = DEFAULT_LATTICE_CAP
    format: str = "json"
    out: Optional[str] = None
    jobs: int = 1
    seed: int = 0
    trials: int = 50
    certify: bool = False  # also verify the whisker certificate in depth series

    def __post_init__(self):
        self.primes = tuple(int(p) for p in self.primes)
        if not self.primes:
            raise ValueError("at least one prime is required")
        for p in self.primes:
            check_prime(p)
        if self.nmin < 1 or self.nmax < self.nmin:
            raise ValueError(f"empty n range {self.nmin}..{self.nmax}")
        if self.kmin < 1 or (self.kmax is not None and self.kmax < self.kmin):
            raise ValueError(f"empty k range {self.kmin}..{self.kmax}")
        if self.cap < 1:
            raise ValueError("lattice cap must be >= 1")
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.format not in FORMATS:
            raise ValueError(f"unknown format {self.format!r}")
        if self.jobs < 1:
            raise ValueError("jobs must be >= 1")

    @property
    def field(self) -> FieldConfig:
        return FieldConfig(self.primes[0])

    def k_range(self, n: int) -> range:
        top = n if self.kmax is None else self.kmax
        return range(self.kmin, top + 1)


# ---------------------------------------------------------------------------
# records


@dataclass
class Row:
    """One (graph, k) observation; the unit of csv output."""

    graph: str
    k: int
    depth: Optional[int]
    bound: Optional[int]
    passed: Optional[bool]  # None: observation only
    detail: str = ""

    def as_dict(self) -> dict:
        return {"graph": self.graph, "k": self.k, "depth": self.depth, "bound": self.bound,
                "pass": self.passed, "detail": self.detail}


@dataclass
class DepthPoint:
    k: int
    depth: int
    bound: Optional[int] = None
    flags: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(v for v in self.flags.values() if v is not None)


@dataclass
class DepthSeries:
    graph: str
    n: int
    points: list = field(default_factory=list)
    truncated: bool = False
    truncation_reason: str = ""

    @property
    def depths(self) -> list:
        return [pt.depth for pt in self.points]

    @property
    def passed(self) -> bool:
        return all(pt.passed for pt in self.points)

    def rows(self) -> list:
        return [Row(self.graph, pt.k, pt.depth, pt.bound, pt.passed,
                    ",".join(f"{k}={v}" for k, v in sorted(pt.flags.items())))
                for pt in self.points]

    def as_dict(self) -> dict:
        return {
            "graph": self.graph,
            "n": self.n,
            "points": [dict(asdict(pt), passed=pt.passed) for pt in self.points],
            "truncated": self.truncated,
            "truncation_reason": self.truncation_reason,
        }

    def sort_key(self):
        return (0, self.n, self.graph)


@dataclass
class SuiteReport:
    suite: str
    cases: list = field(default_factory=list)  # Row
    notes: list = field(default_factory=list)

    @property
    def failures(self) -> list:
        return [c for c in self.cases if c.passed is False]

    @property
    def passed(self) -> bool:
        return not self.failures

    def rows(self) -> list:
        return list(self.cases)

    def as_dict(self) -> dict:
        return {
            "suite": self.suite,
            "cases": len(self.cases),
            "passed": sum(1 for c in self.cases if c.passed is True),
            "failed": len(self.failures),
            "observed": sum(1 for c in self.cases if c.passed is None),
            "reproducers": [c.as_dict() for c in self.failures],
            "notes": list(self.notes),
            "results": [c.as_dict() for c in self.cases],
        }

    def sort_key(self):
        return (1, 0, self.suite)


# ---------------------------------------------------------------------------
# graph families


def family_graphs(cfg: ExperimentConfig) -> list:
    if cfg.family == "explicit":
        return list(cfg.graphs)
    out = []
    for n in range(cfg.nmin, cfg.nmax + 1):
        if cfg.family == "trees":
            out.extend(enumerate_trees(n))
        elif cfg.family == "connected":
            out.extend(iter_connected_graphs(n))
        elif cfg.family == "cycles" and n >= 3:
            out.append(cycle_graph(n))
        elif cfg.family == "paths":
            out.append(path_graph(n))
    return out


def iter_forests(n: int):
    for G in iter_graphs(n):
        if len(G.edges) == n - len(connected_components(G)):
            yield G


def _pmap(fn: Callable, items: list, jobs: int) -> list:
    if jobs <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items))


# ---------------------------------------------------------------------------
# depth series


def whisker_powers(G: SimpleGraph, kmax: int) -> Iterable:
    I = whisker_ideal(G)
    P = I
    for k in range(1, kmax + 1):
        yield k, P
        if k < kmax:
            P = ideal_product(P, I)


def depth_bound(G: SimpleGraph, k: int) -> Optional[int]:
    """n - k + 1 for connected G and k <= n, else None."""
    if is_connected(G) and 1 <= k <= G.n:
        return G.n - k + 1
    return None


def depth_series(G: SimpleGraph, kmax: int, cfg: Optional[ExperimentConfig] = None) -> DepthSeries:
    cfg = cfg or ExperimentConfig()
    if kmax < 1:
        raise PreconditionError("kmax must be >= 1")
    series = DepthSeries(graph_id(G), G.n)
    try:
        for k, P in whisker_powers(G, kmax):
            if k < cfg.kmin:
                continue
            d = depth(P, FieldConfig(cfg.primes[0]), cfg.cap).depth
            pt = DepthPoint(k, d, depth_bound(G, k))
            pt.flags["range"] = 0 <= d <= 2 * G.n
            pt.flags["bound"] = None if pt.bound is None else d <= pt.bound
            if len(cfg.primes) > 1:
                pt.flags["primes"] = all(depth(P, FieldConfig(p), cfg.cap).depth == d for p in cfg.primes[1:])
            if cfg.certify and pt.bound is not None:
                pt.flags["certificate"] = verify_certificate(certificate(G, k, FieldConfig(cfg.primes[0])))
            series.points.append(pt)
    except LatticeCapacityError as exc:
        series.truncated = True
        series.truncation_reason = str(exc)
    return series


def _series_job(args):
    G, kmax, cfg = args
    return depth_series(G, kmax, cfg)


def run_depth_series(cfg: ExperimentConfig) -> list:
    jobs = [(G, cfg.kmax or G.n, cfg) for G in family_graphs(cfg)]
    return sorted(_pmap(_series_job, jobs, cfg.jobs), key=lambda s: s.sort_key())


# ---------------------------------------------------------------------------
# suites


def _tree_case(args) -> list:
    G, ks, cfg = args
    rows = []
    for k, P in whisker_powers(G, max(ks)):
        if k in ks:
            d = depth(P, cfg.field, cfg.cap).depth
            rows.append(Row(graph_id(G), k, d, G.n - k + 1, d == G.n - k + 1, "depth == n-k+1"))
    return rows


def suite_tree(cfg: ExperimentConfig) -> SuiteReport:
    """Trees: depth(S*/I(G*)^k) = n - k + 1."""
    jobs = []
    for n in range(cfg.nmin, cfg.nmax + 1):
        ks = [k for k in cfg.k_range(n) if k <= n]
        if ks:
            jobs.extend((G, ks, cfg) for G in enumerate_trees(n))
    report = SuiteReport("tree")
    for rows in _pmap(_tree_case, jobs, cfg.jobs):
        report.cases.extend(rows)
    return report


def _whisker_case(args) -> list:
    G, ks, cfg = args
    rows = []
    for k, P in whisker_powers(G, max(ks)):
        if k not in ks:
            continue
        d = depth(P, cfg.field, cfg.cap).depth
        cert = certificate(G, k, cfg.field)
        ok_cert = verify_certificate(cert)
        bound = G.n - k + 1
        detail = f"certificate={'nonzero' if ok_cert else 'boundary'} depth<=bound={d <= bound}"
        rows.append(Row(graph_id(G), k, d, bound, ok_cert and d <= bound, detail))
    return rows


def suite_whisker(cfg: ExperimentConfig) -> SuiteReport:
    """Connected graphs: certificate class nonzero and depth <= n - k + 1."""
    jobs = []
    for n in range(cfg.nmin, cfg.nmax + 1):
        ks = [k for k in cfg.k_range(n) if k <= n]
        if ks:
            jobs.extend((G, ks, cfg) for G in iter_connected_graphs(n))
    report = SuiteReport("whisker")
    for rows in _pmap(_whisker_case, jobs, cfg.jobs):
        report.cases.extend(rows)
    return report


def _limit_case(args) -> list:
    G, extra, cfg = args
    expected = 1 if is_bipartite(G) else 0
    rows = []
    for k, P in whisker_powers(G, G.n + extra):
        if k >= G.n:
            d = depth(P, cfg.field, cfg.cap).depth
            rows.append(Row(graph_id(G), k, d, expected, d == expected,
                            "bipartite: 1" if expected else "non-bipartite: 0"))
    return rows


def suite_limit(cfg: ExperimentConfig, extra: int = 2) -> SuiteReport:
    """Connected graphs with n <= nmax: depth at k = n..n+extra is 1 or 0."""
    jobs = []
    for n in range(max(cfg.nmin, 2), cfg.nmax + 1):
        jobs.extend((G, extra, cfg) for G in iter_connected_graphs(n))
    report = SuiteReport("limit")
    for rows in _pmap(_limit_case, jobs, cfg.jobs):
        report.cases.extend(rows)
    return report


def relabel_leaf_last(G: SimpleGraph, leaf: int, neighbor: int) -> SimpleGraph:
    """Relabel so that ``leaf`` becomes n and ``neighbor`` becomes n - 1."""
    n = G.n
    rest = [v for v in G.vertices if v not in (leaf, neighbor)]
    new = {v: t + 1 for t, v in enumerate(rest)}
    new[neighbor], new[leaf] = n - 1, n
    return SimpleGraph.from_edges(n, [(new[a], new[b]) for a, b in G.edges])


def colon_identities(G: SimpleGraph, k: int) -> dict:
    """The colon identities behind the tree induction, for a tree whose vertex n is a leaf on n - 1.

    Returns {name: bool}; every ideal equality is between minimal generator sets.
    """
    n = G.n
    I = whisker_ideal(G)
    N = 2 * n
    xn, xm, yn = n - 1, n - 2, 2 * n - 1
    J = substitute_zero(I, xn)
    L = substitute_zero(J, xm)
    space = I.space

    def mono(*idx):
        u = [0] * N
        for t in idx:
            u[t] += 1
        return tuple(u)

    def gen(*monos) -> MonomialIdeal:
        return minimalize(monos, space)

    edge = mono(xm, xn)
    Jk = ideal_power(J, k)
    Lk = ideal_power(L, k)
    lhs = ideal_sum(Jk, gen(edge))
    target = ideal_sum(Lk, gen(mono(xm)))
    Jedge = ideal_sum(J, gen(edge))
    out = {
        "colon_x_n": colon(lhs, mono(xn)) == target,
        "colon_x_n_y_n": colon(lhs, mono(xn, yn)) == target,
        "morey": colon(ideal_power(Jedge, k), edge) == ideal_power(Jedge, k - 1),
        "power_split": ideal_sum(ideal_power(I, k), gen(mono(xn, yn)))
        == ideal_sum(ideal_power(Jedge, k), gen(mono(xn, yn))),
    }
    return out


def suite_colon(cfg: ExperimentConfig, kmax: int = 3) -> SuiteReport:
    rng = random.Random(cfg.seed)
    report = SuiteReport("colon")
    lo = max(cfg.nmin, 2)
    hi = max(cfg.nmax, lo)
    for _ in range(cfg.trials):
        n = rng.randint(lo, hi)
        T = random_tree(n, rng)
        leaves = [v for v in T.vertices if T.degree(v) == 1]
        leaf = rng.choice(leaves)
        G = relabel_leaf_last(T, leaf, T.neighbors(leaf)[0])
        for k in range(1, kmax + 1):
            res = colon_identities(G, k)
            bad = [name for name, ok in res.items() if not ok]
            report.cases.append(Row(graph_id(G), k, None, None, not bad,
                                    "failed: " + ",".join(bad) if bad else "all identities hold"))
    return report


def forest_prediction(n: int, m: int, k: int) -> int:
    return n - k + 1 if k <= n - m + 1 else m


def suite_forest(cfg: ExperimentConfig) -> SuiteReport:
    """Observed depths of forests against the conjectured plateau; report only."""
    report = SuiteReport("forest")
    agree = total = 0
    for n in range(cfg.nmin, cfg.nmax + 1):
        for G in iter_forests(n):
            m = len(connected_components(G))
            for k, P in whisker_powers(G, cfg.kmax or n):
                if k < cfg.kmin:
                    continue
                d = depth(P, cfg.field, cfg.cap).depth
                pred = forest_prediction(n, m, k)
                total += 1
                agree += d == pred
                report.cases.append(Row(graph_id(G), k, d, pred, None,
                                        f"m={m} observed={'match' if d == pred else 'differs'}"))
    report.notes.append(f"{agree}/{total} observations match the conjectured values")
    return report


def suite_friendly(cfg: ExperimentConfig) -> SuiteReport:
    report = SuiteReport("friendly")
    for n in range(cfg.nmin, cfg.nmax + 1):
        count = 0
        bad = []
        for G in iter_connected_graphs(n):
            count += 1
            S = friendly_independent_set(G)
            if not (is_maximal_independent(G, S) and gamma_graph(G, S).is_connected()):
                bad.append(graph_id(G))
        for gid in bad:
            report.cases.append(Row(gid, 0, None, None, False, "friendly set check failed"))
        report.notes.append(f"n={n}: {count} connected graphs, {len(bad)} failures")
    return report


def random_monomial_ideal(rng: random.Random, nvars: int = 3, maxdeg: int = 3, maxgens: int = 4) -> MonomialIdeal:
    """A nonzero proper monomial ideal with generators of total degree 1..maxdeg.

    The number of minimal generators is drawn from 1..maxgens; candidates
    comparable with an earlier generator are rejected, so small drafts do not
    collapse under minimalization.  Gives up after a bounded number of tries.
    """
    space = VariableSpace.standard(nvars)
    target = rng.randint(1, maxgens)
    gens = []
    for _ in range(20 * target):
        if len(gens) == target:
            break
        u = [0] * nvars
        for _ in range(rng.randint(1, maxdeg)):
            u[rng.randrange(nvars)] += 1
        u = tuple(u)
        if all(not divides(g, u) and not divides(u, g) for g in gens):
            gens.append(u)
    return minimalize(gens, space)


def _ideal_label(I: MonomialIdeal) -> str:
    return "(" + ", ".join(format_ideal(I).strip().splitlines()[1:]) + ")"


def polarization_cases(I: MonomialIdeal, field: FieldConfig) -> list:
    rows = []
    for i in range(I.nvars + 1):
        rep = verify_polarized_basis(I, i, field)
        rows.append(Row(_ideal_label(I), i, None, rep.r, rep.passed,
                        "; ".join(rep.witness_failures) or f"r={rep.r}"))
    return rows


def suite_main(cfg: ExperimentConfig, nvars: int = 3) -> SuiteReport:
    """Polarized Koszul homology bases on seeded random ideals (k column = homological degree)."""
    rng = random.Random(cfg.seed)
    report = SuiteReport("main")
    for _ in range(cfg.trials):
        I = random_monomial_ideal(rng, rng.randint(1, nvars))
        report.cases.extend(polarization_cases(I, cfg.field))
    return report


SUITE_RUNNERS = {
    "tree": suite_tree,
    "whisker": suite_whisker,
    "limit": suite_limit,
    "colon": suite_colon,
    "forest": suite_forest,
    "friendly": suite_friendly,
    "main": suite_main,
}


def run_verification_suite(cfg: ExperimentConfig, suites: Iterable[str] = ("tree", "whisker", "limit", "colon", "forest")) -> list:
    out = []
    for name in suites:
        if name not in SUITE_RUNNERS:
            raise ValueError(f"unknown suite {name!r}")
        out.append(SUITE_RUNNERS[name](cfg))
    return out


# ---------------------------------------------------------------------------
# reports


def emit_report(results: list, fmt: str = "json", out: Optional[str] = None) -> str:
    """Serialize depth series / suite reports; writes to ``out`` when given."""
    results = sorted(results, key=lambda r: r.sort_key())
    if fmt == "json":
        text = json.dumps({"results": [r.as_dict() for r in results]}, indent=2, sort_keys=True) + "\n"
    elif fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["graph", "k", "depth", "bound", "pass"])
        for r in results:
            for row in r.rows():
                w.writerow([row.graph, row.k, _cell(row.depth), _cell(row.bound), _cell(row.passed)])
        text = buf.getvalue()
    elif fmt == "text":
        lines = []
        for r in results:
            if isinstance(r, DepthSeries):
                flag = " (truncated)" if r.truncated else ""
                lines.append(f"{r.graph}: depths {r.depths}{flag} {'ok' if r.passed else 'FAIL'}")
            else:
                d = r.as_dict()
                lines.append(f"[{r.suite}] {d['passed']} passed, {d['failed']} failed, {d['observed']} observed")
                for c in r.failures:
                    lines.append(f"  FAIL {c.graph} k={c.k} depth={c.depth} bound={c.bound} {c.detail}")
                lines.extend(f"  {note}" for note in r.notes)
        text = "\n".join(lines) + ("\n" if lines else "")
    else:
        raise ValueError(f"unknown format {fmt!r}")
    if out is not None:
        try:
            with open(out, "w") as fh:
                fh.write(text)
        except OSError as exc:
            raise OSError(f"cannot write report to {out}: {exc.strerror}") from exc
    return text


def _cell(v):
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    return v


def all_passed(results: list) -> bool:
    return all(r.passed for r in results)
