"""Taylor-complex oracle for multigraded Betti numbers.

Independent of the Koszul strands: the Taylor resolution of S/I has a basis
indexed by subsets of G(I), and after tensoring with the field only faces
with equal lcm survive in the differential.  So Tor_i(S/I)_a is the homology
of the chain complex of subsets with lcm exactly a.  Exponential in the
number of generators; meant for ideals with a handful of them.
"""

from __future__ import annotations

from itertools import combinations

import numpy as np

from . import linalg
from .koszul import DEFAULT_FIELD, FREE, IDEAL, QUOTIENT, FieldConfig
from .monomials import MonomialIdeal, lcm, unit

MAX_GENERATORS = 14


def tor_dims(I: MonomialIdeal, field: FieldConfig = DEFAULT_FIELD) -> dict:
    """{a: {i: dim Tor_i(S/I, k)_a}} over all degrees with nonzero Tor."""
    gens = list(I.generators)
    if len(gens) > MAX_GENERATORS:
        raise ValueError(f"Taylor oracle limited to {MAX_GENERATORS} generators, got {len(gens)}")
    p = field.p
    by_deg = {}
    zero = unit(I.nvars)
    for r in range(len(gens) + 1):
        for sigma in combinations(range(len(gens)), r):
            m = zero
            for t in sigma:
                m = lcm(m, gens[t])
            by_deg.setdefault(m, {}).setdefault(r, []).append(sigma)
    out = {}
    for a, faces in by_deg.items():
        index = {r: {s: t for t, s in enumerate(fs)} for r, fs in faces.items()}
        ranks = {}
        for r, fs in faces.items():
            lower = index.get(r - 1)
            if r == 0 or lower is None:
                ranks[r] = 0
                continue
            M = np.zeros((len(lower), len(fs)), dtype=np.int64)
            for col, sigma in enumerate(fs):
                for pos in range(r):
                    face = sigma[:pos] + sigma[pos + 1:]
                    row = lower.get(face)
                    if row is not None:
                        M[row, col] = (-1) ** pos
            ranks[r] = linalg.rank(M, p)
        h = {}
        for r, fs in faces.items():
            d = len(fs) - ranks[r] - ranks.get(r + 1, 0)
            if d:
                h[r] = d
        if h:
            out[a] = h
    return out


def koszul_dims(I: MonomialIdeal, kind: str = QUOTIENT, field: FieldConfig = DEFAULT_FIELD) -> dict:
    """H_i(x; M)_a via Tor, in the same shape as koszul.homology_dims."""
    if kind == FREE:
        return {unit(I.nvars): {0: 1}}
    tor = tor_dims(I, field)
    if kind == QUOTIENT:
        return tor
    if kind != IDEAL:
        raise ValueError(f"unknown module kind {kind!r}")
    out = {}
    for a, h in tor.items():
        if not any(a):
            continue
        shifted = {i - 1: d for i, d in h.items() if i >= 1}
        if shifted:
            out[a] = shifted
    return out


def betti_numbers(I: MonomialIdeal, field: FieldConfig = DEFAULT_FIELD) -> dict:
    """Total Betti numbers {i: beta_i(S/I)}."""
    totals = {}
    for h in tor_dims(I, field).values():
        for i, d in h.items():
            totals[i] = totals.get(i, 0) + d
    return dict(sorted(totals.items()))
