"""Koszul complexes of monomial modules, multigraded strands and depth.

Elements of K(x; M) are finite sums of terms ``coeff * u * e_J`` with ``u``
a monomial exponent tuple and ``J`` a strictly increasing tuple of variable
indices (0-based internally, 1-based in the text format).  Coefficients are
Python ints; they are read in GF(p) wherever a :class:`FieldConfig` is
supplied, so an element built from integer formulas can be checked over
several primes.

Boundary sign convention:
    d(u e_{j_1} ^ ... ^ e_{j_i}) = sum_t (-1)^(t+1) x_{j_t} u e_{J - j_t}
"""

from __future__ import annotations

import itertools
import re
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Optional

import numpy as np

from . import linalg
from .errors import DimensionMismatchError, PreconditionError
from .monomials import (
    DEFAULT_LATTICE_CAP,
    MonomialIdeal,
    VariableSpace,
    divides,
    exponent_box_array,
    format_monomial,
    lcm_lattice_array,
    minimalize,
    mul,
    parse_monomial,
    support,
    zero_ideal,
)

IDEAL = "ideal"
QUOTIENT = "quotient"
FREE = "free"
KINDS = (IDEAL, QUOTIENT, FREE)


@dataclass(frozen=True)
class FieldConfig:
    p: int = 32003

    def __post_init__(self):
        linalg.check_prime(self.p)


DEFAULT_FIELD = FieldConfig()


@dataclass(frozen=True)
class CoefficientModule:
    """One of I, S/I or S, with the membership rule for strand coefficients."""

    kind: str
    ideal: MonomialIdeal

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown module kind {self.kind!r}")

    @classmethod
    def of_ideal(cls, I: MonomialIdeal) -> "CoefficientModule":
        return cls(IDEAL, I)

    @classmethod
    def quotient(cls, I: MonomialIdeal) -> "CoefficientModule":
        return cls(QUOTIENT, I)

    @classmethod
    def free(cls, space: VariableSpace) -> "CoefficientModule":
        return cls(FREE, zero_ideal(space))

    @property
    def space(self) -> VariableSpace:
        return self.ideal.space

    @property
    def nvars(self) -> int:
        return self.ideal.nvars

    def admits(self, u) -> bool:
        if self.kind == FREE:
            return True
        inside = self.ideal.contains(u)
        return inside if self.kind == IDEAL else not inside

    def __str__(self):
        if self.kind == FREE:
            return "S"
        return str(self.ideal) if self.kind == IDEAL else f"S/{self.ideal}"


def _sort_sign(indices):
    """Sort a wedge word; return (sorted tuple, sign) or (None, 0) on repeats."""
    seq = list(indices)
    if len(set(seq)) != len(seq):
        return None, 0
    sign = 1
    for a in range(len(seq)):
        for b in range(a + 1, len(seq)):
            if seq[a] > seq[b]:
                sign = -sign
    return tuple(sorted(seq)), sign


def term_multidegree(u, J) -> tuple:
    """deg(u e_J): exponent vector of u plus the indicator vector of J."""
    deg = list(u)
    for j in J:
        deg[j] += 1
    return tuple(deg)


class KoszulElement:
    """Finite sum of monomial terms of K(x; M)."""

    __slots__ = ("module", "terms")

    def __init__(self, module: CoefficientModule, terms=None, check: bool = True):
        self.module = module
        clean = {}
        n = module.nvars
        for (u, J), c in (terms or {}).items():
            u = tuple(u)
            J = tuple(J)
            if len(u) != n:
                raise DimensionMismatchError(f"term monomial {u} does not live in {n} variables")
            if c == 0:
                continue
            if list(J) != sorted(set(J)) or (J and not 0 <= J[0] <= J[-1] < n):
                raise PreconditionError(f"index set {J} must be strictly increasing in 0..{n - 1}")
            if module.kind == QUOTIENT and module.ideal.contains(u):
                continue
            if check and module.kind == IDEAL and not module.ideal.contains(u):
                raise PreconditionError(
                    f"coefficient {format_monomial(u, module.space)} is not in {module.ideal}"
                )
            clean[(u, J)] = clean.get((u, J), 0) + c
        self.terms = {k: v for k, v in clean.items() if v}

    # -- construction helpers -------------------------------------------------

    @classmethod
    def term(cls, module: CoefficientModule, u, J=(), coeff: int = 1) -> "KoszulElement":
        word, sign = _sort_sign(J)
        if word is None:
            return cls(module)
        return cls(module, {(tuple(u), word): sign * coeff})

    def with_module(self, module: CoefficientModule, check: bool = True) -> "KoszulElement":
        return KoszulElement(module, self.terms, check=check)

    # -- basic protocol -------------------------------------------------------

    @property
    def space(self) -> VariableSpace:
        return self.module.space

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(sorted(self.terms.items()))

    def __eq__(self, other):
        if not isinstance(other, KoszulElement):
            return NotImplemented
        return self.module == other.module and self.terms == other.terms

    def __hash__(self):
        return hash((self.module, frozenset(self.terms.items())))

    def _combine(self, other, sign):
        if self.module != other.module:
            raise DimensionMismatchError("elements live over different coefficient modules")
        terms = dict(self.terms)
        for k, v in other.terms.items():
            terms[k] = terms.get(k, 0) + sign * v
        return KoszulElement(self.module, terms, check=False)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c: int) -> "KoszulElement":
        return KoszulElement(self.module, {k: c * v for k, v in self.terms.items()}, check=False)

    def mod(self, p: int) -> "KoszulElement":
        """Coefficients reduced to centered residues mod p."""
        out = {}
        for k, v in self.terms.items():
            v %= p
            out[k] = v - p if v > p // 2 else v
        return KoszulElement(self.module, out, check=False)

    def is_zero(self, p: Optional[int] = None) -> bool:
        if p is None:
            return not self.terms
        return all(v % p == 0 for v in self.terms.values())

    @property
    def homological_degrees(self) -> set:
        return {len(J) for (_, J) in self.terms}

    @property
    def multidegrees(self) -> set:
        return {term_multidegree(u, J) for (u, J) in self.terms}

    def homological_degree(self) -> int:
        degs = self.homological_degrees
        if len(degs) != 1:
            raise PreconditionError(f"element is not homogeneous (degrees {sorted(degs)})")
        return degs.pop()

    def multidegree(self) -> tuple:
        degs = self.multidegrees
        if len(degs) != 1:
            raise PreconditionError(f"element is not multi-homogeneous ({len(degs)} multidegrees)")
        return degs.pop()

    def coefficient(self, u, J) -> int:
        return self.terms.get((tuple(u), tuple(J)), 0)

    def to_text(self, header: bool = False) -> str:
        return format_element(self, header=header)

    def __str__(self):
        return format_element(self, inline=True)

    def __repr__(self):
        return f"KoszulElement({self.module}, {format_element(self, inline=True)})"


# ---------------------------------------------------------------------------
# differential and products


def boundary(z: KoszulElement) -> KoszulElement:
    terms = {}
    for (u, J), c in z.terms.items():
        for t, j in enumerate(J):
            key = (u[:j] + (u[j] + 1,) + u[j + 1:], J[:t] + J[t + 1:])
            terms[key] = terms.get(key, 0) + (c if t % 2 == 0 else -c)
    return KoszulElement(z.module, terms, check=False)


def is_cycle(z: KoszulElement, field: FieldConfig = DEFAULT_FIELD) -> bool:
    return boundary(z).is_zero(field.p)


def _product_module(a: CoefficientModule, b: CoefficientModule) -> CoefficientModule:
    if a.kind == FREE:
        return b
    if b.kind == FREE:
        return a
    if a.kind == IDEAL and b.kind == IDEAL:
        prods = {mul(u, v) for u in a.ideal.generators for v in b.ideal.generators}
        return CoefficientModule.of_ideal(minimalize(prods, a.space))
    if a.kind == QUOTIENT and b.kind == QUOTIENT and a.ideal == b.ideal:
        return a
    raise PreconditionError(f"declare a target module for the product of {a} and {b}")


def wedge(a: KoszulElement, b: KoszulElement, module: Optional[CoefficientModule] = None) -> KoszulElement:
    """Exterior product with the Koszul sign rule.

    Coefficients multiply; the result lives in ``module`` if given, otherwise
    in the natural product module (I*J for two ideals, M for S and M).
    """
    if a.module.nvars != b.module.nvars:
        raise DimensionMismatchError("wedge of elements over different variable spaces")
    target = module if module is not None else _product_module(a.module, b.module)
    terms = {}
    for (u, J), c in a.terms.items():
        for (v, K), d in b.terms.items():
            word, sign = _sort_sign(J + K)
            if word is None:
                continue
            key = (mul(u, v), word)
            terms[key] = terms.get(key, 0) + sign * c * d
    return KoszulElement(target, terms, check=module is not None)


def wedge_all(elements: Iterable[KoszulElement], module: Optional[CoefficientModule] = None) -> KoszulElement:
    """a_1 ^ a_2 ^ ... computed over S, then placed in ``module``.

    Without ``module`` the coefficient modules are multiplied out pairwise.
    """
    elements = list(elements)
    if not elements:
        raise PreconditionError("empty wedge product")
    if module is None:
        out = elements[0]
        for e in elements[1:]:
            out = wedge(out, e)
        return out
    out = lift_to_free(elements[0])
    for e in elements[1:]:
        out = wedge(out, lift_to_free(e))
    return out.with_module(module)


def lift_to_free(z: KoszulElement) -> KoszulElement:
    return KoszulElement(CoefficientModule.free(z.space), z.terms, check=False)


def connecting_boundary(c: KoszulElement) -> KoszulElement:
    """d of the free lift of a quotient cycle, as an element over the ideal.

    This realises H_i(x; S/I) -> H_{i-1}(x; I).
    """
    if c.module.kind != QUOTIENT:
        raise PreconditionError("connecting_boundary expects an element over S/I")
    return KoszulElement(CoefficientModule.of_ideal(c.module.ideal), boundary(lift_to_free(c)).terms)


# ---------------------------------------------------------------------------
# strands


def _facet_masks(a, gens) -> list:
    """Bitmask of {j : g_j < a_j} for each generator g dividing a."""
    out = []
    for g in gens:
        if divides(g, a):
            m = 0
            for j, (gj, aj) in enumerate(zip(g, a)):
                if gj < aj:
                    m |= 1 << j
            out.append(m)
    return out


class StrandComplex:
    """The degree-``a`` strand of K(x; M) over GF(p).

    ``basis(i)`` lists the terms (u, J) with deg(u e_J) = a, |J| = i and u
    admissible for the module, ordered lexicographically on (u, J).
    ``boundary_matrix(i)`` has rows indexed by ``basis(i-1)`` and columns by
    ``basis(i)``.
    """

    def __init__(self, module: CoefficientModule, a, generators=None):
        self.module = module
        self.a = tuple(int(x) for x in a)
        if len(self.a) != module.nvars:
            raise DimensionMismatchError(f"degree {self.a} does not match {module.nvars} variables")
        gens = module.ideal.generators if generators is None else generators
        self._facets = [] if module.kind == FREE else _facet_masks(self.a, gens)
        self.support = support(self.a)
        self._bases = {}
        self._index = {}

    def _in_ideal(self, jmask: int) -> bool:
        return any(not (jmask & ~f) for f in self._facets)

    def basis(self, i: int) -> list:
        if i in self._bases:
            return self._bases[i]
        out = []
        if 0 <= i <= len(self.support):
            for J in itertools.combinations(self.support, i):
                jmask = 0
                for j in J:
                    jmask |= 1 << j
                kind = self.module.kind
                if kind == IDEAL and not self._in_ideal(jmask):
                    continue
                if kind == QUOTIENT and self._in_ideal(jmask):
                    continue
                u = list(self.a)
                for j in J:
                    u[j] -= 1
                out.append((tuple(u), J))
        out.sort()
        self._bases[i] = out
        self._index[i] = {t: k for k, t in enumerate(out)}
        return out

    def dims(self) -> dict:
        return {i: len(self.basis(i)) for i in range(len(self.support) + 1)}

    def boundary_matrix(self, i: int) -> np.ndarray:
        cols = self.basis(i)
        rows = self.basis(i - 1)
        M = np.zeros((len(rows), len(cols)), dtype=np.int64)
        if not rows or not cols:
            return M
        idx = self._index[i - 1]
        for c, (u, J) in enumerate(cols):
            for t, j in enumerate(J):
                key = (u[:j] + (u[j] + 1,) + u[j + 1:], J[:t] + J[t + 1:])
                r = idx.get(key)
                if r is not None:
                    M[r, c] = 1 if t % 2 == 0 else -1
        return M

    def vector(self, z: KoszulElement, i: int) -> np.ndarray:
        v = np.zeros(len(self.basis(i)), dtype=np.int64)
        idx = self._index[i]
        for (u, J), c in z.terms.items():
            if len(J) != i or term_multidegree(u, J) != self.a:
                raise PreconditionError("element is not supported on this strand")
            k = idx.get((u, J))
            if k is None:
                raise PreconditionError(f"term {(u, J)} is not a basis term of the strand")
            v[k] = c
        return v

    def element(self, vec, i: int, p: Optional[int] = None) -> KoszulElement:
        vals = list(np.asarray(vec).ravel())
        if p is not None:
            vals = linalg.centered(vals, p)
        terms = {t: int(c) for t, c in zip(self.basis(i), vals) if c}
        return KoszulElement(self.module, terms, check=False)

    def homology_rank(self, i: int, field: FieldConfig = DEFAULT_FIELD) -> int:
        dim = len(self.basis(i))
        if dim == 0:
            return 0
        r_out = linalg.rank(self.boundary_matrix(i), field.p)
        r_in = linalg.rank(self.boundary_matrix(i + 1), field.p)
        return dim - r_out - r_in

    def homology(self, field: FieldConfig = DEFAULT_FIELD) -> dict:
        top = len(self.support)
        ranks = {i: linalg.rank(self.boundary_matrix(i), field.p) for i in range(1, top + 1)}
        return {
            i: len(self.basis(i)) - ranks.get(i, 0) - ranks.get(i + 1, 0) for i in range(top + 1)
        }


def strand_homology_rank(module: CoefficientModule, a, i: int, field: FieldConfig = DEFAULT_FIELD) -> int:
    """dim_K H_i(x; M)_a = dim ker d_i - rank d_{i+1} on the degree-a strand."""
    return StrandComplex(module, a).homology_rank(i, field)


def candidate_degrees(module: CoefficientModule, cap: int = DEFAULT_LATTICE_CAP, candidates: str = "lattice") -> list:
    """Multidegrees where H_*(x; M) can be nonzero."""
    if module.kind == FREE:
        return [tuple([0] * module.nvars)]
    I = module.ideal
    arr = lcm_lattice_array(I, cap) if candidates == "lattice" else exponent_box_array(I)
    degs = [tuple(int(x) for x in row) for row in arr]
    if module.kind == IDEAL:
        degs = [a for a in degs if any(a)]
    return sorted(degs)


def homology_dims(module: CoefficientModule, field: FieldConfig = DEFAULT_FIELD,
                  cap: int = DEFAULT_LATTICE_CAP, candidates: str = "lattice") -> dict:
    """{degree: {i: dim}} over every candidate degree with nonzero homology."""
    out = {}
    for a in candidate_degrees(module, cap, candidates):
        h = {i: d for i, d in StrandComplex(module, a).homology(field).items() if d}
        if h:
            out[a] = h
    return out


def total_homology(module: CoefficientModule, field: FieldConfig = DEFAULT_FIELD,
                   cap: int = DEFAULT_LATTICE_CAP) -> dict:
    totals = {}
    for h in homology_dims(module, field, cap).values():
        for i, d in h.items():
            totals[i] = totals.get(i, 0) + d
    return totals


def homology_class_nonzero(z: KoszulElement, field: FieldConfig = DEFAULT_FIELD) -> bool:
    """True iff the cycle z is not a boundary in its own strand."""
    z = z.mod(field.p)
    if z.is_zero():
        return False
    a = z.multidegree()
    i = z.homological_degree()
    strand = StrandComplex(z.module, a)
    v = strand.vector(z, i)
    if np.any((strand.boundary_matrix(i) @ v) % field.p):
        raise PreconditionError("homology_class_nonzero needs a cycle")
    return not linalg.in_column_space(strand.boundary_matrix(i + 1), v, field.p)


def classes_independent(cycles: list, field: FieldConfig = DEFAULT_FIELD) -> bool:
    """Are the homology classes of the given homogeneous cycles linearly independent?"""
    groups = {}
    for z in cycles:
        z = z.mod(field.p)
        if z.is_zero():
            return False
        groups.setdefault((z.multidegree(), z.homological_degree()), []).append(z)
    for (a, i), zs in groups.items():
        strand = StrandComplex(zs[0].module, a)
        B = strand.boundary_matrix(i + 1)
        Z = np.stack([strand.vector(z, i) for z in zs], axis=1)
        if linalg.rank(np.hstack([B, Z]), field.p) - linalg.rank(B, field.p) != len(zs):
            return False
    return True


def _reduce_against(v, rows, pivots, p):
    v = v % p
    for row, pc in zip(rows, pivots):
        if v[pc]:
            v = (v - v[pc] * row) % p
    return v


def homology_basis_cycles(I: MonomialIdeal, i: int, field: FieldConfig = DEFAULT_FIELD,
                          kind: str = IDEAL, cap: int = DEFAULT_LATTICE_CAP) -> list:
    """Multi-homogeneous cycles whose classes form a basis of H_i(x; M).

    M is I (default) or S/I.  Per degree the kernel basis of d_i is reduced
    against the reduced echelon form of the image of d_{i+1} (and of the
    representatives already chosen); the nonzero remainders, scaled to a
    leading 1, are the representatives.
    """
    module = CoefficientModule(kind, I)
    p = field.p
    out = []
    for a in candidate_degrees(module, cap):
        strand = StrandComplex(module, a)
        if not strand.basis(i):
            continue
        Z = linalg.nullspace(strand.boundary_matrix(i), p)
        if Z.shape[0] == 0:
            continue
        B = strand.boundary_matrix(i + 1)
        if B.size:
            R, piv = linalg.rref(B.T, p)
            rows = [R[k] for k in range(len(piv))]
        else:
            rows, piv = [], []
        pivots = list(piv)
        for z in Z:
            rem = _reduce_against(z, rows, pivots, p)
            nz = np.flatnonzero(rem)
            if nz.size == 0:
                continue
            lead = int(nz[0])
            rem = (rem * pow(int(rem[lead]), p - 2, p)) % p
            out.append(strand.element(rem, i, p))
            # keep the echelon rows reduced so later reductions stay canonical
            rows = [(r - r[lead] * rem) % p for r in rows]
            rows.append(rem)
            pivots.append(lead)
    return out


# ---------------------------------------------------------------------------
# depth


@dataclass
class DepthResult:
    depth: int
    pd: int
    nvars: int
    witness: tuple
    candidates_checked: int = 0
    method: str = "collapse"

    def as_dict(self) -> dict:
        return {
            "depth": self.depth,
            "pd": self.pd,
            "nvars": self.nvars,
            "witness": list(self.witness),
            "candidates_checked": self.candidates_checked,
            "method": self.method,
        }


def _maximal_faces(facets):
    facets = sorted(set(facets), key=lambda f: -bin(f).count("1"))
    out = []
    for f in facets:
        if not any(not (f & ~g) for g in out):
            out.append(f)
    return out


def strong_collapse(facets) -> list:
    """Delete dominated vertices until none is left; homotopy type is kept.

    A vertex v is dominated by w != v when every facet containing v also
    contains w.
    """
    facets = _maximal_faces(facets)
    changed = True
    while changed and len(facets) > 1:
        changed = False
        verts = 0
        for f in facets:
            verts |= f
        rest = verts
        while rest:
            bit = rest & -rest
            rest ^= bit
            inter = -1
            for f in facets:
                if f & bit:
                    inter &= f
            if inter & ~bit:
                facets = _maximal_faces([f & ~bit for f in facets])
                changed = True
                break
    return facets


def reduced_homology(facets, p: int) -> dict:
    """{d: dim H~_d} for the simplicial complex with the given facet bitmasks."""
    if not facets:
        return {}
    faces = set()
    for f in facets:
        verts = [1 << j for j in range(f.bit_length()) if f >> j & 1]
        for r in range(len(verts) + 1):
            for c in itertools.combinations(verts, r):
                faces.add(sum(c))
    by_size = {}
    for f in faces:
        by_size.setdefault(bin(f).count("1"), []).append(f)
    for s in by_size:
        by_size[s].sort()
    top = max(by_size)
    ranks = {}
    for s in range(1, top + 1):
        idx = {f: r for r, f in enumerate(by_size[s - 1])}
        M = np.zeros((len(by_size[s - 1]), len(by_size[s])), dtype=np.int64)
        for c, f in enumerate(by_size[s]):
            t = 0
            for j in range(f.bit_length()):
                if f >> j & 1:
                    M[idx[f & ~(1 << j)], c] = 1 if t % 2 == 0 else -1
                    t += 1
        ranks[s] = linalg.rank(M, p)
    out = {}
    for s in range(0, top + 1):
        d = len(by_size[s]) - ranks.get(s, 0) - ranks.get(s + 1, 0)
        if d:
            out[s - 1] = d
    return out


def quotient_homology_at(a, gens, field: FieldConfig = DEFAULT_FIELD, method: str = "collapse") -> dict:
    """{i: dim H_i(x; S/I)_a} for a != 0.

    ``collapse`` uses H_i(x; S/I)_a = H~_{i-2}(K^a), K^a the complex of
    squarefree J with x^(a - J) in I, after strong collapse.  ``strand``
    works on the quotient strand directly.
    """
    a = tuple(a)
    if method == "strand":
        I = MonomialIdeal(VariableSpace.standard(len(a)), tuple(gens))
        return {i: d for i, d in StrandComplex(CoefficientModule.quotient(I), a).homology(field).items() if d}
    core = strong_collapse(_facet_masks(a, gens))
    if len(core) == 1 and core[0]:
        return {}
    return {d + 2: h for d, h in reduced_homology(core, field.p).items()}


def _chunk_pd(args):
    L, G, p, method, best = args
    field = FieldConfig(p)
    gens = [tuple(int(x) for x in g) for g in G]
    witness = None
    checked = 0
    pw = (1 << np.arange(G.shape[1], dtype=np.int64)) if G.size else None
    for start in range(0, L.shape[0], 2048):
        block = L[start:start + 2048]
        div = (G[None, :, :] <= block[:, None, :]).all(axis=2)
        fac = ((G[None, :, :] < block[:, None, :]) * pw).sum(axis=2)
        supp = (block > 0).sum(axis=1)
        for r in range(block.shape[0]):
            ndiv = int(div[r].sum())
            # H_i(S/I)_a = 0 unless i <= |supp a| and i <= #generators dividing a
            if ndiv == 0 or min(int(supp[r]), ndiv) <= best:
                continue
            a = tuple(int(x) for x in block[r])
            checked += 1
            if method == "strand":
                h = quotient_homology_at(a, [g for g in gens if divides(g, a)], field, "strand")
            else:
                core = strong_collapse(fac[r][div[r]].tolist())
                if len(core) == 1 and core[0]:
                    continue
                h = {d + 2: v for d, v in reduced_homology(core, p).items()}
            top = max(h, default=-1)
            if top > best:
                best, witness = top, a
    return best, witness, checked


def depth(I: MonomialIdeal, field: FieldConfig = DEFAULT_FIELD, cap: int = DEFAULT_LATTICE_CAP,
          candidates: str = "lattice", method: str = "collapse", jobs: int = 1) -> DepthResult:
    """depth(S/I) = N - max{i : H_i(x; S/I) != 0}.

    Candidate degrees come from the lcm lattice (or the exponent box with
    ``candidates='box'``).  A :class:`LatticeCapacityError` propagates when
    the lattice outgrows ``cap``.
    """
    if I.is_unit():
        raise PreconditionError("depth is undefined for the unit ideal")
    N = I.nvars
    if I.is_zero():
        return DepthResult(N, 0, N, tuple([0] * N), 0, method)
    if candidates == "lattice":
        L = lcm_lattice_array(I, cap)
    elif candidates == "box":
        L = exponent_box_array(I)
    else:
        raise ValueError(f"unknown candidate enumeration {candidates!r}")
    L = L[np.any(L > 0, axis=1)]
    # large supports first, so the pruning bound rises early
    L = L[np.argsort(-(L > 0).sum(axis=1), kind="stable")]
    G = I.as_array()
    best, witness, checked = 0, tuple([0] * N), 0
    if jobs <= 1 or L.shape[0] < 4096:
        b, w, checked = _chunk_pd((L, G, field.p, method, best))
        if w is not None:
            best, witness = b, w
    else:
        chunks = np.array_split(L, jobs * 4)
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for b, w, c in pool.map(_chunk_pd, [(ch, G, field.p, method, 0) for ch in chunks]):
                checked += c
                if w is not None and (b > best or (b == best and w < witness)):
                    best, witness = b, w
    return DepthResult(N - best, best, N, witness, checked, method)


def projective_dimension(I: MonomialIdeal, field: FieldConfig = DEFAULT_FIELD, **kw) -> int:
    return depth(I, field, **kw).pd


# ---------------------------------------------------------------------------
# text format

_TERM = re.compile(r"^\s*([+-]?\d+)\s*\*\s*(.+?)\s*\*\s*e\[([0-9,\s]*)\]\s*$")


def format_element(z: KoszulElement, header: bool = False, inline: bool = False) -> str:
    lines = []
    for (u, J), c in sorted(z.terms.items()):
        idx = ",".join(str(j + 1) for j in J)
        lines.append(f"{c} * {format_monomial(u, z.space)} * e[{idx}]")
    if inline:
        return " + ".join(lines) if lines else "0"
    if header:
        lines.insert(0, "vars: " + " ".join(z.space.labels))
    return "\n".join(lines) + ("\n" if lines else "")


def parse_element(text: str, module: Optional[CoefficientModule] = None,
                  space: Optional[VariableSpace] = None) -> KoszulElement:
    """Parse ``coeff * monomial * e[J]`` lines (J 1-based, comma separated)."""
    terms = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("vars:"):
            space = VariableSpace(tuple(line[5:].split()))
            continue
        m = _TERM.match(line)
        if not m:
            raise ValueError(f"cannot parse Koszul term {line!r}")
        terms.append((int(m.group(1)), m.group(2), m.group(3)))
    if module is None:
        if space is None:
            raise ValueError("need a module or a 'vars:' header to parse an element")
        module = CoefficientModule.free(space)
    space = module.space
    out = KoszulElement(module)
    for c, mono, js in terms:
        J = [int(t) - 1 for t in js.split(",") if t.strip()]
        out = out + KoszulElement.term(module, parse_monomial(mono, space), J, c)
    return out
