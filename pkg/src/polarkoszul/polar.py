"""Polarization of Koszul cycles.

Term rule: for u e_J with a = deg u and deg(u e_J) <= c,

    (u e_J)^pol = u^pol * e_{j_1, a_{j_1}+1} ^ ... ^ e_{j_i, a_{j_i}+1}

extended linearly.  The polarized sequence is ordered x_11..x_1c1, x_21, ...,
so the polarized index word of a sorted J stays sorted and no sign appears.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional

from . import koszul
from .errors import PreconditionError
from .graphs import SimpleGraph, maximal_independent_sets, whisker_ideal
from .koszul import (
    DEFAULT_FIELD,
    CoefficientModule,
    FieldConfig,
    KoszulElement,
    _sort_sign,
    classes_independent,
    homology_basis_cycles,
    homology_dims,
    is_cycle,
    term_multidegree,
)
from .monomials import (
    MonomialIdeal,
    _fresh_label,
    VariableSpace,
    format_ideal,
    format_monomial,
    insert_variable,
    minimalize,
    one_step_polarize_ideal,
    polarize_ideal,
    polarize_monomial,
    polarized_space,
)


@dataclass(frozen=True)
class PolarizationContext:
    source: VariableSpace
    bounds: tuple  # c_i = max_{u in G(I)} deg_{x_i} u
    target: VariableSpace

    @classmethod
    def for_ideal(cls, I: MonomialIdeal) -> "PolarizationContext":
        c = I.max_degrees()
        return cls(I.space, c, polarized_space(I.space, c))

    def letter(self, i: int, j: int) -> int:
        """Target index of x_{i, j+1} (both 0-based)."""
        return self.target.polarization_map[i][j]


def _polar_module(module: CoefficientModule, ctx: PolarizationContext) -> CoefficientModule:
    if module.kind == koszul.FREE:
        return CoefficientModule.free(ctx.target)
    pol = MonomialIdeal(ctx.target, tuple(sorted(polarize_monomial(u, ctx.target) for u in module.ideal)))
    return CoefficientModule(module.kind, pol)


def polarize_term(u, J, ctx: PolarizationContext):
    deg = term_multidegree(u, J)
    for i, (d, c) in enumerate(zip(deg, ctx.bounds)):
        if d > c:
            raise PreconditionError(
                f"multidegree {d} in {ctx.source.labels[i]} exceeds the polarization bound {c}"
            )
    return polarize_monomial(u, ctx.target), tuple(ctx.letter(j, u[j]) for j in J)


def polarize_element(f: KoszulElement, ctx: Optional[PolarizationContext] = None) -> KoszulElement:
    """f^pol = sum lambda_J (u_J e_J)^pol; ctx defaults to the module's ideal."""
    if ctx is None:
        ctx = PolarizationContext.for_ideal(f.module.ideal)
    module = _polar_module(f.module, ctx)
    terms = {}
    for (u, J), c in f.terms.items():
        key = polarize_term(u, J, ctx)
        terms[key] = terms.get(key, 0) + c
    return KoszulElement(module, terms, check=False)


# ---------------------------------------------------------------------------
# 1-step polarization of cycles


def _require_cycle(z: KoszulElement, field: FieldConfig):
    if not is_cycle(z, field):
        raise PreconditionError("input is not a cycle")


def one_step_polarize_cycle(z: KoszulElement, i: int, field: FieldConfig = DEFAULT_FIELD,
                            position: Optional[int] = None) -> KoszulElement:
    """z' over the 1-step polarization I' of I with respect to x_i.

    A fresh variable y (Koszul letter f) is inserted at ``position``
    (default directly after x_i).  For a term u e_J with a = deg_{x_i} u:

    * a >= 2: u -> (u / x_i) y, J unchanged;
    * a == 1 and i in J: the factor e_i is replaced by f in place;
    * otherwise the term is unchanged.

    When deg_{x_i} z <= 2 these are exactly the three textbook cases.  For
    deg_{x_i} z >= 3 replacing e_i by f would leave coefficients outside I',
    and the first rule is what keeps z' inside K(I') (see tests).
    """
    _require_cycle(z, field)
    z.multidegree()
    module = z.module
    pos = i + 1 if position is None else position
    if module.kind == koszul.FREE:
        labels = list(module.space.labels)
        labels.insert(pos, _fresh_label(labels, labels[i]))
        target = CoefficientModule.free(VariableSpace(tuple(labels)))
    else:
        I1, _ = one_step_polarize_ideal(module.ideal, i, pos)
        target = CoefficientModule(module.kind, I1)
    shift = lambda j: j + 1 if j >= pos else j  # noqa: E731
    y_letter = pos
    terms = {}
    for (u, J), c in z.terms.items():
        a = u[i]
        w = list(u)
        if a >= 2:
            w[i] -= 1
            w = insert_variable(tuple(w), pos, 1)
            word = tuple(shift(j) for j in J)
            sign = 1
        else:
            w = insert_variable(tuple(w), pos, 0)
            letters = [y_letter if (j == i and a == 1) else shift(j) for j in J]
            word, sign = _sort_sign(letters)
        terms[(w, word)] = terms.get((w, word), 0) + sign * c
    return KoszulElement(target, terms)


def specialize_one_step(zp: KoszulElement, i: int, position: int, module: CoefficientModule) -> KoszulElement:
    """The comparison isomorphism for the non-zerodivisor y - x_i.

    Writing z' = (f - e_i) ^ w_0 + w_1, the class of z' goes to that of w_1
    modulo (y - x_i): replace f by e_i, substitute y = x_i and drop y.
    """
    unshift = lambda j: j - 1 if j > position else j  # noqa: E731
    terms = {}
    for (u, J), c in zp.terms.items():
        w = list(u)
        w[i if i < position else i + 1] += w[position]
        del w[position]
        letters = [i if j == position else unshift(j) for j in J]
        word, sign = _sort_sign(letters)
        if word is None:
            continue
        key = (tuple(w), word)
        terms[key] = terms.get(key, 0) + sign * c
    return KoszulElement(module, terms, check=False)


def polarize_by_steps(z: KoszulElement, field: FieldConfig = DEFAULT_FIELD) -> KoszulElement:
    """Full polarization of a cycle as a composition of 1-step polarizations.

    The fresh variables for x_i are appended to its block, so the block
    (x_i, y_1, y_2, ...) is renamed to (x_i1, x_i2, x_i3, ...) at the end.
    """
    I = z.module.ideal
    c = I.max_degrees()
    blocks = [[i] for i in range(I.nvars)]
    cur = z
    for i in range(I.nvars):
        for _ in range(max(c[i] - 1, 0)):
            xi = blocks[i][0]
            pos = blocks[i][-1] + 1
            cur = one_step_polarize_cycle(cur, xi, field, position=pos)
            for b in blocks:
                for t, idx in enumerate(b):
                    if idx >= pos:
                        b[t] = idx + 1
            blocks[i].append(pos)
    ctx = PolarizationContext.for_ideal(I)
    rename = {}
    for i, block in enumerate(blocks):
        for t, idx in enumerate(block):
            if t < c[i]:
                rename[idx] = ctx.letter(i, t)
    terms = {}
    for (u, J), coeff in cur.terms.items():
        w = [0] * ctx.target.count
        for idx, e in enumerate(u):
            if e:
                if idx not in rename:
                    raise PreconditionError("cycle uses a variable absent from every generator")
                w[rename[idx]] = e
        word, sign = _sort_sign([rename[j] for j in J])
        key = (tuple(w), word)
        terms[key] = terms.get(key, 0) + sign * coeff
    return KoszulElement(_polar_module(z.module, ctx), terms, check=False)


# ---------------------------------------------------------------------------
# comparison isomorphism


def _drop_variable_module(module: CoefficientModule, v: int) -> CoefficientModule:
    labels = module.space.labels[:v] + module.space.labels[v + 1:]
    space = VariableSpace(labels)
    if module.kind == koszul.FREE:
        return CoefficientModule.free(space)
    gens = [g[:v] + g[v + 1:] for g in module.ideal]
    return CoefficientModule(module.kind, minimalize(gens, space))


def comparison_reduce(z: KoszulElement, v: int, field: FieldConfig = DEFAULT_FIELD) -> KoszulElement:
    """Image of [z] under H_i(x; M) -> H_i(x without x_v; M / x_v M).

    Write z = e_v ^ z_0 + z_1 and reduce the coefficients of z_1 modulo x_v.
    x_v must be a non-zerodivisor on M; this is checked conservatively by
    requiring x_v to be absent from every generator.
    """
    module = z.module
    if not 0 <= v < module.nvars:
        raise PreconditionError(f"variable index {v} out of range")
    if any(g[v] for g in module.ideal):
        raise PreconditionError(
            f"{module.space.labels[v]} occurs in a generator; cannot certify it is a non-zerodivisor"
        )
    _require_cycle(z, field)
    target = _drop_variable_module(module, v)
    terms = {}
    for (u, J), c in z.terms.items():
        if v in J or u[v]:
            continue
        key = (u[:v] + u[v + 1:], tuple(j - 1 if j > v else j for j in J))
        terms[key] = terms.get(key, 0) + c
    return KoszulElement(target, terms, check=False)


# ---------------------------------------------------------------------------
# whisker graphs


def whisker_hn_basis(G: SimpleGraph) -> list:
    """x_S e_{V-S} ^ f_S over S*/I(G*), one per maximal independent set S.

    f_i is the Koszul letter of y_i (index n + i - 1).
    """
    n = G.n
    module = CoefficientModule.quotient(whisker_ideal(G))
    out = []
    for S in maximal_independent_sets(G):
        u = [0] * (2 * n)
        for i in S:
            u[i - 1] = 1
        rest = [j - 1 for j in G.vertices if j not in S]
        fs = [n + i - 1 for i in S]
        out.append(KoszulElement.term(module, tuple(u), rest + fs))
    return out


# ---------------------------------------------------------------------------
# verification of the polarized basis


@dataclass
class PolarizationReport:
    ideal: str
    i: int
    r: int
    dims_by_degree: dict = field(default_factory=dict)
    passed: bool = True
    witness_failures: list = field(default_factory=list)
    kind: str = koszul.IDEAL

    def as_dict(self) -> dict:
        return {
            "ideal": self.ideal,
            "i": self.i,
            "r": self.r,
            "dims_by_degree": self.dims_by_degree,
            "pass": self.passed,
            "witness_failures": self.witness_failures,
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2, sort_keys=True)


def verify_polarized_basis(I: MonomialIdeal, i: int, field: FieldConfig = DEFAULT_FIELD,
                           kind: str = koszul.IDEAL) -> PolarizationReport:
    """Polarize a basis of H_i(x; M) and check it is a basis of H_i(x^pol; M^pol)."""
    cycles = homology_basis_cycles(I, i, field, kind)
    ctx = PolarizationContext.for_ideal(I)
    pol_cycles = [polarize_element(z, ctx) for z in cycles]
    pol_ideal, _ = polarize_ideal(I)
    report = PolarizationReport(format_ideal(I).strip(), i, len(cycles), kind=kind)
    for z, zp in zip(cycles, pol_cycles):
        if not is_cycle(zp, field):
            report.witness_failures.append(f"not a cycle after polarization: {z}")
    dims = homology_dims(CoefficientModule(kind, pol_ideal), field)
    total = 0
    for a, h in sorted(dims.items()):
        if h.get(i):
            report.dims_by_degree[format_monomial(a, pol_ideal.space)] = h[i]
            total += h[i]
    if total != len(cycles):
        report.witness_failures.append(f"dim H_{i} after polarization is {total}, expected {len(cycles)}")
    if pol_cycles and not report.witness_failures and not classes_independent(pol_cycles, field):
        report.witness_failures.append("polarized classes are linearly dependent")
    report.passed = not report.witness_failures
    return report
