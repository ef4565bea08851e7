"""Exponent-vector monomials, monomial ideals and their polarization.

A monomial is a plain tuple of nonnegative integers; the variable names live
in a :class:`VariableSpace` carried by the ideal.  Ideals are stored by their
minimal generators in lexicographic order, so equal ideals compare equal.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Iterator, Optional, Sequence

import numpy as np

from .errors import DimensionMismatchError, LatticeCapacityError, PreconditionError

Monomial = tuple  # tuple[int, ...]

DEFAULT_LATTICE_CAP = 200_000


@dataclass(frozen=True)
class VariableSpace:
    labels: tuple
    # polarization_map[i] lists the polarized variables that x_i was split into
    polarization_map: Optional[tuple] = None

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(self.labels))
        if len(set(self.labels)) != len(self.labels):
            raise ValueError(f"variable labels must be distinct: {self.labels}")
        if self.polarization_map is not None:
            pmap = tuple(tuple(block) for block in self.polarization_map)
            flat = sorted(j for block in pmap for j in block)
            if flat != list(range(len(self.labels))):
                raise ValueError("polarization_map must partition the variables")
            object.__setattr__(self, "polarization_map", pmap)

    @property
    def count(self) -> int:
        return len(self.labels)

    def __len__(self):
        return len(self.labels)

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(f"unknown variable {label!r}") from None

    @classmethod
    def standard(cls, n: int, prefix: str = "x") -> "VariableSpace":
        return cls(tuple(f"{prefix}{i}" for i in range(1, n + 1)))

    @classmethod
    def whisker(cls, n: int) -> "VariableSpace":
        """Variables x1..xn, y1..yn; y_i sits at index n + i - 1."""
        return cls(tuple(f"x{i}" for i in range(1, n + 1)) + tuple(f"y{i}" for i in range(1, n + 1)))


# ---------------------------------------------------------------------------
# monomial arithmetic on exponent tuples


def unit(n: int) -> Monomial:
    return (0,) * n


def variable(n: int, i: int, power: int = 1) -> Monomial:
    v = [0] * n
    v[i] = power
    return tuple(v)


def divides(u: Monomial, v: Monomial) -> bool:
    return all(a <= b for a, b in zip(u, v))


def mul(u: Monomial, v: Monomial) -> Monomial:
    return tuple(a + b for a, b in zip(u, v))


def div(u: Monomial, v: Monomial) -> Monomial:
    """u / v, assuming v divides u."""
    out = tuple(a - b for a, b in zip(u, v))
    if min(out, default=0) < 0:
        raise PreconditionError(f"{v} does not divide {u}")
    return out


def lcm(u: Monomial, v: Monomial) -> Monomial:
    return tuple(max(a, b) for a, b in zip(u, v))


def gcd(u: Monomial, v: Monomial) -> Monomial:
    return tuple(min(a, b) for a, b in zip(u, v))


def total_degree(u: Monomial) -> int:
    return sum(u)


def support(u: Monomial) -> tuple:
    return tuple(i for i, a in enumerate(u) if a)


def is_squarefree(u: Monomial) -> bool:
    return all(a <= 1 for a in u)


def format_monomial(u: Monomial, space: VariableSpace) -> str:
    parts = []
    for label, a in zip(space.labels, u):
        if a == 1:
            parts.append(label)
        elif a > 1:
            parts.append(f"{label}^{a}")
    return "*".join(parts) if parts else "1"


_TOKEN = re.compile(r"^\s*([A-Za-z_][A-Za-z0-9_']*)\s*(?:\^\s*(\d+))?\s*$")


def parse_monomial(text: str, space: VariableSpace) -> Monomial:
    exps = [0] * space.count
    text = text.strip()
    if text == "1":
        return tuple(exps)
    for token in text.split("*"):
        m = _TOKEN.match(token)
        if not m:
            raise ValueError(f"cannot parse monomial factor {token!r}")
        exps[space.index(m.group(1))] += int(m.group(2) or 1)
    return tuple(exps)


# ---------------------------------------------------------------------------
# ideals


@dataclass(frozen=True)
class MonomialIdeal:
    """Monomial ideal given by its minimal generators G(I).

    Build instances through :func:`minimalize`; the constructor trusts that
    ``generators`` is already minimal and lex-sorted.  The zero ideal has no
    generators, the unit ideal has the single generator ``1``.
    """

    space: VariableSpace
    generators: tuple = field(default=())

    def __post_init__(self):
        for g in self.generators:
            if len(g) != self.space.count:
                raise DimensionMismatchError(
                    f"generator {g} has length {len(g)}, space has {self.space.count} variables"
                )

    def __len__(self):
        return len(self.generators)

    def __iter__(self) -> Iterator[Monomial]:
        return iter(self.generators)

    @property
    def nvars(self) -> int:
        return self.space.count

    def is_zero(self) -> bool:
        return not self.generators

    def is_unit(self) -> bool:
        return any(sum(g) == 0 for g in self.generators)

    def contains(self, u: Monomial) -> bool:
        return any(divides(g, u) for g in self.generators)

    __contains__ = contains

    def max_degrees(self) -> tuple:
        """The vector c with c_i the largest x_i-exponent among the generators."""
        if not self.generators:
            return unit(self.nvars)
        return tuple(max(col) for col in zip(*self.generators))

    def generators_dividing(self, a: Monomial) -> list:
        return [g for g in self.generators if divides(g, a)]

    def as_array(self) -> np.ndarray:
        return np.array(self.generators, dtype=np.int64).reshape(len(self.generators), self.nvars)

    def to_text(self) -> str:
        return format_ideal(self)

    def __str__(self):
        if not self.generators:
            return "(0)"
        return "(" + ", ".join(format_monomial(g, self.space) for g in self.generators) + ")"


def _minimal_subset(gens: Iterable[Monomial]) -> list:
    cands = sorted(set(gens), key=lambda u: (sum(u), u))
    kept: list = []
    if len(cands) <= 64:
        for u in cands:
            if not any(divides(v, u) for v in kept):
                kept.append(u)
        return kept
    n = len(cands[0])
    buf = np.empty((len(cands), n), dtype=np.int64)
    count = 0
    for u in cands:
        if count and (buf[:count] <= np.asarray(u)).all(axis=1).any():
            continue
        buf[count] = u
        count += 1
        kept.append(u)
    return kept


def minimalize(gens: Iterable[Monomial], space: Optional[VariableSpace] = None) -> MonomialIdeal:
    """Divisibility-minimal subset of ``gens`` as an ideal.

    >>> str(minimalize([(1, 1), (2, 1)]))
    '(x1*x2)'
    """
    gens = [tuple(int(a) for a in g) for g in gens]
    lengths = {len(g) for g in gens}
    if space is not None:
        lengths.add(space.count)
    if len(lengths) > 1:
        raise DimensionMismatchError(f"monomials of different lengths: {sorted(lengths)}")
    if space is None:
        if not gens:
            raise PreconditionError("cannot infer the variable space of an empty generator set")
        space = VariableSpace.standard(lengths.pop())
    return MonomialIdeal(space, tuple(sorted(_minimal_subset(gens))))


def zero_ideal(space: VariableSpace) -> MonomialIdeal:
    return MonomialIdeal(space, ())


def unit_ideal(space: VariableSpace) -> MonomialIdeal:
    return MonomialIdeal(space, (unit(space.count),))


def _check_same_space(I: MonomialIdeal, J: MonomialIdeal):
    if I.space.count != J.space.count:
        raise DimensionMismatchError(f"ideals live in {I.space.count} and {J.space.count} variables")


def ideal_sum(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _check_same_space(I, J)
    return minimalize(I.generators + J.generators, I.space)


def ideal_product(I: MonomialIdeal, J: MonomialIdeal, bound: Optional[Monomial] = None) -> MonomialIdeal:
    _check_same_space(I, J)
    prods = {mul(u, v) for u in I.generators for v in J.generators}
    if bound is not None:
        prods = {w for w in prods if divides(w, bound)}
    return minimalize(prods, I.space)


def ideal_power(I: MonomialIdeal, k: int, bound: Optional[Monomial] = None) -> MonomialIdeal:
    """Minimal generators of I^k, by k-fold generator products with pruning.

    With ``bound`` only the generators dividing that monomial are kept, which
    is all that membership tests below ``bound`` need.
    """
    if k < 0:
        raise PreconditionError(f"negative power {k}")
    if k == 0:
        return unit_ideal(I.space)
    base = I.generators if bound is None else tuple(g for g in I.generators if divides(g, bound))
    current = MonomialIdeal(I.space, tuple(sorted(base)))
    step = MonomialIdeal(I.space, current.generators)
    for _ in range(k - 1):
        current = ideal_product(current, step, bound)
    return current


def colon(I: MonomialIdeal, m: Monomial) -> MonomialIdeal:
    """(I : m), generated by u / gcd(u, m) for u in G(I)."""
    if len(m) != I.nvars:
        raise DimensionMismatchError(f"monomial {m} does not live in {I.nvars} variables")
    return minimalize((div(u, gcd(u, m)) for u in I.generators), I.space)


def substitute_zero(I: MonomialIdeal, v: int) -> MonomialIdeal:
    """Set x_v = 0: drop every generator divisible by x_v."""
    if not 0 <= v < I.nvars:
        raise PreconditionError(f"variable index {v} out of range")
    return MonomialIdeal(I.space, tuple(g for g in I.generators if g[v] == 0))


# ---------------------------------------------------------------------------
# polarization


def polarized_space(space: VariableSpace, c: Sequence[int]) -> VariableSpace:
    """Space of x_{ij}, 1 <= j <= c_i, ordered x_11..x_1c1, x_21, ..."""
    labels = []
    blocks = []
    for label, ci in zip(space.labels, c):
        start = len(labels)
        labels.extend(f"{label}_{j}" for j in range(1, ci + 1))
        blocks.append(tuple(range(start, start + ci)))
    return VariableSpace(tuple(labels), tuple(blocks))


def polarize_monomial(u: Monomial, target: VariableSpace) -> Monomial:
    out = [0] * target.count
    for block, a in zip(target.polarization_map, u):
        if a > len(block):
            raise PreconditionError(f"exponent {a} exceeds polarization bound {len(block)}")
        for j in block[:a]:
            out[j] = 1
    return tuple(out)


def depolarize_monomial(w: Monomial, target: VariableSpace) -> Monomial:
    """Substitute x_{ij} -> x_i."""
    return tuple(sum(w[j] for j in block) for block in target.polarization_map)


def polarize_ideal(I: MonomialIdeal):
    """Return ``(I^pol, space)`` with the generators u^pol, u in G(I)."""
    space = polarized_space(I.space, I.max_degrees())
    pol = MonomialIdeal(space, tuple(sorted(polarize_monomial(u, space) for u in I.generators)))
    return pol, space


def one_step_polarize_ideal(I: MonomialIdeal, i: int, position: Optional[int] = None):
    """1-step polarization of I with respect to x_i.

    Every generator u with x_i^2 | u becomes (u / x_i) * y for a fresh
    variable y, inserted at ``position`` (default: directly after x_i).
    Returns ``(I', space')``; the index of y in ``space'`` is ``position``.
    """
    n = I.nvars
    if not 0 <= i < n:
        raise PreconditionError(f"variable index {i} out of range")
    pos = i + 1 if position is None else position
    if not 0 <= pos <= n:
        raise PreconditionError(f"insertion position {pos} out of range")
    labels = list(I.space.labels)
    fresh = _fresh_label(labels, labels[i])
    labels.insert(pos, fresh)
    space = VariableSpace(tuple(labels))
    gens = []
    for u in I.generators:
        w = list(u)
        y = 0
        if u[i] >= 2:
            w[i] -= 1
            y = 1
        w.insert(pos, y)
        gens.append(tuple(w))
    return minimalize(gens, space), space


def _fresh_label(labels, base):
    j = 2
    while f"{base}_{j}" in labels:
        j += 1
    return f"{base}_{j}"


def insert_variable(u: Monomial, pos: int, exponent: int = 0) -> Monomial:
    return u[:pos] + (exponent,) + u[pos:]


# ---------------------------------------------------------------------------
# candidate multidegrees


def _unique_rows(L: np.ndarray) -> np.ndarray:
    if L.shape[0] == 0:
        return L
    base = int(L.max()) + 1
    ncols = L.shape[1]
    if ncols and ncols * np.log2(max(base, 2)) < 62:
        weights = base ** np.arange(ncols - 1, -1, -1, dtype=np.int64)
        _, idx = np.unique(L @ weights, return_index=True)
        return L[np.sort(idx)]
    return np.unique(L, axis=0)


def lcm_lattice_array(I: MonomialIdeal, cap: int = DEFAULT_LATTICE_CAP) -> np.ndarray:
    """Rows are the lcms of all subsets of G(I), the unit included."""
    n = I.nvars
    L = np.zeros((1, n), dtype=np.int64)
    for g in I.generators:
        L = _unique_rows(np.concatenate([L, np.maximum(L, np.asarray(g, dtype=np.int64))]))
        if L.shape[0] > cap:
            raise LatticeCapacityError(L.shape[0], cap)
    return L


def lcm_lattice(I: MonomialIdeal, cap: int = DEFAULT_LATTICE_CAP) -> set:
    return {tuple(int(a) for a in row) for row in lcm_lattice_array(I, cap)}


def exponent_box(I: MonomialIdeal) -> Iterator[Monomial]:
    """All a with a_j in {0} u {deg_{x_j} u : u in G(I)} for every j."""
    values = [sorted({0} | {g[j] for g in I.generators}) for j in range(I.nvars)]
    return product(*values)


def exponent_box_array(I: MonomialIdeal) -> np.ndarray:
    return np.array(list(exponent_box(I)), dtype=np.int64).reshape(-1, I.nvars)


# ---------------------------------------------------------------------------
# text format


def format_ideal(I: MonomialIdeal) -> str:
    lines = ["vars: " + " ".join(I.space.labels)]
    lines += [format_monomial(g, I.space) for g in I.generators]
    return "\n".join(lines) + "\n"


def parse_ideal(text: str) -> MonomialIdeal:
    """Parse the ideal text format (``vars:`` header, one monomial per line)."""
    space = None
    gens = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("vars:"):
            space = VariableSpace(tuple(line[len("vars:"):].split()))
            continue
        if space is None:
            raise ValueError("ideal file must declare its variables with a 'vars:' header first")
        gens.append(parse_monomial(line, space))
    if space is None:
        raise ValueError("missing 'vars:' header")
    return minimalize(gens, space)
