"""Exact linear algebra over GF(p) on int64 numpy arrays."""

from __future__ import annotations

import numpy as np

MAX_PRIME = 2**31 - 1  # keeps every product of residues inside int64


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


def check_prime(p: int) -> int:
    if p > MAX_PRIME:
        raise ValueError(f"modulus {p} too large for int64 elimination (max {MAX_PRIME})")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    return p


def rref(M, p: int):
    """Reduced row echelon form of M over GF(p); returns (R, pivot_columns)."""
    R = np.array(M, dtype=np.int64) % p
    rows, cols = R.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(R[r:, c])
        if nz.size == 0:
            continue
        pr = r + int(nz[0])
        if pr != r:
            R[[r, pr]] = R[[pr, r]]
        inv = pow(int(R[r, c]), p - 2, p)
        if inv != 1:
            R[r] = (R[r] * inv) % p
        others = np.flatnonzero(R[:, c])
        others = others[others != r]
        if others.size:
            R[others] = (R[others] - np.outer(R[others, c], R[r])) % p
        pivots.append(c)
        r += 1
    return R, pivots


def rank(M, p: int) -> int:
    M = np.asarray(M)
    if M.size == 0:
        return 0
    if M.shape[0] > M.shape[1]:
        M = M.T
    return len(rref(M, p)[1])


def nullspace(M, p: int) -> np.ndarray:
    """Rows form a basis of {x : M x = 0} over GF(p), in RREF-derived order."""
    M = np.asarray(M, dtype=np.int64)
    rows, cols = M.shape
    if rows == 0:
        return np.eye(cols, dtype=np.int64)
    R, pivots = rref(M, p)
    free = [c for c in range(cols) if c not in set(pivots)]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for t, f in enumerate(free):
        basis[t, f] = 1
        for r, pc in enumerate(pivots):
            basis[t, pc] = (-R[r, f]) % p
    return basis


def in_column_space(M, v, p: int) -> bool:
    M = np.asarray(M, dtype=np.int64)
    v = np.asarray(v, dtype=np.int64).reshape(-1, 1)
    if M.size == 0:
        return not np.any(v % p)
    return rank(np.hstack([M, v]), p) == rank(M, p)


def centered(values, p: int) -> list:
    """Residues mapped into (-p/2, p/2]."""
    out = []
    for x in np.asarray(values).ravel().tolist():
        x %= p
        out.append(x - p if x > p // 2 else x)
    return out
