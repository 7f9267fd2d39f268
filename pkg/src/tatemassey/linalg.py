"""Dense Gaussian elimination over GF(2) and GF(4).

Matrices are ``np.uint8`` arrays whose entries are field elements in the
int encoding of :mod:`tatemassey.fields`.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .fields import GF2, Field


def _as_array(M) -> np.ndarray:
    return np.array(M, dtype=np.uint8, ndmin=2)


def rref(M, field: Field = GF2, ncols: int | None = None):
    """Row reduce ``M`` in place of a copy; only the first ``ncols`` columns pivot.

    Returns ``(R, pivots)`` with ``pivots[i]`` the pivot column of row ``i``.
    """
    R = _as_array(M).copy()
    nrows, total = R.shape
    if ncols is None:
        ncols = total
    mul = field.mul_table
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        if r == nrows:
            break
        nz = np.flatnonzero(R[r:, col])
        if nz.size == 0:
            continue
        p = r + int(nz[0])
        if p != r:
            R[[r, p]] = R[[p, r]]
        lead = int(R[r, col])
        if lead != 1:
            R[r] = mul[field.inv(lead), R[r]]
        others = np.flatnonzero(R[:, col])
        others = others[others != r]
        if others.size:
            if field.q == 2:
                R[others] ^= R[r]
            else:
                R[others] ^= mul[R[others, col][:, None], R[r][None, :]]
        pivots.append(col)
        r += 1
    return R, pivots


def rank(M, field: Field = GF2) -> int:
    A = _as_array(M)
    if A.size == 0:
        return 0
    return len(rref(A, field)[1])


def nullspace(M, field: Field = GF2) -> np.ndarray:
    """Basis (as rows) of ``{v : M v = 0}``."""
    A = _as_array(M)
    n = A.shape[1]
    if A.shape[0] == 0:
        return np.eye(n, dtype=np.uint8)
    R, pivots = rref(A, field)
    free = [c for c in range(n) if c not in set(pivots)]
    basis = np.zeros((len(free), n), dtype=np.uint8)
    for k, f in enumerate(free):
        basis[k, f] = 1
        for i, pc in enumerate(pivots):
            # char 2: -R[i, f] == R[i, f]
            basis[k, pc] = R[i, f]
    return basis


def row_space_basis(M, field: Field = GF2) -> np.ndarray:
    A = _as_array(M)
    if A.size == 0:
        return np.zeros((0, A.shape[1]), dtype=np.uint8)
    R, pivots = rref(A, field)
    return R[: len(pivots)]


@dataclass
class SolveResult:
    """Outcome of solving ``M v = b``.

    When infeasible, ``certificate`` is a row vector ``y`` with ``y M = 0``
    and ``y b = 1``.
    """

    feasible: bool
    solution: np.ndarray | None
    certificate: np.ndarray | None
    rank: int

    def check(self, M, b, field: Field = GF2) -> bool:
        M = _as_array(M)
        b = np.asarray(b, dtype=np.uint8).reshape(-1)
        if self.feasible:
            return bool(np.array_equal(matvec(M, self.solution, field), b))
        y = self.certificate
        return not matvec(M.T, y, field).any() and dot(y, b, field) == 1


def dot(u, v, field: Field = GF2) -> int:
    u = np.asarray(u, dtype=np.uint8)
    v = np.asarray(v, dtype=np.uint8)
    if field.q == 2:
        return int(np.bitwise_and(u, v).sum() & 1)
    prods = field.mul_table[u, v]
    return int(np.bitwise_xor.reduce(prods)) if prods.size else 0


def matvec(M, v, field: Field = GF2) -> np.ndarray:
    M = _as_array(M)
    v = np.asarray(v, dtype=np.uint8).reshape(-1)
    if field.q == 2:
        return ((M.astype(np.int64) @ v.astype(np.int64)) & 1).astype(np.uint8)
    prods = field.mul_table[M, v[None, :]]
    if prods.shape[1] == 0:
        return np.zeros(M.shape[0], dtype=np.uint8)
    return np.bitwise_xor.reduce(prods, axis=1)


def solve(M, b, field: Field = GF2) -> SolveResult:
    """Solve ``M v = b``; on failure return a left null-vector certificate."""
    M = _as_array(M)
    m, n = M.shape
    b = np.asarray(b, dtype=np.uint8).reshape(m, 1)
    aug = np.concatenate([M, b, np.eye(m, dtype=np.uint8)], axis=1)
    R, pivots = rref(aug, field, ncols=n)
    rk = len(pivots)
    # rows below the pivots have a zero M-part
    for i in range(rk, m):
        if R[i, n]:
            y = R[i, n + 1:]
            c = int(R[i, n])
            if c != 1:
                y = field.mul_table[field.inv(c), y]
            return SolveResult(False, None, y.astype(np.uint8), rk)
    v = np.zeros(n, dtype=np.uint8)
    for i, pc in enumerate(pivots):
        v[pc] = R[i, n]
    return SolveResult(True, v, None, rk)
