"""Matrices over the Tate ring, matric Massey products and realizability.

A ``LambdaMatrix`` with row set I and column set J represents a map
``Lambda^J -> Lambda^I``; entry (i, j) is homogeneous of degree |i| - |j|.
Everything reduces to finite linear algebra because each graded piece of
the ring has dimension at most 2 and multiplication by s is invertible.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import product

import numpy as np

from . import linalg
from .fields import GF2, GF4, Field, get_field
from .group_algebra import GroupConfig
from .secondary import SecondaryProduct
from .tate_ring import (
    BasisMonomial,
    RingElement,
    coords,
    dimension,
    from_coords,
    monomials_in_degree,
    parse,
    variant_of,
)


@dataclass(frozen=True)
class GradedSet:
    degrees: tuple[int, ...]

    def __init__(self, degrees):
        object.__setattr__(self, "degrees", tuple(int(d) for d in degrees))

    def __len__(self) -> int:
        return len(self.degrees)

    def __iter__(self):
        return iter(self.degrees)

    def __getitem__(self, k: int) -> int:
        return self.degrees[k]

    def shift(self, n: int) -> "GradedSet":
        return GradedSet(d + n for d in self.degrees)


class LambdaMatrix:
    def __init__(self, rows, cols, entries, variant: str, check: bool = True):
        self.rows = rows if isinstance(rows, GradedSet) else GradedSet(rows)
        self.cols = cols if isinstance(cols, GradedSet) else GradedSet(cols)
        self.variant = variant
        self.entries = [list(r) for r in entries]
        if len(self.entries) != len(self.rows) or any(len(r) != len(self.cols) for r in self.entries):
            raise ValueError("entry table does not match the row and column sets")
        if check:
            for i, j in product(range(len(self.rows)), range(len(self.cols))):
                e = self.entries[i][j]
                want = self.rows[i] - self.cols[j]
                if e and e.degrees() != {want}:
                    raise ValueError(f"entry ({i},{j}) = {e} is not homogeneous of degree {want}")

    # -- construction ---------------------------------------------------------
    @classmethod
    def zeros(cls, rows, cols, variant: str) -> "LambdaMatrix":
        rows, cols = GradedSet(rows), GradedSet(cols)
        z = RingElement.zero(variant)
        return cls(rows, cols, [[z] * len(cols) for _ in rows], variant)

    @classmethod
    def identity(cls, rows, variant: str) -> "LambdaMatrix":
        rows = GradedSet(rows)
        out = cls.zeros(rows, rows, variant)
        for k in range(len(rows)):
            out.entries[k][k] = RingElement.one(variant)
        return out

    @classmethod
    def parse(cls, rows, cols, entries: list[list[str]], variant: str) -> "LambdaMatrix":
        return cls(rows, cols, [[parse(e, variant) for e in r] for r in entries], variant)

    @classmethod
    def from_json(cls, data: dict, variant: str) -> "LambdaMatrix":
        try:
            return cls.parse(data["rows"], data["cols"], data["entries"], variant)
        except KeyError as exc:
            raise ValueError(f"matrix JSON needs rows, cols and entries; missing {exc}") from None

    def to_json(self) -> dict:
        return {
            "rows": list(self.rows.degrees),
            "cols": list(self.cols.degrees),
            "entries": [[str(e) for e in r] for r in self.entries],
        }

    # -- structure --------------------------------------------------------------
    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.cols)

    def shifted(self, n: int) -> "LambdaMatrix":
        """Same entries between ``I[n]`` and ``J[n]``."""
        return LambdaMatrix(self.rows.shift(n), self.cols.shift(n), self.entries, self.variant, check=False)

    def is_zero(self) -> bool:
        return all(not e for r in self.entries for e in r)

    def __eq__(self, other) -> bool:
        return (isinstance(other, LambdaMatrix) and self.rows == other.rows and self.cols == other.cols
                and self.entries == other.entries)

    def __add__(self, other: "LambdaMatrix") -> "LambdaMatrix":
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("cannot add matrices with different graded sets")
        ent = [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.entries, other.entries)]
        return LambdaMatrix(self.rows, self.cols, ent, self.variant, check=False)

    def __matmul__(self, other: "LambdaMatrix") -> "LambdaMatrix":
        return lam_mul(self, other)

    def trace(self) -> RingElement:
        if len(self.rows) != len(self.cols):
            raise ValueError("trace of a non-square matrix")
        out = RingElement.zero(self.variant)
        for k in range(len(self.rows)):
            out = out + self.entries[k][k]
        return out

    def coefficient_matrix(self, name: str) -> list[list[RingElement]]:
        """The k[s, s^-1]-matrix of coefficients of the canonical monomial ``name``."""
        out = []
        for r in self.entries:
            row = []
            for e in r:
                terms = {(mon.i, (0, 0)): c for mon, c in e.monomials() if mon.b == name}
                row.append(RingElement(self.variant, terms))
            out.append(row)
        return out

    def __str__(self) -> str:
        return "[" + "; ".join(", ".join(str(e) for e in r) for r in self.entries) + "]"

    __repr__ = __str__


def _raw_mul(A: list[list[RingElement]], B: list[list[RingElement]], variant: str) -> list[list[RingElement]]:
    n, m = len(A), len(B[0]) if B else 0
    out = [[RingElement.zero(variant) for _ in range(m)] for _ in range(n)]
    for i in range(n):
        for k, a in enumerate(A[i]):
            if not a:
                continue
            for j in range(m):
                b = B[k][j]
                if b:
                    out[i][j] = out[i][j] + a * b
    return out


def lam_mul(A: LambdaMatrix, B: LambdaMatrix) -> LambdaMatrix:
    if A.cols != B.rows:
        raise ValueError(f"column set {A.cols.degrees} does not match row set {B.rows.degrees}")
    return LambdaMatrix(A.rows, B.cols, _raw_mul(A.entries, B.entries, A.variant), A.variant, check=False)


def _scale_raw(A, r: RingElement):
    return [[e * r for e in row] for row in A]


def _add_raw(A, B):
    return [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(A, B)]


# -- Massey evaluation --------------------------------------------------------------


def m_matrix(kind: str, A: LambdaMatrix, B: LambdaMatrix, C: LambdaMatrix, cfg: GroupConfig) -> LambdaMatrix:
    """``m(A,B,C)_{i,l} = sum_{j,k} m(a_ij, b_jk, c_kl)`` with row set I[-1]."""
    if A.cols != B.rows or B.cols != C.rows:
        raise ValueError("triple is not composable")
    sp = SecondaryProduct(cfg, kind)
    v = A.variant
    out = [[RingElement.zero(v) for _ in C.cols] for _ in A.rows]
    for i, j, k in product(range(len(A.rows)), range(len(B.rows)), range(len(C.rows))):
        a, b = A.entries[i][j], B.entries[j][k]
        if not a or not b:
            continue
        for l in range(len(C.cols)):
            c = C.entries[k][l]
            if c:
                out[i][l] = out[i][l] + sp(a, b, c)
    return LambdaMatrix(A.rows.shift(-1), C.cols, out, v)


# -- linear algebra over graded pieces ---------------------------------------------


def _field_for(*mats) -> Field:
    for M in mats:
        for row in M.entries:
            for e in row:
                if any(c > 1 for c in e.terms.values()):
                    return GF4
    return GF2


def _mult_matrix(r: RingElement, d_in: int, d_out: int) -> np.ndarray:
    """Matrix of ``u -> r u`` from degree ``d_in`` to ``d_out`` (monomial coordinates)."""
    cols = []
    for mu in monomials_in_degree(d_in):
        img = r * RingElement.from_basis(r.variant, mu)
        cols.append(coords(img, d_out) if img else [0] * dimension(d_out))
    if not cols:
        return np.zeros((dimension(d_out), 0), dtype=np.uint8)
    return np.array(cols, dtype=np.uint8).T.reshape(dimension(d_out), len(cols))


@dataclass
class TripleVerdict:
    value: LambdaMatrix
    in_indeterminacy: bool
    witness: tuple[LambdaMatrix, LambdaMatrix] | None = None
    certificate: np.ndarray | None = field(default=None, repr=False)
    rank: int = 0
    unknowns: int = 0

    def to_json(self) -> dict:
        out = {"value": self.value.to_json(), "in_indeterminacy": self.in_indeterminacy,
               "rank": self.rank, "unknowns": self.unknowns}
        if self.witness is not None:
            out["witness"] = {"X": self.witness[0].to_json(), "Y": self.witness[1].to_json()}
        return out


def indeterminacy_member(E: LambdaMatrix, A: LambdaMatrix, C: LambdaMatrix, fld=None) -> TripleVerdict:
    """Decide ``E = A X + Y C`` with X in Lambda^{J[-1],L} and Y in Lambda^{I[-1],K}."""
    v = E.variant
    I1, L = E.rows, E.cols
    if I1 != A.rows.shift(-1) or L != C.cols:
        raise ValueError("E must have row set I[-1] and the column set of C")
    J1, K = A.cols.shift(-1), C.rows
    fld = get_field(fld) if fld is not None else _field_for(E, A, C)

    # unknown layout: X entries then Y entries, each over its monomial basis
    unknowns = []
    for j, l in product(range(len(J1)), range(len(L))):
        for mu in monomials_in_degree(J1[j] - L[l]):
            unknowns.append(("X", j, l, mu))
    for i, k in product(range(len(I1)), range(len(K))):
        for mu in monomials_in_degree(I1[i] - K[k]):
            unknowns.append(("Y", i, k, mu))
    col_of = {u: n for n, u in enumerate(unknowns)}

    blocks, rhs = [], []
    for i, l in product(range(len(I1)), range(len(L))):
        d = I1[i] - L[l]
        block = np.zeros((dimension(d), len(unknowns)), dtype=np.uint8)
        for j in range(len(J1)):
            a = A.entries[i][j]
            if a:
                dj = J1[j] - L[l]
                M = _mult_matrix(a, dj, d)
                for c, mu in enumerate(monomials_in_degree(dj)):
                    block[:, col_of[("X", j, l, mu)]] ^= M[:, c]
        for k in range(len(K)):
            cc = C.entries[k][l]
            if cc:
                dk = I1[i] - K[k]
                M = _mult_matrix(cc, dk, d)
                for c, mu in enumerate(monomials_in_degree(dk)):
                    block[:, col_of[("Y", i, k, mu)]] ^= M[:, c]
        blocks.append(block)
        e = E.entries[i][l]
        rhs.extend(coords(e, d) if e else [0] * dimension(d))
    if not blocks:
        return TripleVerdict(E, True, (LambdaMatrix.zeros(J1, L, v), LambdaMatrix.zeros(I1, K, v)))
    M = np.concatenate(blocks, axis=0)
    b = np.array(rhs, dtype=np.uint8)
    if not unknowns:
        member = not b.any()
        return TripleVerdict(E, member, (LambdaMatrix.zeros(J1, L, v), LambdaMatrix.zeros(I1, K, v))
                             if member else None, None, 0, 0)
    res = linalg.solve(M, b, fld)
    if not res.feasible:
        return TripleVerdict(E, False, None, res.certificate, res.rank, len(unknowns))
    X = LambdaMatrix.zeros(J1, L, v)
    Y = LambdaMatrix.zeros(I1, K, v)
    for n, (which, p, q, mu) in enumerate(unknowns):
        c = int(res.solution[n])
        if c:
            target = X if which == "X" else Y
            target.entries[p][q] = target.entries[p][q] + RingElement.from_basis(v, mu, c)
    return TripleVerdict(E, True, (X, Y), None, res.rank, len(unknowns))


# -- kernels and minimal generators ----------------------------------------------------


def _vector_space_layout(degrees, e: int) -> list[tuple[int, BasisMonomial]]:
    """Coordinates of vectors (v_j) with v_j of degree |j| + e."""
    return [(j, mu) for j, d in enumerate(degrees) for mu in monomials_in_degree(d + e)]


def _apply_matrix(A: LambdaMatrix, e: int) -> np.ndarray:
    """k-linear matrix of A on the degree-e piece (inputs have degree |j| + e)."""
    src = _vector_space_layout(A.cols, e)
    dst = _vector_space_layout(A.rows, e)
    dst_index = {x: n for n, x in enumerate(dst)}
    out = np.zeros((len(dst), len(src)), dtype=np.uint8)
    for c, (j, mu) in enumerate(src):
        base = RingElement.from_basis(A.variant, mu)
        for i in range(len(A.rows)):
            a = A.entries[i][j]
            if not a:
                continue
            img = a * base
            for mon, coef in img.monomials():
                out[dst_index[(i, mon)], c] ^= coef
    return out


def _vectors_to_elements(vec, degrees, e: int, variant: str) -> list[RingElement]:
    layout = _vector_space_layout(degrees, e)
    out = [RingElement.zero(variant) for _ in degrees]
    for c, (j, mu) in zip(vec, layout):
        if c:
            out[j] = out[j] + RingElement.from_basis(variant, mu, int(c))
    return out


def _elements_to_vector(elems, degrees, e: int) -> np.ndarray:
    layout = _vector_space_layout(degrees, e)
    index = {x: n for n, x in enumerate(layout)}
    out = np.zeros(len(layout), dtype=np.uint8)
    for j, u in enumerate(elems):
        for mon, c in u.monomials():
            out[index[(j, mon)]] ^= c
    return out


def kernel_basis(A: LambdaMatrix, e: int, fld: Field = GF2) -> np.ndarray:
    M = _apply_matrix(A, e)
    n = M.shape[1]
    if n == 0:
        return np.zeros((0, 0), dtype=np.uint8)
    if M.shape[0] == 0:
        return np.eye(n, dtype=np.uint8)
    return linalg.nullspace(M, fld)


def image_basis(B: LambdaMatrix, e: int, fld: Field = GF2) -> np.ndarray:
    """Basis of the degree-e piece of the image of B, in the layout of B's row set."""
    vecs = []
    for k, dk in enumerate(B.cols):
        col = [B.entries[j][k] for j in range(len(B.rows))]
        # multiply column k by every monomial of degree e - |k|... rows want |j| + e
        for mu in monomials_in_degree(e + dk):
            r = RingElement.from_basis(B.variant, mu)
            vecs.append(_elements_to_vector([c * r for c in col], B.rows, e))
    n = len(_vector_space_layout(B.rows, e))
    if not vecs:
        return np.zeros((0, n), dtype=np.uint8)
    return linalg.row_space_basis(np.array(vecs, dtype=np.uint8), fld)


def minimal_kernel_generators(A: LambdaMatrix, lo: int = 0, fld: Field | None = None) -> LambdaMatrix:
    """A matrix B whose columns minimally generate ker(A).

    Generators are found in internal degrees ``lo .. lo+3`` (a generator in
    internal degree e sits in column degree -e); s-periodicity covers the
    rest.  A generator is kept only if it is not in ``x K + y K`` of the
    previous degree plus the generators already chosen.
    """
    fld = fld or _field_for(A)
    v = A.variant
    x, y = parse("x", v), parse("y", v)
    J = A.cols
    cols, col_degrees = [], []
    for e in range(lo, lo + 4):
        K = kernel_basis(A, e, fld)
        if K.size == 0 or K.shape[0] == 0:
            continue
        prev = kernel_basis(A, e - 1, fld)
        decomposable = []
        for vec in prev:
            elems = _vectors_to_elements(vec, J, e - 1, v)
            for g in (x, y):
                decomposable.append(_elements_to_vector([u * g for u in elems], J, e))
        span = list(decomposable)
        base_rank = linalg.rank(np.array(span, dtype=np.uint8), fld) if span else 0
        for vec in K:
            trial = span + [vec]
            r = linalg.rank(np.array(trial, dtype=np.uint8), fld)
            if r > base_rank:
                span, base_rank = trial, r
                cols.append(_vectors_to_elements(vec, J, e, v))
                col_degrees.append(-e)
    entries = [[cols[k][j] for k in range(len(cols))] for j in range(len(J))]
    return LambdaMatrix(J, GradedSet(col_degrees), entries, v)


def is_exact_at(A: LambdaMatrix, B: LambdaMatrix, lo: int = 0, fld: Field | None = None) -> dict:
    """AB = 0 and dim ker A = dim im B in four consecutive internal degrees."""
    fld = fld or _field_for(A, B)
    zero = lam_mul(A, B).is_zero()
    dims = []
    for e in range(lo, lo + 4):
        k = kernel_basis(A, e, fld)
        kd = 0 if k.size == 0 else k.shape[0]
        ib = image_basis(B, e, fld)
        dims.append((e, kd, ib.shape[0]))
    return {"composite_zero": zero, "dims": dims, "exact": zero and all(a == b for _, a, b in dims)}


def prune_to_minimal(A: LambdaMatrix, fld: Field | None = None) -> LambdaMatrix:
    """Drop columns lying in the submodule generated by the remaining ones."""
    fld = fld or _field_for(A)
    keep = list(range(len(A.cols)))
    changed = True
    while changed:
        changed = False
        for j in list(keep):
            col = [A.entries[i][j] for i in range(len(A.rows))]
            if all(not c for c in col):
                keep.remove(j)
                changed = True
                continue
            e = -A.cols[j]
            others = [k for k in keep if k != j]
            sub = LambdaMatrix(A.rows, [A.cols[k] for k in others],
                               [[A.entries[i][k] for k in others] for i in range(len(A.rows))], A.variant, check=False)
            span = image_basis(sub, e, fld)
            target = _elements_to_vector(col, A.rows, e)
            if span.shape[0] and linalg.rank(np.vstack([span, target]), fld) == span.shape[0]:
                keep.remove(j)
                changed = True
    return LambdaMatrix(A.rows, [A.cols[k] for k in keep],
                        [[A.entries[i][k] for k in keep] for i in range(len(A.rows))], A.variant)


# -- realizability ------------------------------------------------------------------------

# internal-degree windows for the kernel generators, chosen so that with row
# degrees in 0..3 and relation degrees in -1..2 the next two generator sets
# land in -8..-5 and -15..-12
KERNEL_WINDOW_B = 5
KERNEL_WINDOW_C = 12


def closed_form_witnesses(A: LambdaMatrix, B: LambdaMatrix, C: LambdaMatrix) -> tuple[LambdaMatrix, LambdaMatrix]:
    """``W = A_x B_y x + A_{x^2} B_y x^2`` and ``V = B_y C_{y^2} y^2``."""
    v = A.variant
    x, x2, y2 = parse("x", v), parse("x^2", v), parse("y^2", v)
    Ax, Ax2 = A.coefficient_matrix("x"), A.coefficient_matrix("x^2")
    By, Cy2 = B.coefficient_matrix("y"), C.coefficient_matrix("y^2")
    W = _add_raw(_scale_raw(_raw_mul(Ax, By, v), x), _scale_raw(_raw_mul(Ax2, By, v), x2))
    V = _scale_raw(_raw_mul(By, Cy2, v), y2)
    return (LambdaMatrix(A.rows.shift(-1), B.cols, W, v), LambdaMatrix(B.rows.shift(-1), C.cols, V, v))


@dataclass
class RealizabilityReport:
    summand_of_realizable: bool
    A: LambdaMatrix
    B: LambdaMatrix
    C: LambdaMatrix
    verdict: TripleVerdict
    exact_AB: dict
    exact_BC: dict
    closed_form: dict | None = None

    def to_json(self) -> dict:
        out = {
            "summand_of_realizable": self.summand_of_realizable,
            "A": self.A.to_json(), "B": self.B.to_json(), "C": self.C.to_json(),
            "verdict": self.verdict.to_json(),
            "exact": bool(self.exact_AB["exact"] and self.exact_BC["exact"]),
        }
        if self.closed_form is not None:
            out["closed_form"] = self.closed_form
        return out


def realizable_summand(A: LambdaMatrix, cfg: GroupConfig, kind: str = "m", lo_b: int = KERNEL_WINDOW_B,
                       lo_c: int = KERNEL_WINDOW_C, fld=None) -> RealizabilityReport:
    """Decide whether coker(A) is a summand of a realizable module.

    Builds an exact triple (A, B, C) from minimal kernel generators and
    tests ``0 in <A,B,C>`` as membership of m(A,B,C) in the indeterminacy.
    """
    fld = get_field(fld) if fld is not None else _field_for(A)
    B = minimal_kernel_generators(A, lo_b, fld)
    C = minimal_kernel_generators(B, lo_c, fld)
    E = m_matrix(kind, A, B, C, cfg)
    verdict = indeterminacy_member(E, A, C, fld)
    report = RealizabilityReport(verdict.in_indeterminacy, A, B, C, verdict,
                                 is_exact_at(A, B, lo_b, fld), is_exact_at(B, C, lo_c, fld))
    if kind in ("m'", "m''", "m~") and cfg.t != 2:
        W, V = closed_form_witnesses(A, B, C)
        mp = m_matrix("m'", A, B, C, cfg)
        rhs = lam_mul(A.shifted(-1), V) + lam_mul(W, C)
        By = B.coefficient_matrix("y")
        Cy = C.coefficient_matrix("y")
        report.closed_form = {
            "W": W.to_json(), "V": V.to_json(),
            "ByCy_zero": all(not e for r in _raw_mul(By, Cy, A.variant) for e in r) if By and Cy else True,
            "mprime_equals_AV_plus_WC": mp == rhs,
            "mtilde_zero": m_matrix("m~", A, B, C, cfg).is_zero(),
        }
    return report


# -- samples and enumerations ---------------------------------------------------------------


def random_element(degree: int, variant: str, rng: random.Random, fld: Field = GF2) -> RingElement:
    mons = monomials_in_degree(degree)
    return from_coords([rng.randrange(fld.q) for _ in mons], degree, variant)


def random_minimal_presentation(variant: str, rng: random.Random, max_size: int = 4,
                                row_degrees=(0, 1, 2, 3), col_degrees=(-1, 0, 1, 2)) -> LambdaMatrix:
    """Random presentation with no unit entries and irredundant columns.

    Entries of degree 0 or 4 would be units (scalar multiples of powers of
    s) and are left zero; all other degrees are filled at random.
    """
    while True:
        n_rows = rng.randint(1, max_size)
        n_cols = rng.randint(1, max_size)
        I = [rng.choice(row_degrees) for _ in range(n_rows)]
        J = [rng.choice(col_degrees) for _ in range(n_cols)]
        entries = []
        for di in I:
            row = []
            for dj in J:
                d = di - dj
                row.append(RingElement.zero(variant) if d % 4 == 0 else random_element(d, variant, rng))
            entries.append(row)
        A = prune_to_minimal(LambdaMatrix(I, J, entries, variant))
        if len(A.cols):
            return A


def nonrealizable_matrix(variant: str = "2") -> LambdaMatrix:
    """The 2x2 presentation [[y, x+y], [x, y]] from degree -1 generators to degree 0."""
    return LambdaMatrix.parse([0, 0], [-1, -1], [["y", "x+y"], ["x", "y"]], variant)


def trace_pairing_matrix(variant: str = "2") -> LambdaMatrix:
    """[[x, y], [x+y, x]], which annihilates the matrix above on both sides."""
    return LambdaMatrix.parse([-1, -1], [-2, -2], [["x", "y"], ["x+y", "x"]], variant)


def homogeneous_elements(degree: int, variant: str, fld: Field = GF2) -> list[RingElement]:
    """All nonzero elements of one degree."""
    mons = monomials_in_degree(degree)
    out = []
    for vec in product(range(fld.q), repeat=len(mons)):
        if any(vec):
            out.append(from_coords(vec, degree, variant))
    return out


def _in_span(target: RingElement, gens: list[RingElement], degree: int, fld: Field) -> bool:
    t = coords(target, degree) if target else [0] * dimension(degree)
    rows = [coords(g, degree) for g in gens if g]
    if not any(t):
        return True
    if not rows:
        return False
    base = linalg.rank(np.array(rows, dtype=np.uint8), fld)
    return linalg.rank(np.array(rows + [t], dtype=np.uint8), fld) == base


def scalar_triple_verdict(a: RingElement, b: RingElement, c: RingElement, cfg: GroupConfig,
                          fld: Field = GF2, kind: str = "m") -> dict:
    """Membership of m(a,b,c) in ``a Lambda + Lambda c`` for a defined 1x1 triple."""
    v = a.variant
    da, db, dc = a.degree, b.degree, c.degree
    defined = not (a * b) and not (b * c)
    out = {"a": str(a), "b": str(b), "c": str(c), "defined": defined}
    if not defined:
        return out
    value = SecondaryProduct(cfg, kind)(a, b, c)
    d = da + db + dc - 1
    gens = [a * RingElement.from_basis(v, mu) for mu in monomials_in_degree(db + dc - 1)]
    gens += [RingElement.from_basis(v, mu) * c for mu in monomials_in_degree(da + db - 1)]
    out["m"] = str(value)
    out["in_indeterminacy"] = _in_span(value, gens, d, fld)
    return out


def enumerate_scalar_triples(cfg: GroupConfig, fld=GF2, degrees=range(-4, 8), kind: str = "m") -> dict:
    """Every defined homogeneous 1x1 triple with degrees in ``degrees``."""
    fld = get_field(fld)
    v = variant_of(cfg.t)
    elems = [u for d in degrees for u in homogeneous_elements(d, v, fld)]
    verdicts, counterexamples, skipped = [], [], 0
    for a, b in product(elems, elems):
        if a * b:
            skipped += len(elems)
            continue
        for c in elems:
            if b * c:
                skipped += 1
                continue
            res = scalar_triple_verdict(a, b, c, cfg, fld, kind)
            verdicts.append(res)
            if not res["in_indeterminacy"]:
                counterexamples.append(res)
    return {"field": fld.name, "elements": len(elems), "defined": len(verdicts), "skipped": skipped,
            "counterexamples": counterexamples}


def random_matrix(rows, cols, variant: str, rng: random.Random, fld: Field = GF2) -> LambdaMatrix:
    rows, cols = GradedSet(rows), GradedSet(cols)
    ent = [[random_element(di - dj, variant, rng, fld) for dj in cols] for di in rows]
    return LambdaMatrix(rows, cols, ent, variant)


def _raw_trace(P, variant: str) -> RingElement:
    out = RingElement.zero(variant)
    for k in range(min(len(P), len(P[0]) if P else 0)):
        out = out + P[k][k]
    return out


def trace_obstruction(E: LambdaMatrix, A: LambdaMatrix, C: LambdaMatrix, D: LambdaMatrix,
                      rng: random.Random, samples: int = 20) -> dict:
    """``tr(E D)`` next to ``tr((A X + Y C) D)`` for random X, Y.

    D annihilates A from the right and C from the left (as raw matrices), so
    the second trace vanishes on the whole indeterminacy.
    """
    v = E.variant
    others = []
    for _ in range(samples):
        X = random_matrix(A.cols.shift(-1), C.cols, v, rng)
        Y = random_matrix(A.rows.shift(-1), C.rows, v, rng)
        Q = lam_mul(A.shifted(-1), X) + lam_mul(Y, C)
        others.append(str(_raw_trace(_raw_mul(Q.entries, D.entries, v), v)))
    return {"trace": str(_raw_trace(_raw_mul(E.entries, D.entries, v), v)), "indeterminacy_traces": sorted(set(others))}
