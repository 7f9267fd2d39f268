"""The 4-periodic complete resolution of k over kQ_4t and its endomorphism dga.

Free modules ``P_j = F^{r_j}`` with ranks (1, 2, 2, 1) for j = 0..3 mod 4.
Maps of free right modules are matrices over kG acting from the left, so
composition is matrix product.  A degree-n element of the dga is a family
``f_j : P_{j+n} -> P_j``; only 4- and 8-periodic families occur, so a family
is stored as one period of components.

Everything here lives in characteristic 2, so the signs of the dga
differential drop out: ``(df)_j = d f_{j+1} + f_j d``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import lcm

import numpy as np

from . import linalg
from .fields import GF2
from .group_algebra import AlgebraElement, ConfigError, GroupConfig, kg_matmul, special
from .tate_ring import RingElement, basis, variant_of

RANKS = (1, 2, 2, 1)


def rank(j: int) -> int:
    return RANKS[j % 4]


class KGMatrix:
    """A matrix over kG, stored as an array of shape (rows, cols, 4t)."""

    __slots__ = ("t", "arr")

    def __init__(self, t: int, arr):
        arr = np.array(arr, dtype=np.uint8)
        if arr.ndim != 3 or arr.shape[2] != 4 * t:
            raise ConfigError(f"bad KGMatrix array shape {arr.shape} for t={t}")
        arr.setflags(write=False)
        self.t = t
        self.arr = arr

    @classmethod
    def from_entries(cls, cfg: GroupConfig, rows: list[list]) -> "KGMatrix":
        """Build from nested lists of AlgebraElements or ints (0/1)."""
        n = cfg.order
        out = np.zeros((len(rows), len(rows[0]) if rows else 0, n), dtype=np.uint8)
        for i, row in enumerate(rows):
            for j, e in enumerate(row):
                if isinstance(e, int):
                    e = AlgebraElement.one(cfg) * e
                out[i, j] = e.coeffs
        return cls(cfg.t, out)

    @classmethod
    def zeros(cls, t: int, rows: int, cols: int) -> "KGMatrix":
        return cls(t, np.zeros((rows, cols, 4 * t), dtype=np.uint8))

    @classmethod
    def identity(cls, t: int, size: int) -> "KGMatrix":
        arr = np.zeros((size, size, 4 * t), dtype=np.uint8)
        for i in range(size):
            arr[i, i, 0] = 1
        return cls(t, arr)

    @property
    def shape(self) -> tuple[int, int]:
        return self.arr.shape[0], self.arr.shape[1]

    def __matmul__(self, other: "KGMatrix") -> "KGMatrix":
        return KGMatrix(self.t, kg_matmul(self.arr, other.arr, self.t))

    def __add__(self, other: "KGMatrix") -> "KGMatrix":
        if self.shape != other.shape:
            raise ConfigError(f"cannot add matrices of shapes {self.shape} and {other.shape}")
        return KGMatrix(self.t, self.arr ^ other.arr)

    def __eq__(self, other) -> bool:
        return isinstance(other, KGMatrix) and self.shape == other.shape and np.array_equal(self.arr, other.arr)

    def __hash__(self) -> int:
        return hash((self.shape, self.arr.tobytes()))

    def is_zero(self) -> bool:
        return not self.arr.any()

    def entry(self, cfg: GroupConfig, i: int, j: int) -> AlgebraElement:
        return AlgebraElement(cfg, self.arr[i, j])

    def klinear(self, cfg: GroupConfig) -> np.ndarray:
        """The k-linear matrix of the map ``F^cols -> F^rows``."""
        n = cfg.order
        r, c = self.shape
        out = np.zeros((r * n, c * n), dtype=np.uint8)
        for i in range(r):
            for j in range(c):
                out[i * n:(i + 1) * n, j * n:(j + 1) * n] = AlgebraElement(cfg, self.arr[i, j]).left_matrix()
        return out

    def augmented(self) -> np.ndarray:
        """Entrywise augmentation, as a (rows, cols) array over the field."""
        return np.bitwise_xor.reduce(self.arr, axis=2) if self.arr.shape[2] else np.zeros(self.shape, np.uint8)

    def format(self, cfg: GroupConfig) -> list[list[str]]:
        return [[str(self.entry(cfg, i, j)) for j in range(self.shape[1])] for i in range(self.shape[0])]

    def __repr__(self) -> str:
        return f"KGMatrix(shape={self.shape}, t={self.t})"


# -- complex ----------------------------------------------------------------


@dataclass(frozen=True)
class PeriodicComplex:
    """The resolution; ``boundary[j % 4]`` is ``d_j : P_j -> P_{j-1}``."""

    cfg: GroupConfig
    boundary: tuple[KGMatrix, KGMatrix, KGMatrix, KGMatrix] = field(repr=False)

    def rank(self, j: int) -> int:
        return rank(j)

    def d(self, j: int) -> KGMatrix:
        return self.boundary[j % 4]


@lru_cache(maxsize=None)
def build_resolution(cfg: GroupConfig) -> PeriodicComplex:
    t = cfg.t
    a, b, c, N = (special(k, cfg) for k in "abcN")
    M = lambda rows: KGMatrix.from_entries(cfg, rows)  # noqa: E731
    boundary = (
        M([[N]]),
        M([[a, b]]),
        M([[a ** (t - 1), c], [b, a]]),
        M([[a], [c]]),
    )
    return PeriodicComplex(cfg, boundary)


def check_complex(P: PeriodicComplex) -> list[dict]:
    """d^2 = 0 and exactness (dim ker d_j = dim im d_{j+1}) at the four spots."""
    cfg = P.cfg
    n = cfg.order
    out = []
    for j in range(4):
        dd = P.d(j) @ P.d(j + 1)
        kmat_j = P.d(j).klinear(cfg)
        kmat_next = P.d(j + 1).klinear(cfg)
        dim_ker = n * P.rank(j) - linalg.rank(kmat_j, GF2)
        dim_im = linalg.rank(kmat_next, GF2)
        out.append(
            {
                "spot": j,
                "d_squared_zero": dd.is_zero(),
                "dim_ker": int(dim_ker),
                "dim_im": int(dim_im),
                "exact": dim_ker == dim_im,
            }
        )
    return out


# -- dga elements -------------------------------------------------------------


class PeriodicMap:
    """A degree-``degree`` family ``f_j : P_{j+degree} -> P_j`` with finite period."""

    __slots__ = ("cfg", "degree", "period", "components")

    def __init__(self, cfg: GroupConfig, degree: int, components):
        components = tuple(components)
        period = len(components)
        if period not in (1, 2, 4, 8):
            raise ConfigError(f"unsupported period {period}")
        if period < 4:
            components = components * (4 // period)
            period = 4
        for j, comp in enumerate(components):
            want = (rank(j), rank(j + degree))
            if comp.shape != want:
                raise ConfigError(f"component {j} of a degree-{degree} map has shape {comp.shape}, expected {want}")
        self.cfg = cfg
        self.degree = degree
        self.period = period
        self.components = components

    def __getitem__(self, j: int) -> KGMatrix:
        return self.components[j % self.period]

    @classmethod
    def zero(cls, cfg: GroupConfig, degree: int, period: int = 4) -> "PeriodicMap":
        return cls(cfg, degree, [KGMatrix.zeros(cfg.t, rank(j), rank(j + degree)) for j in range(period)])

    @classmethod
    def identity(cls, cfg: GroupConfig) -> "PeriodicMap":
        return cls(cfg, 0, [KGMatrix.identity(cfg.t, rank(j)) for j in range(4)])

    @classmethod
    def shift(cls, cfg: GroupConfig, power: int = 1) -> "PeriodicMap":
        """``s^power``: the identity matrices viewed as a degree-4*power family."""
        return cls(cfg, 4 * power, [KGMatrix.identity(cfg.t, rank(j)) for j in range(4)])

    def _common(self, other: "PeriodicMap") -> int:
        if self.cfg.t != other.cfg.t:
            raise ConfigError("maps over different resolutions")
        return lcm(self.period, other.period)

    def __add__(self, other: "PeriodicMap") -> "PeriodicMap":
        if other.degree != self.degree:
            raise ConfigError(f"cannot add maps of degrees {self.degree} and {other.degree}")
        p = self._common(other)
        return PeriodicMap(self.cfg, self.degree, [self[j] + other[j] for j in range(p)])

    __sub__ = __add__

    def __mul__(self, other: "PeriodicMap") -> "PeriodicMap":
        return compose(self, other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PeriodicMap) or other.degree != self.degree:
            return False
        p = self._common(other)
        return all(self[j] == other[j] for j in range(p))

    def __hash__(self) -> int:
        return hash((self.degree, tuple(hash(self[j]) for j in range(8))))

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.components)

    def reduced(self) -> "PeriodicMap":
        """Same map, stored with period 4 when that suffices."""
        if self.period == 8 and all(self[j] == self[j + 4] for j in range(4)):
            return PeriodicMap(self.cfg, self.degree, self.components[:4])
        return self

    def conjugate_by_shift(self) -> "PeriodicMap":
        """``s f s^-1``, whose j-th component is ``f_{j+4}``."""
        return PeriodicMap(self.cfg, self.degree, [self[j + 4] for j in range(self.period)])

    def __repr__(self) -> str:
        return f"PeriodicMap(degree={self.degree}, period={self.period}, t={self.cfg.t})"


def compose(f: PeriodicMap, g: PeriodicMap) -> PeriodicMap:
    """``(f g)_j = f_j g_{j + deg f}``."""
    p = f._common(g)
    return PeriodicMap(f.cfg, f.degree + g.degree, [f[j] @ g[j + f.degree] for j in range(p)])


def dga_differential(f: PeriodicMap) -> PeriodicMap:
    P = build_resolution(f.cfg)
    n = f.degree
    comps = [P.d(j + 1) @ f[j + 1] + f[j] @ P.d(j + n + 1) for j in range(f.period)]
    return PeriodicMap(f.cfg, n + 1, comps)


def is_cocycle(f: PeriodicMap) -> bool:
    return dga_differential(f).is_zero()


def class_map(f: PeriodicMap) -> RingElement:
    """The class of ``eps o f_0`` read through the fixed dual basis of degree ``deg f``."""
    variant = variant_of(f.cfg.t)
    functional = f[0].augmented()[0]
    out = RingElement.zero(variant)
    for c, b in zip(functional, basis(f.degree, variant)):
        if c:
            out = out + b.scale(int(c))
    return out


# -- standard maps ------------------------------------------------------------


def _standard(cfg: GroupConfig) -> dict[str, PeriodicMap]:
    t = cfg.t
    a, b, c = (special(k, cfg) for k in "abc")
    g = special("g", cfg)
    ginv, hinv = special("g^-1", cfg), special("h^-1", cfg)
    M = lambda rows: KGMatrix.from_entries(cfg, rows)  # noqa: E731
    maps = {}
    maps["x"] = PeriodicMap(cfg, 1, [
        M([[1, 0]]),
        M([[a ** (t - 2), 1], [0, g]]),
        M([[1], [1]]),
        M([[a ** (2 * t - 2) * b]]),
    ])
    maps["y"] = PeriodicMap(cfg, 1, [
        M([[0, 1]]),
        M([[0, 1], [1, 0]]),
        M([[0], [1]]),
        M([[a ** (2 * t - 1)]]),
    ])
    maps["p"] = PeriodicMap(cfg, 1, [
        M([[0, 0]]),
        M([[0, 1], [0, 0]]),
        M([[0], [1]]),
        M([[a ** (2 * t - 2)]]),
    ])
    maps["s"] = PeriodicMap.shift(cfg, 1)
    maps["S"] = PeriodicMap.shift(cfg, -1)
    y2 = compose(maps["y"], maps["y"])
    w_prime = PeriodicMap(cfg, 2, [
        M([[0, 0]]),
        M([[0], [0]]),
        M([[b * hinv], [a ** (t - 1) * hinv]]),
        M([[c * ginv * hinv, a ** (t - 1) * hinv]]),
    ])
    maps["w"] = _eight_periodic(w_prime, y2)
    if t == 2:
        # the correction is forced to be x (see shifted_homotopy); with it
        # the corner entry must be a^2 + ab
        r_prime = PeriodicMap(cfg, 1, [
            M([[0, 0]]),
            M([[0, 0], [0, 0]]),
            M([[0], [0]]),
            M([[a**2 + a * b]]),
        ])
        maps["r"] = _eight_periodic(r_prime, maps["x"])
    else:
        v_prime = PeriodicMap(cfg, 1, [
            M([[0, 0]]),
            M([[a ** (t - 3), 0], [0, 0]]),
            M([[0], [0]]),
            M([[special("u", cfg)]]),
        ])
        maps["v"] = _eight_periodic(v_prime, maps["x"])
    return maps


def _eight_periodic(base: PeriodicMap, correction: PeriodicMap) -> PeriodicMap:
    """Components ``base_j`` for j = 0..3 and ``base_j + correction_j`` for j = 4..7."""
    comps = [base[j] for j in range(4)] + [base[j] + correction[j] for j in range(4, 8)]
    return PeriodicMap(base.cfg, base.degree, comps)


@lru_cache(maxsize=None)
def _standard_cached(cfg: GroupConfig) -> dict[str, PeriodicMap]:
    return _standard(cfg)


def standard_map(name: str, cfg: GroupConfig) -> PeriodicMap:
    """One of x, y, s, S (= s^-1), p, w, r (t = 2 only), v (t >= 4 only)."""
    maps = _standard_cached(cfg)
    if name == "r" and cfg.t != 2:
        raise ConfigError("the homotopy r is only defined for t = 2")
    if name == "v" and cfg.t == 2:
        raise ConfigError("the homotopy v is only defined for t >= 4")
    if name not in maps:
        raise ConfigError(f"unknown standard map {name!r}")
    return maps[name]


def word(expr: str, cfg: GroupConfig) -> PeriodicMap:
    """Evaluate a sum of words such as ``"xr + ry + w"`` or ``"0"``.

    Letters name standard maps and are composed left to right; ``1`` is the
    identity and ``x^2`` repeats a letter.
    """
    expr = expr.replace(" ", "")
    total = None
    for term in expr.split("+"):
        if term == "0":
            continue
        prod = None
        k = 0
        while k < len(term):
            letter = term[k]
            k += 1
            power = 1
            if k < len(term) and term[k] == "^":
                k += 1
                start = k
                while k < len(term) and term[k].isdigit():
                    k += 1
                power = int(term[start:k])
            factor = PeriodicMap.identity(cfg) if letter == "1" else standard_map(letter, cfg)
            for _ in range(power):
                prod = factor if prod is None else compose(prod, factor)
        total = prod if total is None else total + prod
    return total


# -- homotopy solver ----------------------------------------------------------


@dataclass
class HomotopyResult:
    feasible: bool
    witness: PeriodicMap | None
    unknowns: int
    equations: int
    rank: int
    certificate: np.ndarray | None = field(default=None, repr=False)


def solve_homotopy(target: PeriodicMap, period: int = 8, class_vanishing: bool = False) -> HomotopyResult:
    """Find a ``period``-periodic ``h`` of degree ``deg(target) - 1`` with ``dh = target``.

    With ``class_vanishing`` the extra constraints ``eps o h_{4i} = 0`` (for
    every multiple of 4 inside one period) are imposed.  Infeasibility comes
    with a left null-vector certificate of the linear system.
    """
    if period not in (4, 8):
        raise ConfigError("period must be 4 or 8")
    if period % target.period:
        raise ConfigError(f"target has period {target.period}, which does not divide {period}")
    if not is_cocycle(target):
        raise ValueError("target is not a cocycle")
    cfg = target.cfg
    P = build_resolution(cfg)
    n = cfg.order
    deg = target.degree - 1

    # unknown layout: component j, entry (r, c), group element k
    offsets = []
    total = 0
    for j in range(period):
        offsets.append(total)
        total += rank(j) * rank(j + deg) * n

    def var(j, r, c):
        j %= period
        return offsets[j] + (r * rank(j + deg) + c) * n

    blocks = []
    rhs = []
    for j in range(period):
        rows_out, cols_out = rank(j), rank(j + deg + 1)
        # (dh)_j = d_{j+1} h_{j+1} + h_j d_{j+deg+1}
        dl = P.d(j + 1)
        dr = P.d(j + deg + 1)
        for r in range(rows_out):
            for c in range(cols_out):
                eq = np.zeros((n, total), dtype=np.uint8)
                for m in range(rank(j + 1)):
                    L = dl.entry(cfg, r, m).left_matrix()
                    v = var(j + 1, m, c)
                    eq[:, v:v + n] ^= L
                for m in range(rank(j + deg)):
                    R = dr.entry(cfg, m, c).right_matrix()
                    v = var(j, r, m)
                    eq[:, v:v + n] ^= R
                blocks.append(eq)
                rhs.append(target[j].arr[r, c])
    if class_vanishing:
        for j in range(0, period, 4):
            for c in range(rank(j + deg)):
                eq = np.zeros((1, total), dtype=np.uint8)
                v = var(j, 0, c)
                eq[0, v:v + n] = 1
                blocks.append(eq)
                rhs.append(np.zeros(1, dtype=np.uint8))
    A = np.concatenate(blocks, axis=0)
    bvec = np.concatenate(rhs)
    res = linalg.solve(A, bvec, GF2)
    if not res.feasible:
        return HomotopyResult(False, None, total, A.shape[0], res.rank, res.certificate)
    sol = res.solution
    comps = []
    for j in range(period):
        rr, cc = rank(j), rank(j + deg)
        arr = sol[offsets[j]:offsets[j] + rr * cc * n].reshape(rr, cc, n)
        comps.append(KGMatrix(cfg.t, arr))
    witness = PeriodicMap(cfg, deg, comps)
    return HomotopyResult(True, witness, total, A.shape[0], res.rank)


def shifted_homotopy(target: PeriodicMap, correction: PeriodicMap) -> HomotopyResult:
    """Search for an 8-periodic ``h`` with ``dh = target`` and ``s h + h s = correction s``.

    Such an ``h`` is ``h' + c`` where ``c`` is ``correction`` on j = 4..7 and
    zero on j = 0..3, and ``h'`` is 4-periodic with ``dh' = target + dc``.
    """
    cfg = target.cfg
    zero = PeriodicMap.zero(cfg, correction.degree)
    c = _eight_periodic(zero, correction)
    rhs = (target + dga_differential(c)).reduced()
    if rhs.period != 4:
        # d of a 4-periodic map is 4-periodic
        return HomotopyResult(False, None, 0, 0, 0)
    res = solve_homotopy(rhs, 4)
    if res.feasible:
        res.witness = res.witness + c
    return res
