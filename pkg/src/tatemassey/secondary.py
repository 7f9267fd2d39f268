"""The secondary multiplication on the Tate ring.

A cycle selection ``f1`` and homotopies ``f2`` with
``d f2(b, c) = f1(bc) + f1(b) f1(c)`` give the trilinear map
``m(a, b, c) = C(f1(a) f2(b, c))``, a Hochschild cocycle whose class is the
canonical class gamma.  Everything is computed from the chain-level data in
:mod:`tatemassey.resolution`; the closed-form tables kept here are only used
for comparison.

All chain-level data is defined over GF(2), so tables are built once per t
and reused for GF(4) coefficients by linearity.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product

import numpy as np

from . import linalg
from .fields import GF2, GF4
from .group_algebra import ConfigError, GroupConfig
from .resolution import (
    PeriodicMap,
    class_map,
    compose,
    dga_differential,
    solve_homotopy,
    word,
)
from .tate_ring import (
    MONOMIALS,
    NAMES,
    BasisMonomial,
    RingElement,
    monomials_in_degree,
    parse,
    to_z_form,
    variant_of,
)

KINDS = ("m", "m'", "m''", "m~")
_KIND_ALIASES = {"m": "m", "m'": "m'", "mprime": "m'", "m''": "m''", "mdblprime": "m''",
                 "m~": "m~", "mtilde": "m~"}

# homotopy words; None marks entries left open and filled by the solver
F2_WORDS = {
    "2": {
        ("x", "y"): "r",
        ("x", "x^2"): "xr+ry+w",
        ("x", "y^2"): "ry+w",
        ("x", "x^2y"): "xry+ryy+wy",
        ("y", "x"): "p+r",
        ("y", "x^2"): "px+xp+xy",
        ("y", "y^2"): "w",
        ("y", "x^2y"): "yry+pyy+xw+yw",
        ("x^2", "x"): "xr+ry+w",
        ("x^2", "x^2"): "xrx+ryx+wx",
        ("x^2", "y^2"): "ryy+xw+yw",
        ("x^2", "x^2y"): None,
        ("y^2", "x"): "yp+yr+w+px+xp+xy",
        ("y^2", "y"): "w",
        ("y^2", "x^2"): "yyr+yyp+wx+wy",
        ("y^2", "y^2"): "wy",
        ("y^2", "x^2y"): None,
        ("x^2y", "x"): "xxp+xry+ryy+wy+xxy",
        ("x^2y", "y"): "ryy+xw+yw",
        ("x^2y", "x^2"): None,
        ("x^2y", "y^2"): None,
        ("x^2y", "x^2y"): None,
    },
    "4+": {
        ("x", "y"): "v",
        ("x", "x^2"): "xv",
        ("x", "y^2"): "vy",
        ("x", "x^2y"): "xvy+vyy+xw",
        ("y", "x"): "p+v",
        ("y", "x^2"): "px+xp+xx",
        ("y", "y^2"): "w",
        ("y", "x^2y"): "yvy+pyy+xw",
        ("x^2", "x"): "xv",
        ("x^2", "x^2"): "xxv+xvy+vyy+xw",
        ("x^2", "y^2"): "vyy+xw",
        ("x^2", "x^2y"): "xxvy+xvyy+xxw",
        ("y^2", "x"): "yp+py+vy",
        ("y^2", "y"): "w",
        ("y^2", "x^2"): "yyv+yyp+wx",
        ("y^2", "y^2"): "wy",
        ("y^2", "x^2y"): "yyvy+yypy+wxy",
        ("x^2y", "x"): "xxp+xvy+vyy+xw+xxy",
        ("x^2y", "y"): "vyy+xw",
        ("x^2y", "x^2"): "xxpx+xvyx+vyyx+xwx",
        ("x^2y", "y^2"): "xxw",
        ("x^2y", "x^2y"): "xxyvy+xxpyy+xxxw",
    },
}

# expected values of m on triples of canonical monomials (all others vanish)
CLOSED_FORM_M = {
    "2": {("x", "y", "x"): "x*y", ("x", "y", "x^2"): "x^2*y", ("x^2", "y", "x"): "x^2*y"},
    "4+": {("x", "y", "x"): "x^2", ("x", "y", "x^2"): "x^2*y", ("x^2", "y", "x"): "x^2*y"},
}

# expected classes C(h(b, c)) as tabulated for the two presentations
CLOSED_FORM_H = {
    "2": {
        ("x", "y"): "x+y", ("x", "x^2"): "x^2", ("x", "y^2"): "x^2+y^2", ("x", "x^2y"): "x^2*y",
        ("y", "x"): "x+y", ("y", "y^2"): "y^2",
        ("x^2", "x"): "x^2",
        ("y^2", "x"): "x^2+y^2", ("y^2", "y"): "y^2",
        ("x^2y", "x"): "x^2*y",
    },
    "4+": {
        ("x", "y"): "x", ("x", "x^2"): "x^2", ("x", "y^2"): "x^2", ("x", "x^2y"): "x^2*y",
        ("y", "x"): "x", ("y", "y^2"): "y^2",
        ("x^2", "x"): "x^2",
        ("y^2", "x"): "x^2", ("y^2", "y"): "y^2",
        ("x^2y", "x"): "x^2*y",
    },
}


def _canon(kind: str) -> str:
    if kind not in _KIND_ALIASES:
        raise ValueError(f"unknown kind {kind!r}; expected one of {KINDS}")
    return _KIND_ALIASES[kind]


def _gf2(cfg: GroupConfig) -> GroupConfig:
    return GroupConfig(cfg.t, max_t=cfg.max_t)


def _letters(name: str) -> str:
    """Word in x, y for a canonical monomial name, e.g. 'x^2y' -> 'xxy'."""
    e, d = MONOMIALS[NAMES.index(name)]
    return "x" * e + "y" * d


# -- f1 and f2 -----------------------------------------------------------------


def f1(mon: BasisMonomial, cfg: GroupConfig) -> PeriodicMap:
    """``x^e y^d s^i  ->  xbar^e ybar^d sbar^i``."""
    if not isinstance(mon, BasisMonomial):
        raise TypeError("f1 takes a BasisMonomial")
    cfg = _gf2(cfg)
    body = _letters(mon.b) or "1"
    if mon.i > 0:
        body += "s" * mon.i
    elif mon.i < 0:
        body += "S" * (-mon.i)
    return word(body, cfg)


def f1_element(u: RingElement, cfg: GroupConfig) -> PeriodicMap:
    """f1 extended linearly (GF(2) coefficients only) to a homogeneous element."""
    deg = u.degree
    out = PeriodicMap.zero(_gf2(cfg), 0 if deg is None else deg)
    for mon, c in u.monomials():
        if c != 1:
            raise ValueError("f1_element works with GF(2) coefficients")
        out = out + f1(mon, cfg)
    return out


def f2_target(b: str, c: str, cfg: GroupConfig) -> PeriodicMap:
    """``f1(bc) + f1(b) f1(c)`` for canonical monomials b, c."""
    cfg = _gf2(cfg)
    v = variant_of(cfg.t)
    B, C = BasisMonomial(0, b), BasisMonomial(0, c)
    prod = RingElement.from_basis(v, B) * RingElement.from_basis(v, C)
    fb, fc = f1(B, cfg), f1(C, cfg)
    out = compose(fb, fc)
    if prod:
        out = out + f1_element(prod, cfg)
    return out


@dataclass
class CochainTable:
    """f2 on pairs of canonical monomials; ``completed`` lists solver-filled pairs."""

    cfg: GroupConfig
    entries: dict[tuple[str, str], PeriodicMap]
    completed: set[tuple[str, str]] = field(default_factory=set)
    words: dict[tuple[str, str], str] = field(default_factory=dict)

    def __getitem__(self, pair: tuple[str, str]) -> PeriodicMap:
        return self.entries[pair]


@lru_cache(maxsize=None)
def f2_table(t: int) -> CochainTable:
    cfg = GroupConfig(t, max_t=max(t, 16))
    v = variant_of(t)
    table = CochainTable(cfg, {})
    for b, c in product(NAMES, NAMES):
        deg = sum(MONOMIALS[NAMES.index(b)]) + sum(MONOMIALS[NAMES.index(c)]) - 1
        if b == "1" or c == "1":
            table.entries[(b, c)] = PeriodicMap.zero(cfg, deg)
            table.words[(b, c)] = "0"
            continue
        w = F2_WORDS[v].get((b, c), "0")
        if w is None:
            res = solve_homotopy(f2_target(b, c, cfg), period=8, class_vanishing=True)
            if not res.feasible:
                raise RuntimeError(f"no class-free 8-periodic homotopy for f2({b},{c})")
            table.entries[(b, c)] = res.witness
            table.completed.add((b, c))
            table.words[(b, c)] = "*"
        elif w == "0":
            table.entries[(b, c)] = PeriodicMap.zero(cfg, deg)
            table.words[(b, c)] = "0"
        else:
            table.entries[(b, c)] = word(w, cfg)
            table.words[(b, c)] = w
    return table


def f2(b: str, c: str, cfg: GroupConfig) -> PeriodicMap:
    if b not in NAMES or c not in NAMES:
        raise ValueError(f"f2 is tabulated on canonical monomials, got ({b!r}, {c!r})")
    return f2_table(cfg.t)[(b, c)]


def verify_f2(cfg: GroupConfig) -> list[dict]:
    """Both table invariants (homotopy equation, vanishing class) on all 36 pairs."""
    table = f2_table(cfg.t)
    rows = []
    for b, c in product(NAMES, NAMES):
        F = table[(b, c)]
        rows.append({
            "pair": [b, c],
            "word": table.words[(b, c)],
            "solver_completed": (b, c) in table.completed,
            "homotopy": dga_differential(F) == f2_target(b, c, cfg),
            "class_zero": class_map(F).is_zero(),
        })
    return rows


def h_map(b: str, c: str, cfg: GroupConfig) -> PeriodicMap:
    """``sbar f2(b,c) sbar^-1 + f2(b,c)``: the failure of f2(b,c) to be 4-periodic."""
    F = f2(b, c, cfg)
    return (F.conjugate_by_shift() + F).reduced()


def h_class(b: str, c: str, cfg: GroupConfig) -> RingElement:
    return class_map(h_map(b, c, cfg))


# -- the trilinear map ------------------------------------------------------


@lru_cache(maxsize=None)
def base_tables(t: int) -> tuple[dict, dict]:
    """``C(f1(a) f2(b,c))`` and ``C(f1(a) sbar f2(b,c) sbar^-1)`` on canonical triples.

    Since f2 is 8-periodic and f1 commutes with sbar,
    ``m(s^i a, s^j b, s^k c) = s^(i+j+k) * table[i mod 2][a, b, c]``.
    """
    cfg = GroupConfig(t, max_t=max(t, 16))
    table = f2_table(t)
    even, odd = {}, {}
    for a in NAMES:
        fa = f1(BasisMonomial(0, a), cfg)
        for b, c in product(NAMES, NAMES):
            F = table[(b, c)]
            even[(a, b, c)] = class_map(compose(fa, F))
            odd[(a, b, c)] = class_map(compose(fa, F.conjugate_by_shift()))
    return even, odd


def closed_form_table(variant: str) -> dict:
    out = {}
    for key in product(NAMES, NAMES, NAMES):
        text = CLOSED_FORM_M[variant].get(key)
        out[key] = parse(text, variant) if text else RingElement.zero(variant)
    return out


def _g_value(a_i: int, a_zm: str, b_i: int, b_zm: str, variant: str) -> RingElement:
    """The correcting 2-cochain on z-frame monomials (t >= 4)."""
    if a_i == -1 and a_zm == "x^2":
        if b_zm == "x":
            return parse("z^2", variant).shift(b_i - 1)
        if b_zm == "z":
            return parse("x^2", variant).shift(b_i - 1)
    return RingElement.zero(variant)


def g_cochain(a: RingElement, b: RingElement) -> RingElement:
    """Bilinear extension of ``g(s^-1 x^2, s^i x) = s^(i-1) z^2``, ``g(s^-1 x^2, s^i z) = s^(i-1) x^2``."""
    out = RingElement.zero(a.variant)
    za, zb = to_z_form(a), to_z_form(b)
    for (ia, ma), ca in za.items():
        if not (ia == -1 and ma == "x^2"):
            continue
        for (ib, mb), cb in zb.items():
            val = _g_value(ia, ma, ib, mb, a.variant)
            if val:
                out = out + val.scale(GF4.mul(ca, cb))
    return out


def coboundary(g, a: RingElement, b: RingElement, c: RingElement) -> RingElement:
    """Hochschild coboundary of a 2-cochain (characteristic 2)."""
    return a * g(b, c) + g(a * b, c) + g(a, b * c) + g(a, b) * c


class SecondaryProduct:
    """One of the trilinear maps m, m', m'' = m + m', and m~ = m'' + (coboundary of g).

    ``m'`` is the s-periodic map agreeing with m on canonical triples; ``m~``
    is only defined for t >= 4.
    """

    def __init__(self, cfg: GroupConfig, kind: str = "m"):
        self.kind = _canon(kind)
        self.cfg = _gf2(cfg)
        self.variant = variant_of(cfg.t)
        if self.kind == "m~" and self.variant == "2":
            raise ConfigError("the modified representative m~ is only defined for t >= 4")
        self.even, self.odd = base_tables(cfg.t)

    def s_correction(self) -> dict[tuple[str, str], RingElement]:
        """The table ``C(h(b, c))``; ``m(s, b, c) = C(h(b, c)) s``."""
        return {(b, c): self.odd[("1", b, c)] + self.even[("1", b, c)] for b, c in product(NAMES, NAMES)}

    def on_basis(self, a: BasisMonomial, b: BasisMonomial, c: BasisMonomial) -> RingElement:
        if self.kind == "m~":
            return self(*(RingElement.from_basis(self.variant, x) for x in (a, b, c)))
        return self._raw(a, b, c)

    def _raw(self, a: BasisMonomial, b: BasisMonomial, c: BasisMonomial) -> RingElement:
        key = (a.b, b.b, c.b)
        total = a.i + b.i + c.i
        if self.kind == "m":
            base = self.odd[key] if a.i % 2 else self.even[key]
        elif self.kind == "m'":
            base = self.even[key]
        else:  # m'' and the m'' part of m~
            base = self.odd[key] + self.even[key] if a.i % 2 else RingElement.zero(self.variant)
        return base.shift(total)

    def __call__(self, a: RingElement, b: RingElement, c: RingElement) -> RingElement:
        out = RingElement.zero(self.variant)
        for ma, ca in a.monomials():
            for mb, cb in b.monomials():
                for mc, cc in c.monomials():
                    val = self._raw(ma, mb, mc)
                    if val:
                        out = out + val.scale(GF4.mul(GF4.mul(ca, cb), cc))
        if self.kind == "m~":
            out = out + coboundary(g_cochain, a, b, c)
        return out


def m_value(a: RingElement, b: RingElement, c: RingElement, cfg: GroupConfig, kind: str = "m") -> RingElement:
    return SecondaryProduct(cfg, kind)(a, b, c)


# -- cocycle verification ------------------------------------------------------
#
# Values are stored as arrays over s-exponent slots; each slot holds a 6-bit
# mask over the canonical monomials (GF(2) coefficients).


def _mask_of(u: RingElement, offset: int, size: int) -> np.ndarray:
    out = np.zeros(size, dtype=np.uint8)
    for mon, c in u.monomials():
        if c & ~1:
            raise ValueError("cocycle checks use GF(2) coefficients")
        out[mon.i + offset] ^= 1 << NAMES.index(mon.b)
    return out


@lru_cache(maxsize=None)
def _mul_masks(variant: str) -> np.ndarray:
    """``table[b, mask]``: canonical monomial b times the sum encoded by mask."""
    table = np.zeros((6, 64), dtype=np.uint8)
    mons = [RingElement.from_basis(variant, BasisMonomial(0, n)) for n in NAMES]
    for b in range(6):
        for mask in range(64):
            acc = RingElement.zero(variant)
            for k in range(6):
                if mask >> k & 1:
                    acc = acc + mons[b] * mons[k]
            table[b, mask] = _mask_of(acc, 0, 1)[0]
    return table


def _parity_arrays(tables: tuple[dict, dict]) -> np.ndarray:
    """Stack the even/odd tables as ``arr[parity, a, b, c, slot]`` with slots s^0..s^2."""
    arr = np.zeros((2, 6, 6, 6, 3), dtype=np.uint8)
    for p, tab in enumerate(tables):
        for (a, b, c), val in tab.items():
            arr[p, NAMES.index(a), NAMES.index(b), NAMES.index(c)] = _mask_of(val, 0, 3)
    return arr


def kind_tables(cfg: GroupConfig, kind: str) -> tuple[dict, dict]:
    """Even/odd parity tables of m, m' or m'' (m~ adds a coboundary on top of m'')."""
    kind = _canon(kind)
    even, odd = base_tables(cfg.t)
    zero = RingElement.zero(variant_of(cfg.t))
    if kind == "m":
        return even, odd
    if kind == "m'":
        return even, even
    return {k: zero for k in even}, {k: even[k] + odd[k] for k in even}


def closed_form_tables(variant: str) -> tuple[dict, dict]:
    """Parity tables obtained from the closed-form m and C(h) via m(sa,b,c) = a C(h(b,c)) s + m(a,b,c) s."""
    even = closed_form_table(variant)
    odd = {}
    for a, b, c in even:
        hb = CLOSED_FORM_H[variant].get((b, c))
        val = even[(a, b, c)]
        if hb:
            val = val + RingElement.from_basis(variant, BasisMonomial(0, a)) * parse(hb, variant)
        odd[(a, b, c)] = val
    return even, odd


@dataclass
class CocycleReport:
    kind: str
    window: int
    tuples: int
    failures: int
    examples: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.failures == 0


def _element_index(i: int, b: int, radius: int) -> int:
    return (i + radius) * 6 + b


def cocycle_defects(tables: tuple[dict, dict], variant: str, window: int = 2, extra=None,
                    kind: str = "custom", max_examples: int = 5) -> CocycleReport:
    """Evaluate the characteristic-2 cocycle law on every 4-tuple of ``s^i b`` with ``|i| <= window``.

    ``tables`` gives the values on ``(s^i a, b, c)`` for i even / odd; ``extra``
    optionally adds a further trilinear term, called on basis RingElements and
    only where it may be nonzero (see ``_dg_support``).
    """
    W = window
    R = 2 * W                      # radius of the set closed under pairwise products
    n_small, n_big = 6 * (2 * W + 1), 6 * (2 * R + 1)
    slot0 = 3 * R + 2              # slot index of s^0
    S = 2 * slot0 + 1
    parity = _parity_arrays(tables)
    mul = _mul_masks(variant)

    # values on triples of the big set; the extra index n_big is a zero row
    M = np.zeros((n_big + 1, n_big + 1, n_big + 1, S), dtype=np.uint8)
    for ia in range(-R, R + 1):
        for ib in range(-R, R + 1):
            for ic in range(-R, R + 1):
                tot = ia + ib + ic
                block = parity[ia % 2]
                sa, sb, sc = (_element_index(i, 0, R) for i in (ia, ib, ic))
                M[sa:sa + 6, sb:sb + 6, sc:sc + 6, slot0 + tot:slot0 + tot + 3] = block
    if extra is not None:
        for (ea, eb, ec), val in extra(R):
            M[ea, eb, ec] ^= _mask_of(val, slot0, S)

    small = np.array([_element_index(i, b, R) for i in range(-W, W + 1) for b in range(6)])
    exps = np.array([i for i in range(-W, W + 1) for _ in range(6)])
    mons = np.array([b for _ in range(-W, W + 1) for b in range(6)])

    # products of two small elements as (up to) two big indices
    P = np.full((n_small, n_small, 2), n_big, dtype=np.int64)
    ring = [RingElement.from_basis(variant, BasisMonomial(0, n)) for n in NAMES]
    for p in range(n_small):
        for q in range(n_small):
            prod_ = ring[mons[p]] * ring[mons[q]]
            for k, (mon, _) in enumerate(prod_.monomials()):
                P[p, q, k] = _element_index(exps[p] + exps[q], NAMES.index(mon.b), R)

    def shift_mul(vals, i, b):
        out = np.zeros_like(vals)
        if i >= 0:
            out[..., i:] = vals[..., :S - i]
        else:
            out[..., :S + i] = vals[..., -i:]
        return mul[b][out]

    Ms = M[np.ix_(small, small, small)]                      # (n, n, n, S)
    n = n_small
    total = np.zeros((n, n, n, n, S), dtype=np.uint8)
    for a in range(n):
        total[a] ^= shift_mul(Ms, exps[a], mons[a])           # a m(b,c,d)
        total[:, :, :, a] ^= shift_mul(Ms, exps[a], mons[a])  # m(a,b,c) d
    A = small[:, None, None, None]
    B = small[None, :, None, None]
    C = small[None, None, :, None]
    D = small[None, None, None, :]
    for k in range(2):
        total ^= M[P[:, :, k][:, :, None, None], C, D]        # m(ab,c,d)
        total ^= M[A, P[:, :, k][None, :, :, None], D]        # m(a,bc,d)
        total ^= M[A, B, P[:, :, k][None, None, :, :]]        # m(a,b,cd)
    bad = np.argwhere(total.any(axis=-1))
    examples = []
    for row in bad[:max_examples]:
        examples.append([str(BasisMonomial(int(exps[r]), NAMES[mons[r]])) for r in row])
    return CocycleReport(kind, W, n ** 4, int(len(bad)), examples)


def _dg_support(variant: str):
    """Coboundary of g on big-set triples where it can be nonzero.

    g(u, v) needs a component of u in degree -2, so a triple (a, b, c)
    contributes only when a or b has degree -2 or |a| + |b| = -2.
    """
    def extra(R):
        elems = [(i, b) for i in range(-R, R + 1) for b in range(6)]
        ring = {e: RingElement.from_basis(variant, BasisMonomial(e[0], NAMES[e[1]])) for e in elems}
        deg = {e: 4 * e[0] + sum(MONOMIALS[e[1]]) for e in elems}
        for ea in elems:
            for eb in elems:
                if not (deg[ea] == -2 or deg[eb] == -2 or deg[ea] + deg[eb] == -2):
                    continue
                for ec in elems:
                    val = coboundary(g_cochain, ring[ea], ring[eb], ring[ec])
                    if val:
                        yield (tuple(_element_index(i, b, R) for i, b in (ea, eb, ec)), val)
    return extra


def verify_cocycle(cfg: GroupConfig, kind: str = "m", window: int = 2) -> CocycleReport:
    kind = _canon(kind)
    variant = variant_of(cfg.t)
    if kind == "m~":
        if variant == "2":
            raise ConfigError("the modified representative m~ is only defined for t >= 4")
        return cocycle_defects(kind_tables(cfg, "m''"), variant, window, _dg_support(variant), kind)
    return cocycle_defects(kind_tables(cfg, kind), variant, window, None, kind)


# -- non-triviality of gamma -------------------------------------------------------


@dataclass
class Certificate:
    """Outcome of solving ``coboundary(g) = m`` on a finite set of triples.

    Rows are (triple, output monomial), columns are (pair, value monomial).
    An infeasible system proves the class of m is nonzero; a feasible one is
    inconclusive.
    """

    variant: str
    kind: str
    triples: list[tuple[str, str, str]]
    unknown_pairs: list[tuple[str, str]]
    rows: list[tuple[tuple[str, str, str], BasisMonomial]]
    columns: list[tuple[tuple[str, str], BasisMonomial]]
    matrix: np.ndarray = field(repr=False)
    rhs: np.ndarray = field(repr=False)
    result: linalg.SolveResult = field(repr=False)

    @property
    def infeasible(self) -> bool:
        return not self.result.feasible

    @property
    def verdict(self) -> str:
        return "nontrivial" if self.infeasible else "inconclusive"

    def is_valid_obstruction(self, functional: np.ndarray) -> bool:
        """``functional`` kills every unknown and evaluates to 1 on the right-hand side."""
        y = np.asarray(functional, dtype=np.uint8)
        return not linalg.matvec(self.matrix.T, y).any() and linalg.dot(y, self.rhs) == 1

    def support(self, functional: np.ndarray | None = None) -> list[tuple[str, str, str]]:
        y = self.result.certificate if functional is None else functional
        if y is None:
            return []
        seen = []
        for k in np.flatnonzero(y):
            tri = self.rows[k][0]
            if tri not in seen:
                seen.append(tri)
        return seen

    def functional_for(self, combination) -> np.ndarray:
        """Row weights of ``sum_k phi_k(r_k * equation(a_k, b_k, c_k))``.

        ``combination`` lists ``(r, (a, b, c), phi)`` with r, a, b, c ring
        elements and phi a dict mapping canonical monomial names (s-exponent
        0) to coefficients.
        """
        index = {row: k for k, row in enumerate(self.rows)}
        y = np.zeros(len(self.rows), dtype=np.uint8)
        for r, (a, b, c), phi in combination:
            for ma, ca in a.monomials():
                for mb, cb in b.monomials():
                    for mc, cc in c.monomials():
                        tri = (ma.b, mb.b, mc.b)
                        deg = ma.degree + mb.degree + mc.degree - 1
                        for mu in monomials_in_degree(deg):
                            image = r * RingElement.from_basis(self.variant, mu)
                            w = 0
                            for mon, coef in image.monomials():
                                if mon.i == 0:
                                    w ^= GF4.mul(coef, phi.get(mon.b, 0))
                            w = GF4.mul(w, GF4.mul(GF4.mul(ca, cb), cc))
                            if w:
                                y[index[(tri, mu)]] ^= w
        return y


def _deg(name: str) -> int:
    return sum(MONOMIALS[NAMES.index(name)])


def gamma_certificate(cfg: GroupConfig, kind: str = "m", max_degree: int = 5) -> Certificate:
    """Try to write m as a coboundary on all canonical triples of total degree <= max_degree."""
    kind = _canon(kind)
    variant = variant_of(cfg.t)
    sp = SecondaryProduct(cfg, kind)
    ring = {n: RingElement.from_basis(variant, BasisMonomial(0, n)) for n in NAMES}
    triples = [tri for tri in product(NAMES, NAMES, NAMES) if sum(map(_deg, tri)) <= max_degree]
    pairs = [(b, c) for b, c in product(NAMES, NAMES) if _deg(b) + _deg(c) <= max_degree]
    columns = [((b, c), mu) for b, c in pairs for mu in monomials_in_degree(_deg(b) + _deg(c) - 1)]
    col_index = {col: k for k, col in enumerate(columns)}
    rows, eqs, rhs = [], [], []
    for tri in triples:
        a, b, c = tri
        out_deg = sum(map(_deg, tri)) - 1
        out_mons = monomials_in_degree(out_deg)
        block = np.zeros((len(out_mons), len(columns)), dtype=np.uint8)

        def add(left: RingElement, pair_first: RingElement, pair_second: RingElement, right: RingElement):
            # left * g(first, second) * right, expanded over the unknowns
            for m1, c1 in pair_first.monomials():
                for m2, c2 in pair_second.monomials():
                    for mu in monomials_in_degree(m1.degree + m2.degree - 1):
                        image = left * RingElement.from_basis(variant, mu) * right
                        k = col_index[((m1.b, m2.b), mu)]
                        for r, om in enumerate(out_mons):
                            block[r, k] ^= GF4.mul(GF4.mul(c1, c2), image.coefficient(om))

        one = RingElement.one(variant)
        add(ring[a], ring[b], ring[c], one)
        add(one, ring[a] * ring[b], ring[c], one)
        add(one, ring[a], ring[b] * ring[c], one)
        add(one, ring[a], ring[b], ring[c])
        value = sp(ring[a], ring[b], ring[c])
        for r, om in enumerate(out_mons):
            rows.append((tri, om))
            rhs.append(value.coefficient(om))
        eqs.append(block)
    M = np.concatenate(eqs, axis=0)
    b = np.array(rhs, dtype=np.uint8)
    res = linalg.solve(M, b, GF2)
    return Certificate(variant, kind, triples, pairs, rows, columns, M, b, res)


def hand_obstruction(variant: str):
    """The hand-derived contradiction as a combination of equations.

    t = 2: five equations whose sum forces g(x,y) + g(y,x) = y, and their
    x/y mirror images forcing it to equal x.  t >= 4: four equations plus z
    times a fifth, whose x^2 y coefficients add up to 1 = 0.
    """
    P = lambda s: parse(s, variant)  # noqa: E731
    one = P("1")
    if variant == "2":
        first = [("y", "x", "y"), ("x", "y", "y"), ("y", "y", "x"), ("x", "x", "x"), ("x", "y", "x")]
        swap = {"x": "y", "y": "x"}
        second = [tuple(swap[v] for v in tri) for tri in first]
        combo = [(one, tuple(map(P, tri)), {"x^2": 1, "y^2": 1}) for tri in first]
        combo += [(one, tuple(map(P, tri)), {"x^2": 1}) for tri in second]
        return combo
    phi = {"x^2y": 1}
    combo = [(one, tuple(map(P, tri)), phi) for tri in
             [("x", "z", "x^2"), ("x^2", "x", "z"), ("z", "x^2", "x"), ("z", "z^2", "z")]]
    combo.append((P("z"), (P("z"), P("z"), P("z")), phi))
    return combo
