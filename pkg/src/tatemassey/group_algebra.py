"""Exact arithmetic in the group algebra k[Q_4t] over GF(2) or GF(4).

Q_4t = <g, h | g^t = h^2, ghg = h>.  Group elements are stored in the
normal form ``g^i h^j`` with ``0 <= i < 2t`` and ``j in {0, 1}``, indexed by
``2*i + j`` so that index order is the (i, j) order used for printing.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .fields import GF2, Field, format_scalar, get_field

SUPPORTED_T = (2, 4, 8, 16)


class ConfigError(ValueError):
    """Raised for unsupported or mismatched configurations."""


@dataclass(frozen=True)
class GroupConfig:
    t: int = 2
    field: Field = GF2
    max_t: int = 16

    def __post_init__(self):
        t = self.t
        if not isinstance(t, int) or t < 2 or t & (t - 1):
            raise ConfigError(f"t must be a power of 2 with t >= 2, got {t!r}")
        if t > self.max_t:
            raise ConfigError(f"t={t} exceeds the configured bound {self.max_t}")
        object.__setattr__(self, "field", get_field(self.field))

    @property
    def order(self) -> int:
        return 4 * self.t

    @property
    def variant(self) -> str:
        """Which presentation of the Tate ring applies: '2' or '4+'."""
        return "2" if self.t == 2 else "4+"


# -- group ------------------------------------------------------------------


@dataclass(frozen=True, order=True)
class GroupElement:
    """``g^i h^j`` in normal form; ``t`` is carried to reduce exponents."""

    i: int
    j: int
    t: int

    def __post_init__(self):
        if self.j not in (0, 1) or not 0 <= self.i < 2 * self.t:
            raise ValueError(f"not in normal form: g^{self.i} h^{self.j} (t={self.t})")

    @property
    def index(self) -> int:
        return 2 * self.i + self.j

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        return group_mul(self, other)

    def __str__(self) -> str:
        return _format_group_element(self.i, self.j)


def group_mul(u: GroupElement, v: GroupElement) -> GroupElement:
    """Normal form of ``u*v`` using ``h g^k = g^-k h`` and ``h^2 = g^t``."""
    if u.t != v.t:
        raise ConfigError("group elements from different groups")
    t = u.t
    i = u.i + (v.i if u.j == 0 else -v.i)
    j = u.j + v.j
    if j == 2:
        i += t
        j = 0
    return GroupElement(i % (2 * t), j, t)


def _format_group_element(i: int, j: int) -> str:
    if i == 0 and j == 0:
        return "1"
    parts = []
    if i == 1:
        parts.append("g")
    elif i > 1:
        parts.append(f"g^{i}")
    if j:
        parts.append("h")
    return "*".join(parts)


@lru_cache(maxsize=None)
def _tables(t: int):
    """Multiplication table plus index tables used for convolution."""
    n = 4 * t
    elems = [GroupElement(k // 2, k % 2, t) for k in range(n)]
    mul = np.empty((n, n), dtype=np.int64)
    for a in elems:
        for b in elems:
            mul[a.index, b.index] = group_mul(a, b).index
    identity = 0
    inv = np.empty(n, dtype=np.int64)
    for a in range(n):
        inv[a] = int(np.flatnonzero(mul[a] == identity)[0])
    # conv[g, k] = index of g^-1 k, so (p q)[k] = sum_g p[g] q[conv[g, k]]
    conv = np.array([[mul[inv[g], k] for k in range(n)] for g in range(n)], dtype=np.int64)
    # left[k, h] = index of k h^-1, so (p q)[k] = sum_h p[left[k, h]] q[h]
    left = np.array([[mul[k, inv[h]] for h in range(n)] for k in range(n)], dtype=np.int64)
    for arr in (mul, inv, conv, left):
        arr.setflags(write=False)
    return elems, mul, inv, conv, left


def group_elements(t: int) -> list[GroupElement]:
    return list(_tables(t)[0])


# -- convolution kernels ----------------------------------------------------


def _conv2(A: np.ndarray, B: np.ndarray, conv: np.ndarray) -> np.ndarray:
    """GF(2) matrix product of arrays shaped (r, m, n) and (m, c, n)."""
    BQ = B[:, :, conv]  # (m, c, n, n): BQ[j, k, g, h] = B[j, k, g^-1 h]
    out = np.einsum("ijg,jkgh->ikh", A.astype(np.int64), BQ.astype(np.int64))
    return (out & 1).astype(np.uint8)


def kg_matmul(A: np.ndarray, B: np.ndarray, t: int) -> np.ndarray:
    """Matrix product over kG of arrays shaped (r, m, n) and (m, c, n).

    Works for GF(4) coefficients by splitting into the two GF(2) bit planes.
    """
    conv = _tables(t)[3]
    if A.shape[1] != B.shape[0]:
        raise ConfigError(f"shape mismatch {A.shape[:2]} x {B.shape[:2]}")
    if A.shape[1] == 0:
        return np.zeros((A.shape[0], B.shape[1], 4 * t), dtype=np.uint8)
    if A.max(initial=0) <= 1 and B.max(initial=0) <= 1:
        return _conv2(A, B, conv)
    A0, A1 = A & 1, A >> 1
    B0, B1 = B & 1, B >> 1
    p00, p11 = _conv2(A0, B0, conv), _conv2(A1, B1, conv)
    p01, p10 = _conv2(A0, B1, conv), _conv2(A1, B0, conv)
    c0 = p00 ^ p11
    c1 = p01 ^ p10 ^ p11
    return (c0 | (c1 << 1)).astype(np.uint8)


# -- algebra elements -------------------------------------------------------


class AlgebraElement:
    """Element of kQ_4t as a dense coefficient vector of length 4t."""

    __slots__ = ("cfg", "coeffs")

    def __init__(self, cfg: GroupConfig, coeffs):
        arr = np.array(coeffs, dtype=np.uint8).reshape(-1)
        if arr.shape[0] != cfg.order:
            raise ConfigError(f"expected {cfg.order} coefficients, got {arr.shape[0]}")
        if arr.max(initial=0) >= cfg.field.q:
            raise ValueError("coefficient outside the field")
        arr.setflags(write=False)
        self.cfg = cfg
        self.coeffs = arr

    @classmethod
    def zero(cls, cfg: GroupConfig) -> "AlgebraElement":
        return cls(cfg, np.zeros(cfg.order, dtype=np.uint8))

    @classmethod
    def one(cls, cfg: GroupConfig) -> "AlgebraElement":
        return cls.basis(cfg, 0, 0)

    @classmethod
    def basis(cls, cfg: GroupConfig, i: int, j: int = 0, coeff: int = 1) -> "AlgebraElement":
        """The element ``coeff * g^i h^j``; arbitrary integer exponents are reduced."""
        t = cfg.t
        word = GroupElement(0, 0, t)
        gi = GroupElement(i % (2 * t), 0, t)
        word = word * gi
        for _ in range(j % 4):
            word = word * GroupElement(0, 1, t)
        v = np.zeros(cfg.order, dtype=np.uint8)
        v[word.index] = coeff
        return cls(cfg, v)

    def _check(self, other: "AlgebraElement"):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        if other.cfg.t != self.cfg.t or other.cfg.field != self.cfg.field:
            raise ConfigError("algebra elements over different group configurations")
        return None

    def __add__(self, other):
        if isinstance(other, int):
            other = AlgebraElement.one(self.cfg) * other
        if self._check(other) is NotImplemented:
            return NotImplemented
        return AlgebraElement(self.cfg, self.coeffs ^ other.coeffs)

    __radd__ = __add__
    __sub__ = __add__

    def __mul__(self, other):
        if isinstance(other, int):
            f = self.cfg.field
            return AlgebraElement(self.cfg, f.mul_table[other % f.q if f.q == 2 else other, self.coeffs])
        if self._check(other) is NotImplemented:
            return NotImplemented
        prod = kg_matmul(self.coeffs[None, None, :], other.coeffs[None, None, :], self.cfg.t)
        return AlgebraElement(self.cfg, prod[0, 0])

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __pow__(self, e: int) -> "AlgebraElement":
        if e < 0:
            raise ValueError("negative powers are only defined for group elements")
        result = AlgebraElement.one(self.cfg)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = AlgebraElement.one(self.cfg) * other
        return (
            isinstance(other, AlgebraElement)
            and other.cfg.t == self.cfg.t
            and np.array_equal(self.coeffs, other.coeffs)
        )

    def __hash__(self) -> int:
        return hash((self.cfg.t, self.coeffs.tobytes()))

    def is_zero(self) -> bool:
        return not self.coeffs.any()

    def augmentation(self) -> int:
        return augmentation(self)

    def left_matrix(self) -> np.ndarray:
        """k-linear matrix of ``q -> self * q`` on the basis of group elements."""
        return self.coeffs[_tables(self.cfg.t)[4]]

    def right_matrix(self) -> np.ndarray:
        """k-linear matrix of ``q -> q * self``."""
        return self.coeffs[_tables(self.cfg.t)[3]].T

    def __str__(self) -> str:
        terms = []
        for k in np.flatnonzero(self.coeffs):
            c = int(self.coeffs[k])
            mon = _format_group_element(int(k) // 2, int(k) % 2)
            sc = format_scalar(c)
            if sc:
                mon = sc if mon == "1" else f"{sc}*{mon}"
            terms.append(mon)
        if not terms:
            return "0"
        return " + ".join(reversed(terms))

    def __repr__(self) -> str:
        return f"AlgebraElement({self})"


def augmentation(p: AlgebraElement) -> int:
    """Sum of all coefficients."""
    return int(np.bitwise_xor.reduce(p.coeffs)) if p.coeffs.size else 0


_MONO = re.compile(r"^(?:(?P<c>a\^2|a)(?:\*|$))?(?P<body>.*)$")


def parse_element(text: str, cfg: GroupConfig) -> AlgebraElement:
    """Parse the report syntax, e.g. ``"g^3*h + g^2 + 1"``."""
    total = AlgebraElement.zero(cfg)
    text = text.strip()
    if text == "0":
        return total
    for raw in text.split("+"):
        mon = raw.strip()
        m = _MONO.match(mon)
        coeff = {None: 1, "a": 2, "a^2": 3}[m.group("c")]
        body = m.group("body")
        i = j = 0
        for factor in body.split("*"):
            factor = factor.strip()
            if factor in ("1", ""):
                continue
            if factor == "g":
                i += 1
            elif factor.startswith("g^"):
                i += int(factor[2:])
            elif factor == "h":
                j += 1
            else:
                raise ValueError(f"cannot parse monomial {mon!r}")
        if j > 1:
            raise ValueError(f"monomial {mon!r} is not in normal form")
        total = total + AlgebraElement.basis(cfg, i, j, coeff)
    return total


def special(name: str, cfg: GroupConfig) -> AlgebraElement:
    """The distinguished elements a, b, c, N, u (plus g, h and their inverses)."""
    one = AlgebraElement.one(cfg)
    g = AlgebraElement.basis(cfg, 1, 0)
    h = AlgebraElement.basis(cfg, 0, 1)
    t = cfg.t
    if name == "g":
        return g
    if name == "h":
        return h
    if name == "g^-1":
        return AlgebraElement.basis(cfg, -1, 0)
    if name == "h^-1":
        return AlgebraElement.basis(cfg, 0, 3)
    if name == "a":
        return g + one
    if name == "b":
        return h + one
    if name == "c":
        return h * g + one
    if name == "N":
        return AlgebraElement(cfg, np.ones(cfg.order, dtype=np.uint8))
    if name == "u":
        if t < 4:
            raise ConfigError("u is only defined for t >= 4")
        a, b, c = special("a", cfg), special("b", cfg), special("c", cfg)
        return c * a ** (2 * t - 2) + b * a ** (2 * t - 3)
    raise ValueError(f"unknown special element {name!r}")


def is_central(p: AlgebraElement) -> bool:
    g = special("g", p.cfg)
    h = special("h", p.cfg)
    return g * p == p * g and h * p == p * h


def verify_identities(cfg: GroupConfig) -> list[tuple[str, bool]]:
    """Evaluate the identities the resolution relies on; one (name, ok) per identity."""
    t = cfg.t
    a, b, c, N = (special(k, cfg) for k in "abcN")
    g = special("g", cfg)
    zero = AlgebraElement.zero(cfg)
    checks = [
        ("a^t = b^2", a**t == b**2),
        ("b^2 = c^2", b**2 == c**2),
        ("a^2t = 0", a ** (2 * t) == zero),
        ("b^4 = 0", b**4 == zero),
        ("ba = a+b+c", b * a == a + b + c),
        ("ac = a+b+c", a * c == a + b + c),
        ("N = a^(2t-1) b", N == a ** (2 * t - 1) * b),
        ("c = a + bg", c == a + b * g),
        ("gc = a+b", g * c == a + b),
        ("N = c a^(2t-2) b", N == c * a ** (2 * t - 2) * b),
        ("N = c a^(2t-1)", N == c * a ** (2 * t - 1)),
        ("N = a^(2t-1) + a^(2t-2) b + c a^(2t-2)", N == a ** (2 * t - 1) + a ** (2 * t - 2) * b + c * a ** (2 * t - 2)),
        ("c a^(t-1) b = c a^(t-1) + a^(t-1) b", c * a ** (t - 1) * b == c * a ** (t - 1) + a ** (t - 1) * b),
        ("a^(2t-1) central", is_central(a ** (2 * t - 1))),
        ("a^(2t-2) central", is_central(a ** (2 * t - 2))),
    ]
    if 2 * t - 4 >= 0:
        checks.append(("a^(2t-4) central", is_central(a ** (2 * t - 4))))
    if t >= 4:
        u = special("u", cfg)
        checks += [
            ("au = a^(2t-2) b + a^(2t-1)", a * u == a ** (2 * t - 2) * b + a ** (2 * t - 1)),
            ("cu = a^(2t-2) b + a^(2t-1)", c * u == a ** (2 * t - 2) * b + a ** (2 * t - 1)),
            ("ua = a^(2t-2) b + N", u * a == a ** (2 * t - 2) * b + N),
            ("ub = a^(2t-2) b", u * b == a ** (2 * t - 2) * b),
        ]
    return [(name, bool(ok)) for name, ok in checks]
