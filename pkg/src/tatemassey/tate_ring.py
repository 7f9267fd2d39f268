"""The Tate cohomology ring of Q_4t over a field of characteristic 2.

Elements are finite combinations of ``s^i * b`` with ``b`` one of
``1, x, y, x^2, y^2, x^2y``.  Products of x and y are reduced with

* t = 2:  xy = x^2 + y^2,  x^3 = y^3 = 0,  xy^2 = x^2y
* t >= 4: xy = x^2,  y^3 = 0,  x^3 = xy^2 = x^2y

and anything of degree above 3 in x, y vanishes.  Coefficients are ints in
the GF(4) encoding, so GF(2) elements are the special case ``{0, 1}``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import total_ordering

from .fields import GF4, format_scalar, parse_scalar

VARIANTS = ("2", "4+")

# x,y exponents of the monomials in the canonical basis, in canonical order
MONOMIALS = ((0, 0), (1, 0), (0, 1), (2, 0), (0, 2), (2, 1))
NAMES = ("1", "x", "y", "x^2", "y^2", "x^2y")
_NAME_TO_EXP = dict(zip(NAMES, MONOMIALS))
_EXP_TO_NAME = dict(zip(MONOMIALS, NAMES))


def variant_of(t: int) -> str:
    return "2" if t == 2 else "4+"


def _check_variant(variant: str) -> str:
    if variant not in VARIANTS:
        raise ValueError(f"variant must be one of {VARIANTS}, got {variant!r}")
    return variant


@total_ordering
@dataclass(frozen=True)
class BasisMonomial:
    """``s^i * b`` with ``b`` in {1, x, y, x^2, y^2, x^2y}."""

    i: int
    b: str

    def __post_init__(self):
        if self.b not in _NAME_TO_EXP:
            raise ValueError(f"{self.b!r} is not a basis monomial")

    @property
    def exps(self) -> tuple[int, int]:
        return _NAME_TO_EXP[self.b]

    @property
    def degree(self) -> int:
        return 4 * self.i + sum(self.exps)

    def key(self) -> tuple[int, int]:
        return (self.i, NAMES.index(self.b))

    def __lt__(self, other: "BasisMonomial") -> bool:
        return self.key() < other.key()

    def __str__(self) -> str:
        return _format_monomial(self.i, self.exps)


def _reduce_xy(e: int, d: int, variant: str) -> tuple[tuple[int, int], ...]:
    """Basis monomials (as exponent pairs) summing to x^e y^d."""
    deg = e + d
    if deg > 3:
        return ()
    if (e, d) in _EXP_TO_NAME:
        return ((e, d),)
    if variant == "2":
        table = {(1, 1): ((2, 0), (0, 2)), (3, 0): (), (1, 2): ((2, 1),), (0, 3): ()}
    else:
        table = {(1, 1): ((2, 0),), (3, 0): ((2, 1),), (1, 2): ((2, 1),), (0, 3): ()}
    return table[(e, d)]


class RingElement:
    """A finite sum of ``coefficient * s^i * b``; immutable."""

    __slots__ = ("variant", "terms")

    def __init__(self, variant: str, terms=None):
        self.variant = _check_variant(variant)
        clean = {}
        for (i, exps), c in (terms or {}).items():
            if c:
                clean[(int(i), tuple(exps))] = int(c)
        self.terms: dict[tuple[int, tuple[int, int]], int] = clean

    # -- constructors -----------------------------------------------------
    @classmethod
    def zero(cls, variant: str) -> "RingElement":
        return cls(variant)

    @classmethod
    def one(cls, variant: str) -> "RingElement":
        return cls(variant, {(0, (0, 0)): 1})

    @classmethod
    def monomial(cls, variant: str, i: int = 0, e: int = 0, d: int = 0, coeff: int = 1) -> "RingElement":
        """``coeff * s^i x^e y^d`` reduced to the canonical basis."""
        terms: dict = {}
        for exps in _reduce_xy(e, d, variant):
            key = (i, exps)
            terms[key] = terms.get(key, 0) ^ coeff
        return cls(variant, terms)

    @classmethod
    def from_basis(cls, variant: str, mon: BasisMonomial, coeff: int = 1) -> "RingElement":
        return cls(variant, {(mon.i, mon.exps): coeff})

    # -- arithmetic -------------------------------------------------------
    def _same(self, other: "RingElement") -> None:
        if not isinstance(other, RingElement):
            raise TypeError(f"cannot combine RingElement with {type(other).__name__}")
        if other.variant != self.variant:
            raise ValueError(f"variant mismatch: {self.variant} vs {other.variant}")

    def __add__(self, other: "RingElement") -> "RingElement":
        if isinstance(other, int) and other == 0:
            return self
        self._same(other)
        terms = dict(self.terms)
        for k, c in other.terms.items():
            terms[k] = terms.get(k, 0) ^ c
        return RingElement(self.variant, terms)

    __radd__ = __add__
    __sub__ = __add__

    def __mul__(self, other) -> "RingElement":
        if isinstance(other, int):
            return self.scale(other)
        self._same(other)
        out: dict = {}
        for (i1, (e1, d1)), c1 in self.terms.items():
            for (i2, (e2, d2)), c2 in other.terms.items():
                c = GF4.mul(c1, c2)
                for exps in _reduce_xy(e1 + e2, d1 + d2, self.variant):
                    key = (i1 + i2, exps)
                    out[key] = out.get(key, 0) ^ c
        return RingElement(self.variant, out)

    def __rmul__(self, other) -> "RingElement":
        if isinstance(other, int):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int) -> "RingElement":
        if k < 0:
            # only scalar multiples of s^i are units
            if len(self.terms) == 1:
                (i, exps), c = next(iter(self.terms.items()))
                if exps == (0, 0):
                    return RingElement.monomial(self.variant, i * k, 0, 0, _scalar_pow(GF4.inv(c), -k))
            raise ValueError("only powers of s can be inverted")
        out = RingElement.one(self.variant)
        for _ in range(k):
            out = out * self
        return out

    def scale(self, c: int) -> "RingElement":
        return RingElement(self.variant, {k: GF4.mul(v, c) for k, v in self.terms.items()})

    def shift(self, k: int) -> "RingElement":
        """Multiply by ``s^k``."""
        return RingElement(self.variant, {(i + k, e): c for (i, e), c in self.terms.items()})

    # -- inspection -------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int) and other == 0:
            return not self.terms
        return isinstance(other, RingElement) and self.variant == other.variant and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.variant, frozenset(self.terms.items())))

    def degrees(self) -> set[int]:
        return {4 * i + sum(e) for (i, e) in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    @property
    def degree(self) -> int | None:
        """Degree of a nonzero homogeneous element; None for zero."""
        degs = self.degrees()
        if not degs:
            return None
        if len(degs) > 1:
            raise ValueError(f"{self} is not homogeneous")
        return next(iter(degs))

    def coefficient(self, mon: BasisMonomial) -> int:
        return self.terms.get((mon.i, mon.exps), 0)

    def monomials(self) -> list[tuple[BasisMonomial, int]]:
        out = [(BasisMonomial(i, _EXP_TO_NAME[e]), c) for (i, e), c in self.terms.items()]
        return sorted(out, key=lambda mc: mc[0].key())

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for mon, c in self.monomials():
            body = _format_monomial(mon.i, mon.exps)
            pre = format_scalar(c)
            if pre:
                body = pre if body == "1" else f"{pre}*{body}"
            parts.append(body)
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"RingElement({self.variant!r}, {str(self)!r})"


def _scalar_pow(c: int, k: int) -> int:
    out = 1
    for _ in range(k):
        out = GF4.mul(out, c)
    return out


def _format_monomial(i: int, exps: tuple[int, int]) -> str:
    e, d = exps
    factors = []
    if i:
        factors.append("s" if i == 1 else f"s^{i}")
    if e:
        factors.append("x" if e == 1 else f"x^{e}")
    if d:
        factors.append("y" if d == 1 else f"y^{d}")
    return "*".join(factors) if factors else "1"


# -- named elements and parsing ------------------------------------------------


def gen(name: str, variant: str) -> RingElement:
    """One of the generators ``s``, ``x``, ``y``, ``z`` (= x + y) or ``1``."""
    if name == "1":
        return RingElement.one(variant)
    if name == "s":
        return RingElement.monomial(variant, 1)
    if name == "x":
        return RingElement.monomial(variant, 0, 1, 0)
    if name == "y":
        return RingElement.monomial(variant, 0, 0, 1)
    if name == "z":
        return gen("x", variant) + gen("y", variant)
    raise ValueError(f"unknown generator {name!r}")


_FACTOR = re.compile(r"^([sxyz1])(?:\^\(?(-?\d+)\)?)?$")


def parse(text: str, variant: str) -> RingElement:
    """Parse sums of products such as ``"s^-1*x^2*y + x"`` or ``"a*x + y"``.

    Factors: ``s^k`` (k may be negative), ``x^k``, ``y^k``, ``z^k``, ``1``,
    and GF(4) scalars ``a`` / ``a^2`` meaning alpha / alpha^2.
    """
    text = text.replace(" ", "")
    if not text:
        raise ValueError("empty element")
    total = RingElement.zero(variant)
    for term in text.split("+"):
        if term == "0":
            continue
        value = RingElement.one(variant)
        for factor in term.split("*"):
            if factor in ("a", "a^2", "alpha", "alpha^2"):
                value = value.scale(parse_scalar(factor))
                continue
            m = _FACTOR.match(factor)
            if not m:
                raise ValueError(f"cannot parse factor {factor!r} in {text!r}")
            base, exp = m.group(1), int(m.group(2) or 1)
            if base == "1":
                continue
            if base == "s":
                value = value.shift(exp)
            elif exp < 0:
                raise ValueError(f"negative power of {base} in {text!r}")
            else:
                value = value * gen(base, variant) ** exp
        total = total + value
    return total


# -- degreewise structure ------------------------------------------------------


def monomials_in_degree(degree: int) -> list[BasisMonomial]:
    """Canonical basis monomials of the given degree, in canonical order."""
    i, r = divmod(degree, 4)
    return [BasisMonomial(i, n) for n, e in zip(NAMES, MONOMIALS) if sum(e) == r]


def basis(degree: int, variant: str) -> list[RingElement]:
    """The basis of the degree piece dual to the class-map identification.

    Degree 2 (mod 4) uses ``[y^2, xy]`` with ``xy`` written out in the
    canonical monomials.
    """
    _check_variant(variant)
    i, r = divmod(degree, 4)
    if r == 2:
        return [RingElement.monomial(variant, i, 0, 2), RingElement.monomial(variant, i, 1, 1)]
    return [RingElement.from_basis(variant, m) for m in monomials_in_degree(degree)]


def dimension(degree: int) -> int:
    return (1, 2, 2, 1)[degree % 4]


def coords(u: RingElement, degree: int) -> list[int]:
    """Coefficients of ``u`` (homogeneous of ``degree``, or zero) on ``monomials_in_degree``."""
    mons = monomials_in_degree(degree)
    if u.terms and u.degree != degree:
        raise ValueError(f"{u} does not have degree {degree}")
    return [u.coefficient(m) for m in mons]


def from_coords(values, degree: int, variant: str) -> RingElement:
    mons = monomials_in_degree(degree)
    return RingElement(variant, {(m.i, m.exps): int(c) for m, c in zip(mons, values)})


def all_basis_monomials(s_range) -> list[BasisMonomial]:
    return [BasisMonomial(i, n) for i in s_range for n in NAMES]


# -- z = x + y frame (t >= 4) -------------------------------------------------

Z_FRAME = ("1", "x", "z", "x^2", "z^2", "x^3")
# canonical monomial -> z-frame expansion
_TO_Z = {
    "1": {"1": 1},
    "x": {"x": 1},
    "y": {"x": 1, "z": 1},
    "x^2": {"x^2": 1},
    "y^2": {"x^2": 1, "z^2": 1},
    "x^2y": {"x^3": 1},
}
_FROM_Z = {"1": "1", "x": "x", "z": "x+y", "x^2": "x^2", "z^2": "x^2+y^2", "x^3": "x^2*y"}


def to_z_form(u: RingElement) -> dict[tuple[int, str], int]:
    """Coordinates of ``u`` in the frame ``s^i * {1, x, z, x^2, z^2, x^3}`` (t >= 4)."""
    if u.variant != "4+":
        raise ValueError("the z frame is only used for t >= 4")
    out: dict[tuple[int, str], int] = {}
    for mon, c in u.monomials():
        for zm, k in _TO_Z[mon.b].items():
            key = (mon.i, zm)
            out[key] = out.get(key, 0) ^ GF4.mul(c, k)
    return {k: v for k, v in sorted(out.items(), key=lambda kv: (kv[0][0], Z_FRAME.index(kv[0][1]))) if v}


def from_z_form(coeffs: dict[tuple[int, str], int], variant: str = "4+") -> RingElement:
    if variant != "4+":
        raise ValueError("the z frame is only used for t >= 4")
    out = RingElement.zero(variant)
    for (i, zm), c in coeffs.items():
        out = out + parse(_FROM_Z[zm], variant).shift(i).scale(c)
    return out


def format_z_form(coeffs: dict[tuple[int, str], int]) -> str:
    if not coeffs:
        return "0"
    parts = []
    for (i, zm), c in coeffs.items():
        body = "*".join(p for p in ((f"s^{i}" if i not in (0, 1) else ("s" if i == 1 else "")), "" if zm == "1" else zm) if p) or "1"
        pre = format_scalar(c)
        parts.append(f"{pre}*{body}" if pre else body)
    return " + ".join(parts)
