"""The two coefficient fields used throughout: GF(2) and GF(4).

Elements are plain ints.  GF(4) = GF(2)[alpha]/(alpha^2 + alpha + 1) is
encoded as two bits, ``a0 + 2*a1`` meaning ``a0 + a1*alpha``; in both
fields addition is XOR.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

ALPHA = 2
ALPHA2 = 3  # alpha^2 = alpha + 1

_GF4_MUL = np.array(
    [
        [0, 0, 0, 0],
        [0, 1, 2, 3],
        [0, 2, 3, 1],
        [0, 3, 1, 2],
    ],
    dtype=np.uint8,
)
_GF4_INV = np.array([0, 1, 3, 2], dtype=np.uint8)


@dataclass(frozen=True)
class Field:
    """A finite field of characteristic 2 with ``q`` in {2, 4} elements."""

    q: int
    mul_table: np.ndarray = field(repr=False, compare=False)
    inv_table: np.ndarray = field(repr=False, compare=False)

    @property
    def name(self) -> str:
        return f"GF{self.q}"

    def elements(self) -> range:
        return range(self.q)

    def add(self, a: int, b: int) -> int:
        return a ^ b

    def mul(self, a: int, b: int) -> int:
        return int(self.mul_table[a, b])

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return int(self.inv_table[a])

    def __hash__(self) -> int:
        return hash(self.q)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Field) and other.q == self.q


GF2 = Field(2, _GF4_MUL[:2, :2].copy(), _GF4_INV[:2].copy())
GF4 = Field(4, _GF4_MUL, _GF4_INV)


def get_field(name: str | int | Field) -> Field:
    if isinstance(name, Field):
        return name
    key = str(name).upper().replace("(", "").replace(")", "")
    if key in ("GF2", "2", "F2"):
        return GF2
    if key in ("GF4", "4", "F4"):
        return GF4
    raise ValueError(f"unsupported field {name!r}; expected GF2 or GF4")


def format_scalar(c: int) -> str:
    return {1: "", 2: "a", 3: "a^2"}[c]


def parse_scalar(text: str) -> int:
    """Parse a GF(4) scalar written with ``a`` for alpha: '1', 'a', 'a^2', 'a+1'."""
    text = text.replace(" ", "").replace("alpha", "a")
    table = {"": 1, "1": 1, "0": 0, "a": ALPHA, "a^2": ALPHA2, "a+1": ALPHA2, "1+a": ALPHA2, "a^3": 1}
    if text not in table:
        raise ValueError(f"cannot parse scalar {text!r}")
    return table[text]
