"""Which s-commutators are possible for a null-homotopy of xx + xy + yy at t = 2.

Tries every correction in the span of x and y and reports whether an
8-periodic homotopy with that commutator exists, together with the class
table C(h) that the chosen homotopy would induce.
"""

from itertools import product

from tatemassey.group_algebra import GroupConfig
from tatemassey.resolution import shifted_homotopy, solve_homotopy, word
from tatemassey.secondary import h_class
from tatemassey.tate_ring import NAMES


def main():
    cfg = GroupConfig(2)
    target = word("xx+xy+yy", cfg)
    for corr in ("x", "y", "x+y"):
        res = shifted_homotopy(target, word(corr, cfg))
        print(f"commutator ({corr}) s: {'feasible' if res.feasible else 'infeasible'}"
              f"  [{res.equations} equations, {res.unknowns} unknowns, rank {res.rank}]")
    for period in (4, 8):
        res = solve_homotopy(word("xxx", cfg), period)
        print(f"null-homotopy of xxx with period {period}: {'feasible' if res.feasible else 'infeasible'}")
    print("\nC(h(b, c)) with the constructed homotopy:")
    for b, c in product(NAMES, NAMES):
        val = h_class(b, c, cfg)
        if val:
            print(f"  ({b}, {c}) -> {val}")


if __name__ == "__main__":
    main()
