"""The 2x2 module [[y, x+y], [x, y]] at t = 2: Massey value, membership, trace test."""

import random

from tatemassey.group_algebra import GroupConfig
from tatemassey.massey import (
    LambdaMatrix,
    indeterminacy_member,
    is_exact_at,
    m_matrix,
    realizable_summand,
    nonrealizable_matrix,
    trace_obstruction,
    trace_pairing_matrix,
)


def main():
    cfg = GroupConfig(2)
    A = nonrealizable_matrix()
    A2, A3 = A.shifted(-1), A.shifted(-2)
    print("exact (A, A):", is_exact_at(A, A2)["exact"])
    E = m_matrix("m", A, A2, A3, cfg)
    print("m(A,A,A) =", E)
    print("in indeterminacy:", indeterminacy_member(E, A, A3).in_indeterminacy)
    alt = LambdaMatrix.parse(E.rows, E.cols, [["x^2", "0"], ["x^2", "x^2"]], "2")
    print("[[x^2,0],[x^2,x^2]] in indeterminacy:", indeterminacy_member(alt, A, A3).in_indeterminacy)
    print("difference in indeterminacy:", indeterminacy_member(E + alt, A, A3).in_indeterminacy)
    tr = trace_obstruction(E, A, A3, trace_pairing_matrix(), random.Random(0), samples=50)
    print("tr(m D) =", tr["trace"], "; traces on indeterminacy:", tr["indeterminacy_traces"])
    print("summand of realizable:", realizable_summand(A, cfg).summand_of_realizable)


if __name__ == "__main__":
    main()
