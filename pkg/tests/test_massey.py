import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tatemassey.fields import GF2, GF4
from tatemassey.group_algebra import GroupConfig
from tatemassey.massey import (
    GradedSet,
    LambdaMatrix,
    closed_form_witnesses,
    enumerate_scalar_triples,
    homogeneous_elements,
    indeterminacy_member,
    is_exact_at,
    lam_mul,
    m_matrix,
    minimal_kernel_generators,
    prune_to_minimal,
    random_matrix,
    random_minimal_presentation,
    realizable_summand,
    scalar_triple_verdict,
    nonrealizable_matrix,
    trace_obstruction,
    trace_pairing_matrix,
)
from tatemassey.tate_ring import parse

CFG2, CFG4 = GroupConfig(2), GroupConfig(4)


def test_graded_set_shift():
    assert GradedSet([0, 1]).shift(-1) == GradedSet([-1, 0])


def test_homogeneity_is_enforced():
    with pytest.raises(ValueError):
        LambdaMatrix.parse([0], [-1], [["x^2"]], "2")
    with pytest.raises(ValueError):
        LambdaMatrix.parse([0], [-1, -1], [["x"]], "2")
    A = LambdaMatrix.parse([0], [-2], [["x^2 + s^-1*x^2*y*x^3"]], "2")
    assert A.shape == (1, 1)


def test_json_roundtrip():
    A = nonrealizable_matrix()
    assert LambdaMatrix.from_json(A.to_json(), "2") == A
    with pytest.raises(ValueError):
        LambdaMatrix.from_json({"rows": [0]}, "2")


@given(st.integers(0, 10 ** 6))
def test_products_stay_homogeneous_and_associate(seed):
    rng = random.Random(seed)
    A = random_matrix([0, 1], [-1, 0, 2], "4+", rng)
    B = random_matrix([-1, 0, 2], [-2, 1], "4+", rng)
    C = random_matrix([-2, 1], [-3], "4+", rng)
    AB = lam_mul(A, B)
    LambdaMatrix(AB.rows, AB.cols, AB.entries, "4+")  # homogeneity check
    assert lam_mul(AB, C) == lam_mul(A, lam_mul(B, C))
    E = m_matrix("m", A, B, C, CFG4)
    assert E.rows == A.rows.shift(-1)


@given(st.integers(0, 10 ** 6), st.sampled_from(["2", "4+"]))
def test_indeterminacy_elements_are_members(seed, v):
    rng = random.Random(seed)
    A = random_minimal_presentation(v, rng, max_size=3)
    C = random_matrix([-3, -2], [-6, -5], v, rng)
    X = random_matrix(A.cols.shift(-1), C.cols, v, rng)
    Y = random_matrix(A.rows.shift(-1), C.rows, v, rng)
    E = lam_mul(A.shifted(-1), X) + lam_mul(Y, C)
    verdict = indeterminacy_member(E, A, C)
    assert verdict.in_indeterminacy
    Xw, Yw = verdict.witness
    assert lam_mul(A.shifted(-1), Xw) + lam_mul(Yw, C) == E


@given(st.integers(0, 10 ** 6), st.sampled_from(["2", "4+"]))
def test_kernel_generators_give_exact_sequences(seed, v):
    rng = random.Random(seed)
    A = random_minimal_presentation(v, rng, max_size=3)
    B = minimal_kernel_generators(A)
    assert lam_mul(A, B).is_zero()
    assert is_exact_at(A, B)["exact"]
    assert all(-3 <= d <= 0 for d in B.cols)
    # minimal: no column is generated by the others
    assert prune_to_minimal(B).shape == B.shape


def test_nonrealizable_module():
    A = nonrealizable_matrix()
    A2, A3 = A.shifted(-1), A.shifted(-2)
    assert lam_mul(A, A2).is_zero()
    assert is_exact_at(A, A2)["exact"]
    E = m_matrix("m", A, A2, A3, CFG2)
    xy = str(parse("x*y", "2"))
    assert E.to_json()["entries"] == [[xy, "0"], [xy, xy]]
    verdict = indeterminacy_member(E, A, A3)
    assert not verdict.in_indeterminacy and verdict.certificate is not None
    assert not realizable_summand(A, CFG2).summand_of_realizable
    D = trace_pairing_matrix()
    assert lam_mul(A, D).is_zero() and lam_mul(D, A.shifted(-2)).is_zero()
    tr = trace_obstruction(E, A, A3, D, random.Random(0))
    assert tr["trace"] == "x^2*y" and tr["indeterminacy_traces"] == ["0"]


def test_scalar_triples():
    rep = enumerate_scalar_triples(CFG2, GF2, range(-2, 4))
    assert rep["defined"] > 0 and not rep["counterexamples"]
    a, b = parse("a*x+y", "2"), parse("a^2*x+y", "2")
    res = scalar_triple_verdict(a, b, a, CFG2, GF4)
    assert res["defined"] and not res["in_indeterminacy"]
    assert len(homogeneous_elements(1, "2", GF4)) == 15


@pytest.mark.parametrize("seed", range(4))
def test_random_presentations_t4(seed):
    A = random_minimal_presentation("4+", random.Random(seed))
    rep = realizable_summand(A, CFG4, "m''")
    assert rep.exact_AB["exact"] and rep.exact_BC["exact"]
    assert all(-8 <= d <= -5 for d in rep.B.cols) and all(-15 <= d <= -12 for d in rep.C.cols)
    cf = rep.closed_form
    assert cf["ByCy_zero"] and cf["mprime_equals_AV_plus_WC"] and cf["mtilde_zero"]
    W, V = closed_form_witnesses(rep.A, rep.B, rep.C)
    assert W.rows == A.rows.shift(-1) and V.cols == rep.C.cols
    assert realizable_summand(A, CFG4, "m").summand_of_realizable
