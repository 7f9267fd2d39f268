import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from tatemassey import linalg
from tatemassey.fields import ALPHA, ALPHA2, GF2, GF4, format_scalar, get_field, parse_scalar

gf4 = st.integers(0, 3)


@given(gf4, gf4, gf4)
def test_gf4_is_a_field(a, b, c):
    assert GF4.mul(a, GF4.mul(b, c)) == GF4.mul(GF4.mul(a, b), c)
    assert GF4.mul(a, b) == GF4.mul(b, a)
    assert GF4.mul(a, GF4.add(b, c)) == GF4.add(GF4.mul(a, b), GF4.mul(a, c))
    if a:
        assert GF4.mul(a, GF4.inv(a)) == 1


def test_alpha_relation():
    assert GF4.mul(ALPHA, ALPHA) == ALPHA2 == GF4.add(ALPHA, 1)
    assert GF4.mul(ALPHA, ALPHA2) == 1


def test_field_lookup_and_scalars():
    assert get_field("gf4") is GF4 and get_field(2) is GF2
    with pytest.raises(ValueError):
        get_field("GF8")
    for c in (1, 2, 3):
        assert parse_scalar(format_scalar(c)) == c


def _matrices(q):
    return st.integers(1, 7).flatmap(lambda m: st.integers(1, 7).flatmap(
        lambda n: st.tuples(st.lists(st.lists(st.integers(0, q - 1), min_size=n, max_size=n), min_size=m, max_size=m),
                            st.lists(st.integers(0, q - 1), min_size=m, max_size=m))))


@pytest.mark.parametrize("fld", [GF2, GF4])
def test_solve_returns_solution_or_certificate(fld):
    @given(_matrices(fld.q))
    def run(data):
        M, b = np.array(data[0], dtype=np.uint8), np.array(data[1], dtype=np.uint8)
        res = linalg.solve(M, b, fld)
        assert res.check(M, b, fld)
        assert res.rank == linalg.rank(M, fld)
    run()


@pytest.mark.parametrize("fld", [GF2, GF4])
def test_rank_nullity(fld):
    @given(_matrices(fld.q))
    def run(data):
        M = np.array(data[0], dtype=np.uint8)
        K = linalg.nullspace(M, fld)
        k = 0 if K.size == 0 else K.shape[0]
        assert k + linalg.rank(M, fld) == M.shape[1]
        for v in K if k else []:
            assert not linalg.matvec(M, v, fld).any()
    run()
