from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tatemassey.group_algebra import ConfigError, GroupConfig
from tatemassey.secondary import (
    KINDS,
    SecondaryProduct,
    closed_form_tables,
    cocycle_defects,
    f2_table,
    gamma_certificate,
    hand_obstruction,
    kind_tables,
    verify_cocycle,
    verify_f2,
)
from tatemassey.tate_ring import NAMES, BasisMonomial, RingElement, parse, variant_of

from test_tate_ring import elements


def basis_elem(v, i, b):
    return RingElement.from_basis(v, BasisMonomial(i, b))


def cocycle_value(sp, a, b, c, d):
    return a * sp(b, c, d) + sp(a * b, c, d) + sp(a, b * c, d) + sp(a, b, c * d) + sp(a, b, c) * d


@pytest.mark.parametrize("t", [2, 4])
def test_f2_cochains(t):
    rows = verify_f2(GroupConfig(t))
    assert len(rows) == 36
    assert all(r["homotopy"] and r["class_zero"] for r in rows)
    completed = [r["pair"] for r in rows if r["solver_completed"]]
    assert (t == 2) == bool(completed)


def test_f2_words_are_eight_periodic():
    table = f2_table(2)
    assert all(table[(b, c)].period in (4, 8) for b, c in product(NAMES, NAMES))


@pytest.mark.parametrize("t,kind", [(2, "m"), (2, "m'"), (2, "m''"), (4, "m"), (4, "m~")])
def test_reference_cocycle_check_window0(t, kind):
    """Direct evaluation of the cocycle law on all s^0 basis 4-tuples."""
    cfg = GroupConfig(t)
    v = variant_of(t)
    sp = SecondaryProduct(cfg, kind)
    ring = [basis_elem(v, 0, n) for n in NAMES]
    bad = [tup for tup in product(ring, repeat=4) if cocycle_value(sp, *tup)]
    assert not bad
    assert verify_cocycle(cfg, kind, window=0).ok


@pytest.mark.parametrize("t,kind", [(2, "m"), (4, "m"), (4, "m~"), (4, "m''")])
def test_reference_cocycle_random_tuples(t, kind):
    sp = SecondaryProduct(GroupConfig(t), kind)
    v = variant_of(t)
    mon = st.tuples(st.integers(-2, 2), st.sampled_from(NAMES)).map(lambda p: basis_elem(v, *p))

    @given(mon, mon, mon, mon)
    def run(a, b, c, d):
        assert not cocycle_value(sp, a, b, c, d)
    run()


def test_vectorised_checker_detects_perturbations():
    even, odd = kind_tables(GroupConfig(4), "m")
    even = dict(even)
    even[("x", "y", "x")] = RingElement.zero("4+")
    rep = cocycle_defects((even, odd), "4+", window=1)
    assert rep.failures > 0 and rep.examples
    even2, odd2 = kind_tables(GroupConfig(2), "m")
    odd2 = dict(odd2)
    odd2[("1", "x", "y")] = odd2[("1", "x", "y")] + parse("y", "2")
    assert cocycle_defects((even2, odd2), "2", window=1).failures > 0


@pytest.mark.parametrize("v", ["2", "4+"])
def test_tabulated_closed_forms_are_cocycles(v):
    assert cocycle_defects(closed_form_tables(v), v, window=1).ok


@pytest.mark.parametrize("t", [2, 4])
def test_trilinear_and_s_rules(t):
    cfg = GroupConfig(t)
    v = variant_of(t)
    m, mp = SecondaryProduct(cfg, "m"), SecondaryProduct(cfg, "m'")
    s = parse("s", v)

    @given(elements(v, 4, 1), elements(v, 4, 1), elements(v, 4, 1), elements(v, 4, 1))
    def run(a, a2, b, c):
        assert m(a + a2, b, c) == m(a, b, c) + m(a2, b, c)
        assert m(s * s * a, b, c) == s * s * m(a, b, c)
        assert m(a, s * b, c) == s * m(a, b, c) == m(a, b, s * c)
        assert mp(s * a, b, c) == s * mp(a, b, c)
    run()


def test_m_values_on_generators():
    x2, y2 = parse("x", "2"), parse("y", "2")
    assert SecondaryProduct(GroupConfig(2))(x2, y2, x2) == x2 * y2
    x4, y4 = parse("x", "4+"), parse("y", "4+")
    assert SecondaryProduct(GroupConfig(8))(x4, y4, x4) == x4 * x4


def test_modified_representative_needs_t4():
    with pytest.raises(ConfigError):
        SecondaryProduct(GroupConfig(2), "m~")
    with pytest.raises(ValueError):
        SecondaryProduct(GroupConfig(2), "q")
    assert set(KINDS) == {"m", "m'", "m''", "m~"}


@pytest.mark.parametrize("t", [2, 4, 8])
def test_gamma_certificates(t):
    cfg = GroupConfig(t)
    cert = gamma_certificate(cfg)
    assert cert.verdict == "nontrivial"
    assert cert.is_valid_obstruction(cert.result.certificate)
    assert cert.is_valid_obstruction(cert.functional_for(hand_obstruction(cert.variant)))
    # m' agrees with m on s^0 triples, so the same system is infeasible
    assert gamma_certificate(cfg, "m'").verdict == "nontrivial"
    assert gamma_certificate(cfg, "m''").verdict == "inconclusive"


def test_t2_hand_obstruction_uses_five_equations_and_mirror():
    cert = gamma_certificate(GroupConfig(2))
    combo = hand_obstruction("2")
    support = cert.support(cert.functional_for(combo))
    assert len(combo) == 10
    assert ("x", "y", "x") in support and ("y", "x", "y") in support
