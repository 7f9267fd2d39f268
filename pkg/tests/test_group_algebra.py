import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from tatemassey.group_algebra import (
    SUPPORTED_T,
    AlgebraElement,
    ConfigError,
    GroupConfig,
    augmentation,
    group_elements,
    is_central,
    kg_matmul,
    parse_element,
    special,
    verify_identities,
)

ts = st.sampled_from([2, 4, 8])


@pytest.mark.parametrize("t", SUPPORTED_T)
def test_identities(t):
    failed = [name for name, ok in verify_identities(GroupConfig(t)) if not ok]
    assert not failed


@pytest.mark.parametrize("t", SUPPORTED_T)
def test_group_presentation(t):
    cfg = GroupConfig(t)
    g, h = special("g", cfg), special("h", cfg)
    assert g ** t == h ** 2
    assert g * h * g == h
    assert len(set(map(str, group_elements(t)))) == 4 * t


@given(ts, st.data())
def test_group_law_is_associative(t, data):
    elems = group_elements(t)
    a, b, c = (data.draw(st.sampled_from(elems)) for _ in range(3))
    assert (a * b) * c == a * (b * c)


def elements(cfg):
    return st.lists(st.integers(0, cfg.field.q - 1), min_size=cfg.order, max_size=cfg.order).map(
        lambda v: AlgebraElement(cfg, v))


@given(ts, st.data())
def test_algebra_ring_axioms(t, data):
    cfg = GroupConfig(t)
    p, q, r = (data.draw(elements(cfg)) for _ in range(3))
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert augmentation(p * q) == augmentation(p) & augmentation(q)


@given(st.data())
def test_gf4_coefficients(data):
    cfg = GroupConfig(4, "GF4")
    p, q = data.draw(elements(cfg)), data.draw(elements(cfg))
    assert parse_element(str(p * q), cfg) == p * q


@given(ts, st.data())
def test_parse_roundtrip(t, data):
    cfg = GroupConfig(t)
    p = data.draw(elements(cfg))
    assert parse_element(str(p), cfg) == p


@given(ts, st.data())
def test_matrix_product_matches_elementwise(t, data):
    cfg = GroupConfig(t)
    A = [[data.draw(elements(cfg)) for _ in range(2)] for _ in range(2)]
    B = [[data.draw(elements(cfg)) for _ in range(2)] for _ in range(2)]
    arrA = np.array([[e.coeffs for e in r] for r in A])
    arrB = np.array([[e.coeffs for e in r] for r in B])
    prod = kg_matmul(arrA, arrB, t)
    for i in range(2):
        for j in range(2):
            want = A[i][0] * B[0][j] + A[i][1] * B[1][j]
            assert np.array_equal(prod[i, j], want.coeffs)


def test_norm_element_is_central_and_sums_group():
    cfg = GroupConfig(4)
    N = special("N", cfg)
    assert is_central(N)
    assert N == AlgebraElement(cfg, np.ones(cfg.order, dtype=np.uint8))


def test_bad_configurations():
    for bad in (3, 1, 0, 32):
        with pytest.raises(ConfigError):
            GroupConfig(bad)
    assert GroupConfig(32, max_t=32).order == 128
    with pytest.raises(ConfigError):
        special("u", GroupConfig(2))
