import itertools

import pytest
from hypothesis import given, strategies as st

from hyperalg.core import (
    bits,
    extend_hyperop,
    hypersum_masks,
    iterated_hypersum,
    mask_mul,
    mask_of,
    powerset_cap,
    subset_order,
)
from hyperalg.hyper import krasner, signs


def test_bits_mask_roundtrip():
    assert list(bits(0b10110)) == [1, 2, 4]
    assert mask_of([1, 2, 4]) == 0b10110
    assert mask_of([]) == 0


@given(st.sets(st.integers(min_value=0, max_value=20)))
def test_mask_of_bits_inverse(s):
    assert set(bits(mask_of(s))) == s


def test_extend_hyperop_krasner():
    k = krasner()
    # {0,1} + {1} = (0+1) u (1+1) = {1} u {0,1} = {0,1}
    assert extend_hyperop(k.add, 0b11, 0b10) == 0b11
    assert extend_hyperop(k.add, 0, 0b10) == 0
    assert extend_hyperop(k.add, 0b10, 0) == 0


@given(
    st.integers(min_value=0, max_value=7),
    st.integers(min_value=0, max_value=7),
)
def test_extend_commutes_on_signs(a, b):
    s = signs()
    assert extend_hyperop(s.add, a, b) == extend_hyperop(s.add, b, a)
    assert mask_mul(s.mul, a, b) == mask_mul(s.mul, b, a)


@given(st.lists(st.integers(min_value=0, max_value=2), min_size=1, max_size=6))
def test_hypersum_permutation_invariant(elems):
    s = signs()
    base = iterated_hypersum(s.add, elems)
    for p in itertools.permutations(elems):
        assert iterated_hypersum(s.add, list(p)) == base


def test_hypersum_masks_matches_elementwise():
    s = signs()
    assert hypersum_masks(s.add, [2, 4, 4]) == iterated_hypersum(s.add, [1, 2, 2])


def test_iterated_hypersum_empty_rejected():
    with pytest.raises(ValueError):
        iterated_hypersum(signs().add, [])


def test_subset_order_zero_one_first():
    order = subset_order(3)
    assert order[:2] == [1, 2]
    assert sorted(order) == list(range(1, 8))
    with_empty = subset_order(3, include_empty=True)
    assert with_empty[:2] == [1, 2]
    assert 0 in with_empty and len(with_empty) == 8


def test_powerset_cap_env(monkeypatch):
    monkeypatch.setenv("HYPERALG_MAX_POWERSET", "10")
    assert powerset_cap() == 10
    monkeypatch.setenv("HYPERALG_MAX_POWERSET", "99")
    assert powerset_cap() == 16  # hard cap
    monkeypatch.delenv("HYPERALG_MAX_POWERSET")
    assert powerset_cap() == 8
