import itertools

import pytest

import hyperalg as ha
from hyperalg.core import mask_of
from hyperalg.hyper import (
    BUILTIN_HYPERRINGS,
    builtin,
    check_canonical_hypergroup,
    check_doubly_distributive,
    check_hom,
    check_hyperfield,
    check_hyperring,
    cyclic_group,
    enumerate_homs,
    field_hyperfield,
    galois_field,
    iso_hyper,
    kh,
    khef,
    klein_four,
    krasner,
    make_hyperring,
    quotient,
    ring_as_hyperring,
    signs,
)

ALL_BUILTINS = sorted(BUILTIN_HYPERRINGS)


@pytest.mark.parametrize("name", ALL_BUILTINS)
def test_builtins_are_hyperrings(name):
    assert check_hyperring(builtin(name)).passed


@pytest.mark.parametrize(
    "name", [n for n in ALL_BUILTINS if n != "khef-klein4"]
)
def test_builtin_hyperfields(name):
    assert check_hyperfield(builtin(name)).passed


def test_khef_is_not_a_hyperfield():
    # e and f are multiplicatively idempotent zero divisors
    rep = check_hyperfield(builtin("khef-klein4"))
    assert not rep.passed
    assert any(label == "nonzero-invertible" for label, _ in rep.violations)


def test_krasner_table():
    k = krasner()
    assert k.n == 2
    assert k.add[1][1] == 0b11  # 1+1 = {0,1}
    assert k.add[1][0] == 0b10
    assert k.mul[1][1] == 1


def test_signs_table():
    s = signs()
    assert s.n == 3
    assert s.neg[1] == 2
    assert s.add[1][2] == 0b111  # 1 + (-1) = {0,1,-1}
    assert s.add[1][1] == 0b010  # 1 + 1 = {1}
    assert s.mul[2][2] == 1  # (-1)(-1) = 1


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9])
def test_galois_fields(q):
    f = field_hyperfield(q)
    assert f.n == q
    assert check_hyperfield(f).passed
    assert check_doubly_distributive(f).passed  # single-valued sums


def test_gf4_has_characteristic_two():
    f = field_hyperfield(4)
    for a in range(4):
        assert f.add[a][a] == 1  # a + a = {0}
    assert f.neg == (0, 1, 2, 3)


def test_gf_rejects_non_prime_powers():
    with pytest.raises(ValueError):
        galois_field(6)


# --- quotient construction -------------------------------------------------


def test_quotient_gf4_by_full_units_is_krasner():
    # GF(4)^x is cyclic of order 3; collapsing it leaves {0, 1} with 1+1={0,1}
    q = quotient(galois_field(4), mask_of([1, 2, 3]))
    assert q.n == 2
    assert iso_hyper(q, krasner()) is not None
    assert check_hyperfield(q).passed


def test_quotient_gf5_by_squares():
    # U = {1,4}: three classes [0],[1],[2] with [1]+[1] = {[0],[2]}
    q = quotient(galois_field(5), mask_of([1, 4]))
    assert q.n == 3
    assert check_hyperfield(q).passed
    assert q.add[1][1] == 0b101  # {[0], [2]}


def test_quotient_rejects_non_subgroup():
    with pytest.raises(ValueError):
        quotient(galois_field(5), mask_of([1, 2]))


def test_ring_as_hyperring_roundtrip():
    h = ring_as_hyperring(galois_field(3))
    assert check_hyperring(h).passed
    for a, b in itertools.product(range(3), repeat=2):
        assert h.add[a][b].bit_count() == 1


# --- K[H] presentations ----------------------------------------------------


def test_kh_addition_rule():
    h = kh(klein_four())
    # distinct nonzero a,b: a+b = H minus {a,b}
    assert h.add[1][2] == mask_of([3, 4])
    assert h.add[1][1] == mask_of([0, 1])
    assert check_hyperfield(h).passed


def test_kh_requires_order_at_least_four():
    with pytest.raises(ValueError):
        kh(cyclic_group(3))


def test_khef_presentation():
    h = khef(klein_four())  # carrier: 0, H=1..4, e=5, f=6
    e, f = 5, 6
    assert h.mul[e][e] == e and h.mul[f][f] == f and h.mul[e][f] == 0
    for a in range(1, 5):
        assert h.mul[e][a] == e and h.mul[f][a] == f
    assert h.add[1][2] == mask_of([3, 4, e, f])
    assert h.add[e][e] == mask_of([0, e])
    assert h.add[e][f] == mask_of([1, 2, 3, 4])  # 1 in e+f
    assert check_hyperring(h).passed


# --- homomorphisms and isomorphism search ----------------------------------


def test_no_hom_krasner_to_signs():
    assert enumerate_homs(krasner(), signs()) == []


def test_hom_signs_to_krasner():
    homs = enumerate_homs(signs(), krasner())
    assert [dict(h) if isinstance(h, dict) else h for h in homs] == [(0, 1, 1)]
    assert check_hom((0, 1, 1), signs(), krasner()).passed


def test_strict_vs_nonstrict_hom():
    # signs -> krasner is a (containment) hom but not strict:
    # 1 + (-1) = {0,1,-1} maps onto {0,1} = 1+1, equality holds here;
    # 1 + 1 = {1} maps into 1+1 = {0,1} strictly
    assert check_hom((0, 1, 1), signs(), krasner(), strict=False).passed
    assert not check_hom((0, 1, 1), signs(), krasner(), strict=True).passed


def test_iso_rejects_different_structures():
    assert iso_hyper(krasner(), signs()) is None
    assert iso_hyper(field_hyperfield(4), kh(klein_four())) is None


def test_iso_finds_relabeling():
    s = signs()
    perm = (0, 1, 2)
    assert iso_hyper(s, s) == perm


def test_make_hyperring_rejects_missing_inverse():
    # 1+1={1} has no additive inverse for 1
    with pytest.raises(ValueError):
        make_hyperring(
            ((1, 2), (2, 2)),
            ((0, 0), (0, 1)),
        )


def test_partial_laws_read_where_defined():
    uz = ha.unit_field_z()
    assert uz.partial
    assert check_canonical_hypergroup(uz).passed
    assert check_hyperring(uz).passed
    assert uz.add[1][1] == 0  # empty hypersum
    assert uz.add[1][2] == 1  # 1 + (-1) = {0}
