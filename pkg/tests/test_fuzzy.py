import itertools

import pytest

from hyperalg.core import mask_of
from hyperalg.fuzzy import (
    BUILTIN_FUZZY,
    builtin_fuzzy,
    check_fuzzy_axioms,
    check_strong_morphism,
    check_weak_morphism,
    enumerate_unit_homs,
    enumerate_weak_morphisms,
    krasner_fuzzy,
    make_fuzzy_ring,
    ring_as_fuzzy,
    sign_fuzzy,
    weak_iso,
    weak_violation_by_enumeration,
)
from hyperalg.hyper import galois_field


@pytest.mark.parametrize("name", sorted(BUILTIN_FUZZY))
def test_builtin_fuzzy_axioms(name):
    assert check_fuzzy_axioms(builtin_fuzzy(name)).passed


def test_krasner_fuzzy_tables():
    k = krasner_fuzzy()
    assert k.n == 3
    assert k.epsilon == 1  # -1 = 1
    assert k.k0 == mask_of([0, 2])
    assert k.add[1][1] == 2  # 1 + 1 is the null element
    assert k.mul[2][2] == 2


def test_sign_fuzzy_tables():
    s = sign_fuzzy()
    assert s.n == 4
    assert s.epsilon == 2
    assert s.k0 == mask_of([0, 3])
    assert s.add[1][2] == 3  # 1 + (-1) null
    assert s.add[1][1] == 1
    assert s.mul[2][2] == 1


def test_epsilon_located_by_axiom():
    s = sign_fuzzy()
    rebuilt = make_fuzzy_ring(s.add, s.mul, s.k0)
    assert rebuilt.epsilon == 2
    with pytest.raises(ValueError):
        make_fuzzy_ring(s.add, s.mul, s.k0, epsilon=1)


def test_ring_as_fuzzy():
    k = ring_as_fuzzy(galois_field(5))
    assert check_fuzzy_axioms(k).passed
    assert k.k0 == 1  # only 0 is null
    assert k.epsilon == 4  # -1 mod 5


def test_axiom_checker_catches_broken_fr5():
    s = sign_fuzzy()
    # declare every element null: FR4-one-not-null must fire
    broken = s.__class__(s.n, s.add, s.mul, s.epsilon, 0b1111, s.name)
    rep = check_fuzzy_axioms(broken)
    assert not rep.passed


# --- morphisms ---------------------------------------------------------------


def test_weak_identity_accepted():
    s = sign_fuzzy()
    cert = check_weak_morphism(s, s, {1: 1, 2: 2})
    assert cert.accepted


def test_weak_morphism_signfuzzy_to_krasnerfuzzy():
    # collapse the sign: units {1,-1} -> {1}
    cert = check_weak_morphism(sign_fuzzy(), krasner_fuzzy(), {1: 1, 2: 1})
    assert cert.accepted


def test_no_weak_morphism_krasnerfuzzy_to_signfuzzy_hits_violation():
    # 1+1 is null in krasnerfuzzy but 1+1=1 in signfuzzy
    cert = check_weak_morphism(krasner_fuzzy(), sign_fuzzy(), {1: 1})
    assert not cert.accepted


def test_weak_morphism_demands_exact_unit_domain():
    with pytest.raises(ValueError):
        check_weak_morphism(sign_fuzzy(), sign_fuzzy(), {1: 1})


def test_closure_agrees_with_enumeration_oracle():
    pairs = [
        (sign_fuzzy(), krasner_fuzzy()),
        (krasner_fuzzy(), sign_fuzzy()),
        (sign_fuzzy(), sign_fuzzy()),
        (krasner_fuzzy(), krasner_fuzzy()),
    ]
    for k, l in pairs:
        for unit_map in _all_unit_maps(k, l):
            cert = check_weak_morphism(k, l, unit_map)
            witness = weak_violation_by_enumeration(k, l, unit_map)
            assert cert.accepted == (witness is None), (k.name, l.name, unit_map)


def _all_unit_maps(k, l):
    from hyperalg.fuzzy import enumerate_unit_homs

    return [dict(h) for h in enumerate_unit_homs(k, l)]


def test_strong_morphism_identity():
    s = sign_fuzzy()
    assert check_strong_morphism(s, s, range(s.n)).accepted


def test_strong_morphism_sign_collapse():
    # signfuzzy -> krasnerfuzzy: 0->0, 1->1, -1->1, k0->k0
    cert = check_strong_morphism(sign_fuzzy(), krasner_fuzzy(), (0, 1, 1, 2))
    assert cert.accepted


def test_strong_morphism_rejects_non_multiplicative():
    cert = check_strong_morphism(sign_fuzzy(), krasner_fuzzy(), (0, 1, 2, 2))
    assert not cert.accepted


def test_weak_iso():
    assert weak_iso(sign_fuzzy(), sign_fuzzy()) is not None
    assert weak_iso(sign_fuzzy(), krasner_fuzzy()) is None


def test_enumerate_weak_morphisms():
    tables = enumerate_weak_morphisms(sign_fuzzy(), krasner_fuzzy())
    assert len(tables) == 1
    assert all(t.certificate.accepted for t in tables)
