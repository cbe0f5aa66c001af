"""Exponent calculus: signatures, profiles, lambda/kappa, delta, references."""

from fractions import Fraction

import pytest

from szpirolab.polys import RationalPoly, form_factorization
from szpirolab.profiles import (
    BETA_EXPECTED,
    FamilySignature,
    FormProfile,
    beta_expected,
    derive_signature,
    group_order,
    lambda_kappa,
    normalize_group,
    profile,
    theorem_delta,
)

T = RationalPoly.t()


def poly_of_degree(n):
    return T**n + 1


def test_signature_invariants():
    with pytest.raises(ValueError):
        FamilySignature(3, 1, 1)
    with pytest.raises(ValueError):
        FamilySignature(1, 2, 3)  # neither m=1 nor n=1
    with pytest.raises(ValueError):
        FamilySignature(2, 2, 1)  # nu=2 forces n=1
    assert FamilySignature(1, 1, 2).m == 2


def test_derive_signature_rows():
    assert derive_signature(poly_of_degree(2), poly_of_degree(3), 1) == FamilySignature(1, 1, 2)
    assert derive_signature(poly_of_degree(4), poly_of_degree(6), 1) == FamilySignature(1, 1, 1)
    assert derive_signature(poly_of_degree(8), poly_of_degree(12), 1) == FamilySignature(1, 2, 1)
    assert derive_signature(poly_of_degree(1), poly_of_degree(2), 1) == FamilySignature(1, 1, 3)
    assert derive_signature(T, T + 1, 2) == FamilySignature(2, 1, 2)


def test_derive_signature_rejections():
    with pytest.raises(ValueError):
        derive_signature(poly_of_degree(3), poly_of_degree(4), 1)  # datum 3/4
    with pytest.raises(ValueError):
        derive_signature(poly_of_degree(8), poly_of_degree(12), 2)  # nu=2, n=2
    with pytest.raises(ValueError):
        derive_signature(T, T, 1)  # not coprime


def test_profile_c4():
    d = 256 * T**4 * (16 * T - 1)
    pr = profile(form_factorization(d, 6), m=2)
    assert pr.md == 12
    assert pr.delta0 == 1
    assert sorted(pr.entries) == [(2, 1), (2, 1)]


def test_profile_c7():
    d = 256 * T**7 * (T - 1) ** 7 * (T**3 + 5 * T**2 - 8 * T + 1)
    pr = profile(form_factorization(d, 24), m=1)
    assert pr.md == 24
    assert pr.delta0 == 1
    assert sorted(d for d, _ in pr.entries) == [1, 1, 3]
    assert sum(d for d, _ in pr.entries) == 5


def test_profile_xy():
    pr = profile(form_factorization(T, 2), m=1)
    assert (pr.md, pr.delta0, pr.entries) == (2, 1, ((1, 1),))


def test_lambda_kappa_families():
    d4 = 256 * T**4 * (16 * T - 1)
    assert lambda_kappa(profile(form_factorization(d4, 6), 2)) == (
        Fraction(12, 5),
        Fraction(12, 5),
    )
    d7 = 256 * T**7 * (T - 1) ** 7 * (T**3 + 5 * T**2 - 8 * T + 1)
    assert lambda_kappa(profile(form_factorization(d7, 24), 1)) == (
        Fraction(4),
        Fraction(4),
    )


def test_lambda_kappa_weighted_quintic():
    # md=5, single irreducible quintic, no y factor, not divisible by x:
    # delta=(5,), w=(3,) forces lambda=1, kappa=5/(5/3)=3
    pr = FormProfile(5, 0, ((5, 3),))
    assert lambda_kappa(pr) == (Fraction(1), Fraction(3))
    with pytest.raises(ValueError):
        lambda_kappa(FormProfile(5, 0, ()))


def test_theorem_delta_values():
    assert theorem_delta(2, 1) == 1
    assert theorem_delta(1, 1) == 1
    assert theorem_delta(3, 1) == Fraction(1, 2)
    assert theorem_delta(4, 1) == Fraction(3, 5)
    with pytest.raises(ValueError):
        theorem_delta(3, 4)
    with pytest.raises(ValueError):
        theorem_delta(0, 1)


def test_theorem_delta_anchor_bound():
    # at r=1 the exponent is at least 1 - 2/(d+1), equal iff d-1 is prime
    for d in range(3, 13):
        val = theorem_delta(d, 1)
        anchor = 1 - Fraction(2, d + 1)
        assert val >= anchor
        d1_prime = all((d - 1) % k for k in range(2, d - 1)) and d - 1 > 1
        assert (val == anchor) == d1_prime


def test_beta_expected():
    assert beta_expected("C1") == 1
    assert beta_expected("C9") == Fraction(9, 2)
    assert beta_expected("C2xC8") == Fraction(24, 5)
    assert beta_expected("c2 × c8") == Fraction(24, 5)
    assert len(BETA_EXPECTED) == 15
    with pytest.raises(ValueError):
        beta_expected("C11")


def test_group_labels():
    assert normalize_group("c2*c2") == "C2xC2"
    assert group_order("C12") == 12
    assert group_order("C2xC6") == 12
