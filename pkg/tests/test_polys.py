"""Polynomial layer tests: exact arithmetic, Yun, factorization, forms."""

import random
from fractions import Fraction

import pytest

from szpirolab.errors import BudgetExceeded
from szpirolab.polys import (
    BinaryForm,
    RationalPoly,
    discriminant_poly,
    eval_form,
    factor_rational,
    form_factorization,
    homogenize,
    is_x_factor,
    poly_from_json,
    poly_gcd,
    poly_to_json,
    yun_squarefree,
)

T = RationalPoly.t()


def P(*coeffs):
    """Polynomial from coefficients, lowest degree first."""
    return RationalPoly(coeffs)


def test_arithmetic_basics():
    p = (T - 1) * (T + 1)
    assert p == P(-1, 0, 1)
    q, r = divmod(T**3 + 1, T + 1)
    assert r.is_zero and q == P(1, -1, 1)
    assert (T**2 + 1)(Fraction(1, 2)) == Fraction(5, 4)
    assert P(2, 4).content_and_primitive() == (2, P(1, 2))
    assert P(Fraction(2, 3), Fraction(-4, 3)).content_and_primitive() == (
        Fraction(-2, 3),
        P(-1, 2),
    )


def test_gcd():
    a = (T - 1) ** 2 * (T + 2)
    b = (T - 1) * (T + 3)
    assert poly_gcd(a, b) == T - 1
    assert poly_gcd(a, RationalPoly.zero()) == a.monic()
    assert poly_gcd(P(2), a) == RationalPoly.one()


def test_yun_examples():
    assert set(yun_squarefree(T**2 * (T - 1))) == {(T, 2), (T - 1, 1)}
    assert yun_squarefree(T**3) == [(T, 3)]
    quartic = T**4 + T + 1  # squarefree
    assert yun_squarefree(quartic) == [(quartic, 1)]
    with pytest.raises(ValueError):
        yun_squarefree(RationalPoly.zero())


def test_yun_pairwise_coprime():
    rng = random.Random(3)
    for _ in range(25):
        p = RationalPoly.one()
        for _ in range(rng.randrange(1, 4)):
            q = P(rng.randrange(-5, 6), rng.randrange(-5, 6), 1)
            p = p * q ** rng.randrange(1, 4)
        parts = yun_squarefree(p)
        prod = RationalPoly.constant(p.lc)
        for q, m in parts:
            prod = prod * q**m
        assert prod == p
        for i in range(len(parts)):
            for j in range(i + 1, len(parts)):
                assert poly_gcd(parts[i][0], parts[j][0]).degree == 0


# discriminant polynomials ---------------------------------------------------

F_2TORS2 = P(Fraction(-1, 3), Fraction(1, 3), Fraction(-1, 3))  # -(t^2-t+1)/3
G_2TORS2 = P(
    Fraction(-2, 27), Fraction(3, 27), Fraction(3, 27), Fraction(-2, 27)
)

F_C3 = P(Fraction(-1, 3), 8)  # -(1/3)(-24t+1)
G_C3 = P(Fraction(2, 27), Fraction(-72, 27), Fraction(432, 27))


def test_discriminant_poly_full_two_torsion():
    d = discriminant_poly(F_2TORS2, G_2TORS2)
    assert d == -(T**2) * (T - 1) ** 2


def test_discriminant_poly_trivial():
    assert discriminant_poly(RationalPoly.zero(), RationalPoly.one()) == P(27)


def test_discriminant_poly_c3_row():
    d = discriminant_poly(F_C3, G_C3)
    assert d == 256 * T**3 * (27 * T - 1)


def test_discriminant_poly_rejects_common_factor():
    with pytest.raises(ValueError):
        discriminant_poly(T, T**2)


# factorization ---------------------------------------------------------------


def _has_rational_root(p: RationalPoly) -> bool:
    c, prim = p.content_and_primitive()
    ints = prim.int_coeffs()
    a0, an = ints[0], ints[-1]
    if a0 == 0:
        return True
    divs0 = [d for d in range(1, abs(a0) + 1) if a0 % d == 0]
    divsn = [d for d in range(1, abs(an) + 1) if an % d == 0]
    for num in divs0:
        for den in divsn:
            for s in (1, -1):
                if p(Fraction(s * num, den)) == 0:
                    return False or True
    return False


def _random_irreducible_cubic(rng) -> RationalPoly:
    while True:
        p = P(rng.randrange(-9, 10), rng.randrange(-9, 10), rng.randrange(-9, 10), rng.randrange(1, 7))
        # cubic is irreducible over Q iff it has no rational root
        if p.degree == 3 and not _has_rational_root(p):
            return p.content_and_primitive()[1]


def test_factor_quadratic():
    fac = factor_rational(T**2 - 1)
    assert fac.unit == 1
    assert set(fac.factors) == {(T - 1, 1), (T + 1, 1)}


def test_factor_c9_discriminant_shape():
    d = 256 * T**9 * (T - 1) ** 9 * (T**2 - T + 1) ** 3 * (T**3 + 3 * T**2 - 6 * T + 1)
    fac = factor_rational(d)
    by_factor = dict(fac.factors)
    assert by_factor[T] == 9
    assert by_factor[T - 1] == 9
    assert by_factor[T**2 - T + 1] == 3
    assert by_factor[T**3 + 3 * T**2 - 6 * T + 1] == 1
    assert fac.expand_univariate() == d
    assert fac.unit == 256


def test_factor_two_random_cubics():
    rng = random.Random(41)
    for _ in range(10):
        a, b = _random_irreducible_cubic(rng), _random_irreducible_cubic(rng)
        fac = factor_rational(a * b)
        got = sorted(f.coeffs for f, _ in fac.factors)
        if a == b:
            assert fac.factors[0][1] == 2
        else:
            assert got == sorted([a.coeffs, b.coeffs])


def test_factor_roundtrip_random_products():
    rng = random.Random(97)
    for _ in range(40):
        p = RationalPoly.constant(rng.choice([1, -1, 2, Fraction(3, 4)]))
        for _ in range(rng.randrange(1, 4)):
            deg = rng.randrange(1, 4)
            q = P(*[rng.randrange(-8, 9) for _ in range(deg)], rng.randrange(1, 5))
            p = p * q ** rng.randrange(1, 3)
        fac = factor_rational(p)
        assert fac.expand_univariate() == p
        # pairwise coprime, irreducible pieces are at least squarefree
        fs = [f for f, _ in fac.factors]
        for i in range(len(fs)):
            assert fs[i].lc > 0
            for j in range(i + 1, len(fs)):
                assert poly_gcd(fs[i], fs[j]).degree == 0


def test_factor_big_lc():
    p = (P(1, 21) * P(-1, 393)) ** 2 * P(3, 0, 5)
    fac = factor_rational(p)
    assert fac.expand_univariate() == p


def test_factor_degree_cap():
    with pytest.raises(BudgetExceeded):
        factor_rational(T**65)
    fac = factor_rational(T**65, degree_cap=70)
    assert fac.factors == ((T, 65),)


# homogenization and forms ----------------------------------------------------


def test_homogenize_simple():
    form, unit = homogenize(T, 2)
    assert unit == 1
    assert form.monomials == ((1, 1, 1),)
    assert form.y_valuation == 1


def test_homogenize_c4_row():
    d = 256 * T**4 * (16 * T - 1)
    form, unit = homogenize(d, 6)
    assert unit == 256
    assert form.y_valuation == 1
    assert form.eval(1, 1) == 15  # 16 - 1
    # dehomogenize returns the primitive part
    assert form.to_univariate() * unit == d


def test_homogenize_degree_error():
    with pytest.raises(ValueError):
        homogenize(T**3, 2)


def test_homogenize_dehomogenize_identity():
    rng = random.Random(5)
    for _ in range(30):
        p = P(*[rng.randrange(-9, 10) for _ in range(rng.randrange(1, 6))], rng.randrange(1, 9))
        form, unit = homogenize(p, p.degree + rng.randrange(0, 3))
        assert form.to_univariate() * unit == p


def test_eval_form():
    xy = BinaryForm(((1, 1, 1),), 2)
    assert eval_form(xy, 3, 2, 2) == 12
    # 4x^3 + 27y^2 is weighted-homogeneous with x of weight 2, y of weight 3
    disc = BinaryForm(((0, 2, 27), (3, 0, 4)), 6, (2, 3))
    assert eval_form(disc, 1, 1, 1) == 31


def test_eval_form_c4_cross_route():
    # evaluating the homogenized discriminant form at (a, b^m) must agree
    # with b^(12n/nu) * d(a / b^m) computed through discriminant_poly
    f = P(Fraction(-1, 3), Fraction(16, 3), Fraction(-16, 3))
    g = Fraction(2, 27) * P(1, -24, 120, 64)
    d = discriminant_poly(f, g)
    form, unit = homogenize(d, 6)
    for a, b in [(1, 1), (3, 2), (-5, 3)]:
        lhs = unit * eval_form(form, a, b, 2)
        rhs = Fraction(b) ** 12 * d(Fraction(a, b**2))
        assert lhs == rhs


def test_weighted_form():
    # -16 (x + 3 y^2)^2 (4 x + 3 y^2) with x of weight 2: total degree 6
    f1 = BinaryForm(((0, 2, 3), (1, 0, 1)), 2, (2, 1))
    f2 = BinaryForm(((0, 2, 3), (1, 0, 4)), 2, (2, 1))
    prod = (f1**2 * f2).scaled(-16)
    assert prod.degree == 6
    for a, b in [(1, 1), (2, -3), (-7, 2)]:
        assert prod.eval(a, b) == -16 * (a + 3 * b**2) ** 2 * (4 * a + 3 * b**2)


def test_form_factorization_helper():
    d = 256 * T**4 * (16 * T - 1)
    fac = form_factorization(d, 6)
    assert fac.y_exponent == 1
    assert fac.degree == 6
    assert sorted((str(f), m, is_x_factor(f)) for f, m in fac.factors) == [
        ("16*t - 1", 1, False),
        ("t", 4, True),
    ]


def test_json_roundtrip():
    p = P(Fraction(-1, 3), 0, Fraction(22, 7))
    assert poly_to_json(p) == ["-1/3", "0/1", "22/7"]
    assert poly_from_json(poly_to_json(p)) == p
