"""Curve invariants: reduction, heights, local data, conductor, torsion gate."""

import random
from math import gcd

import mpmath
import pytest

from szpirolab.arith import factor
from szpirolab.elliptic import (
    Curve,
    conductor_exponent_closed_form,
    count_points,
    discriminant,
    global_invariants,
    good_primes,
    minimal_short,
    naive_height,
    sigma_ratio,
    tate_local,
    torsion_multiple_check,
)

# independently known conductor / minimal discriminant pairs, including
# models that are non-minimal at 2 or 3 so the rescaling branch is hit
KNOWN = [
    ((-1, 0), 32, 64),
    ((1, 0), 64, -64),
    ((0, 1), 36, -432),
    ((0, 16), 27, -27),
    ((-16, 16), 37, 37),
    ((-35, -98), 49, -343),
    ((-13392, -1080432), 11, -161051),
    ((1, 1), 496, -496),
    ((0, -432), 27, -19683),
]


def test_curve_rejects_singular():
    with pytest.raises(ValueError):
        Curve(0, 0)
    with pytest.raises(ValueError):
        Curve(-3, 2)


def test_minimal_short_examples():
    assert minimal_short(0, 2**6) == (Curve(0, 1), 2)
    assert minimal_short(2**4, 2**6) == (Curve(1, 1), 2)
    assert minimal_short(1, 1) == (Curve(1, 1), 1)
    assert minimal_short(-(3**4), 0) == (Curve(-1, 0), 3)
    big = 510510  # 2*3*5*7*11*13*17
    assert minimal_short(big**4 * 2, big**6 * 5) == (Curve(2, 5), big)


def test_minimal_short_with_hints():
    c, u = minimal_short(2**4 * 3**4, 2**6 * 3**6, prime_hints=[2, 3])
    assert (c, u) == (Curve(1, 1), 6)


def test_naive_height():
    assert naive_height(Curve(0, 1)) == 27
    assert naive_height(Curve(-1, 0)) == 4
    assert naive_height(Curve(2, 3)) == 243


def test_discriminant():
    assert discriminant(Curve(0, 1)) == -432
    assert discriminant(Curve(-1, 0)) == 64
    rng = random.Random(1)
    for _ in range(100):
        a, b = rng.randrange(-40, 41), rng.randrange(-40, 41)
        if 4 * a**3 + 27 * (b**3 + a * b) ** 2 == 0:
            continue
        c = Curve(a, b**3 + a * b)
        assert discriminant(c) == -16 * (a + 3 * b**2) ** 2 * (4 * a + 3 * b**2)


def test_tate_local_examples():
    assert tate_local(Curve(0, 1), 5).f_p == 0
    ld = tate_local(Curve(1, 1), 31)
    assert (ld.f_p, ld.v_p_disc_min, ld.kodaira) == (1, 1, "I1")
    ld2 = tate_local(Curve(-1, 0), 2)
    assert (ld2.f_p, ld2.v_p_disc_min, ld2.kodaira) == (5, 6, "III")
    with pytest.raises(ValueError):
        tate_local(Curve(1, 1), 4)


def test_known_curves():
    for (A, B), N, dmin in KNOWN:
        gi = global_invariants(Curve(A, B))
        assert gi.conductor == N, (A, B)
        assert gi.disc_min.value == dmin, (A, B)


def test_global_invariants_examples():
    gi = global_invariants(Curve(-1, 0))
    assert gi.disc_min.value == 64 and gi.conductor == 32
    assert abs(gi.sigma - 1.2) < 1e-12
    gi = global_invariants(Curve(0, 1))
    assert gi.disc_min.value == -432 and gi.conductor == 36
    with mpmath.workdps(40):
        ref = float(mpmath.log(432) / mpmath.log(36))
    assert abs(gi.sigma - ref) < 1e-12
    # hint path must agree with the from-scratch path
    gi2 = global_invariants(Curve(0, 1), disc_hint=factor(-432))
    assert gi2 == gi
    with pytest.raises(ValueError):
        global_invariants(Curve(0, 1), disc_hint=factor(-433))


def test_sandwich_and_sigma_bounds():
    rng = random.Random(5)
    for _ in range(150):
        A, B = rng.randrange(-200, 201), rng.randrange(-500, 501)
        if 4 * A**3 + 27 * B**2 == 0:
            continue
        gi = global_invariants(minimal_short(A, B)[0])
        dm = abs(gi.disc_min.value)
        assert dm % gi.conductor == 0
        assert gi.conductor % gi.disc_min.radical == 0
        assert gi.sigma >= 1
        if dm == gi.conductor:
            assert gi.sigma == 1.0


def test_scaling_consistency():
    rng = random.Random(9)
    for _ in range(60):
        A, B = rng.randrange(-60, 61), rng.randrange(-60, 61)
        if 4 * A**3 + 27 * B**2 == 0:
            continue
        u = rng.choice([2, 3, 6, 10])
        gi1 = global_invariants(minimal_short(A, B)[0])
        gi2 = global_invariants(minimal_short(u**4 * A, u**6 * B)[0])
        assert gi1 == gi2


def test_closed_form_cross_check():
    rng = random.Random(13)
    checked = 0
    for _ in range(400):
        A, B = rng.randrange(-1000, 1001), rng.randrange(-10000, 10001)
        if 4 * A**3 + 27 * B**2 == 0:
            continue
        c, _ = minimal_short(A, B)
        for p, _e in factor(discriminant(c)).factors:
            ld = tate_local(c, p)
            if p >= 5:
                assert (ld.f_p, ld.v_p_disc_min) == conductor_exponent_closed_form(c, p)
                checked += 1
            else:
                assert ld.f_p <= 8
    assert checked > 300


def test_sigma_ratio_precision():
    with mpmath.workdps(50):
        ref = float(mpmath.log(11**5) / mpmath.log(11))
    assert sigma_ratio(11**5, 11) == pytest.approx(ref, abs=1e-12)
    assert sigma_ratio(7, 7) == 1.0
    with pytest.raises(ValueError):
        sigma_ratio(64, 1)


def test_count_points_matches_naive():
    rng = random.Random(21)
    for p in (5, 7, 11, 13):
        for _ in range(8):
            A, B = rng.randrange(1, p), rng.randrange(p)
            if 4 * A**3 + 27 * B**2 == 0 or (4 * A**3 + 27 * B**2) % p == 0:
                continue
            naive = 1 + sum(
                1
                for x in range(p)
                for y in range(p)
                if (y * y - x**3 - A * x - B) % p == 0
            )
            assert count_points(Curve(A, B), p) == naive


def test_torsion_multiple_check():
    assert torsion_multiple_check(Curve(-1, 0), "C2xC2", [5, 7, 13])
    assert torsion_multiple_check(Curve(0, 1), "C6", [5, 7, 13])
    assert not torsion_multiple_check(Curve(1, 1), "C5", [5, 7, 13])
    with pytest.raises(ValueError):
        torsion_multiple_check(Curve(1, 1), "C5", [31])  # bad reduction
    with pytest.raises(ValueError):
        torsion_multiple_check(Curve(1, 1), "C5", [3])


def test_good_primes():
    assert good_primes(Curve(1, 1)) == [5, 7, 11]
    assert good_primes(Curve(0, 1)) == [5, 7, 11]
