"""Curve-level invariants for y^2 = x^3 + A x + B over Q.

Provides the minimal short Weierstrass reduction, naive height, exact local
reduction data (conductor exponent and minimal-discriminant valuation) at
every prime via the full local minimization procedure, global invariants
(minimal discriminant, conductor, Szpiro ratio), and a reduction-based
necessary check for a prescribed torsion subgroup.

The local procedure runs the standard step cascade on the long Weierstrass
model (0, 0, 0, A, B): translate the singular point to the origin, test the
multiplicative/additive split and each fiber type in turn, and restart on a
p-rescaled model when the input was non-minimal at p.  All arithmetic is on
exact integers; the per-step divisibility claims are asserted rather than
assumed.  For p >= 5 the result always agrees with the closed form
(exponent 1 when p divides the discriminant but not A, else 2), which the
test suite checks against this implementation on random curves.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

import mpmath

from .arith import (
    SMALL_PRIMES,
    TRIAL_LIMIT,
    FactoredInteger,
    factor,
    is_prime,
    valuation,
)
from .profiles import group_order, normalize_group


@dataclass(frozen=True)
class Curve:
    """Short Weierstrass pair (A, B); must be nonsingular."""

    A: int
    B: int

    def __post_init__(self):
        if 4 * self.A**3 + 27 * self.B**2 == 0:
            raise ValueError(f"singular curve ({self.A}, {self.B})")


def discriminant(c: Curve) -> int:
    """Disc = -16 (4A^3 + 27B^2)."""
    return -16 * (4 * c.A**3 + 27 * c.B**2)


def naive_height(c: Curve) -> int:
    """H = max(4|A|^3, 27 B^2)."""
    return max(4 * abs(c.A) ** 3, 27 * c.B**2)


def minimal_short(A: int, B: int, prime_hints=None) -> tuple[Curve, int]:
    """Divide out the largest u with u^4 | A and u^6 | B.

    Any such u-scaling is an isomorphism, so the returned pair is the
    unique minimal short model of the same curve: no prime p has p^4 | A'
    and p^6 | B'.  prime_hints may list primes to try (any prime actually
    occurring in u divides gcd(A, B), so hints from a factored discriminant
    are always sufficient).
    """
    if 4 * A**3 + 27 * B**2 == 0:
        raise ValueError(f"singular curve ({A}, {B})")
    candidates = set(prime_hints) if prime_hints is not None else None
    if candidates is None:
        if A == 0:
            base = abs(B)
        elif B == 0:
            base = abs(A)
        else:
            base = gcd(abs(A), abs(B))
        candidates = set()
        for p in SMALL_PRIMES:
            if p**4 > base:
                break
            if base % p == 0:
                candidates.add(p)
                while base % p == 0:
                    base //= p
        # a residual part below TRIAL_LIMIT^4 cannot hide p^4 for a new p
        if base > TRIAL_LIMIT**4:
            candidates.update(p for p, _ in factor(base).factors)
    u = 1
    for p in sorted(candidates):
        eA = valuation(A, p) if A else None
        eB = valuation(B, p) if B else None
        if eA is None:
            e = eB // 6
        elif eB is None:
            e = eA // 4
        else:
            e = min(eA // 4, eB // 6)
        u *= p**e
    return Curve(A // u**4, B // u**6), u


# -- local data via the step cascade ---------------------------------------


@dataclass(frozen=True)
class LocalData:
    """Reduction data at p: conductor exponent and v_p of the minimal disc."""

    p: int
    f_p: int
    v_p_disc_min: int
    kodaira: str

    def __post_init__(self):
        if self.f_p > (8 if self.p in (2, 3) else 2):
            raise ValueError(f"conductor exponent {self.f_p} too large at {self.p}")
        if self.f_p > self.v_p_disc_min:
            raise ValueError("f_p cannot exceed v_p(disc_min)")
        if (self.f_p == 0) != (self.v_p_disc_min == 0):
            raise ValueError("f_p and v_p(disc_min) must vanish together")


def _translate(a, r, s, t):
    """Coordinate change x -> x + r, y -> y + s x + t on long coefficients."""
    a1, a2, a3, a4, a6 = a
    return (
        a1 + 2 * s,
        a2 - s * a1 + 3 * r - s * s,
        a3 + r * a1 + 2 * t,
        a4 - s * a3 + 2 * r * a2 - (t + r * s) * a1 + 3 * r * r - 2 * s * t,
        a6 + r * a4 + r * r * a2 + r**3 - t * a3 - t * t - r * t * a1,
    )


def _binvariants(a):
    a1, a2, a3, a4, a6 = a
    b2 = a1 * a1 + 4 * a2
    b4 = 2 * a4 + a1 * a3
    b6 = a3 * a3 + 4 * a6
    b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
    return b2, b4, b6, b8


def _disc_from_b(b2, b4, b6, b8):
    return -b2 * b2 * b8 - 8 * b4**3 - 27 * b6 * b6 + 9 * b2 * b4 * b6


def _vp(n, p):
    if n == 0:
        return None  # stands for +infinity
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


def _vp_ge(n, p, k):
    return n % p**k == 0


def tate_local(c: Curve, p: int) -> LocalData:
    """Exact local data (f_p, v_p(disc_min), fiber type) at the prime p."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    a = (0, 0, 0, c.A, c.B)
    halfp = (p + 1) // 2  # inverse of 2 mod p, p odd

    while True:
        b2, b4, b6, b8 = _binvariants(a)
        delta = _disc_from_b(b2, b4, b6, b8)
        n = _vp(delta, p)
        if n == 0:
            return LocalData(p, 0, 0, "I0")

        # move the singular point of the reduction to the origin
        a1, a2, a3, a4, a6 = a
        if p == 2:
            if b2 % 2 == 0:
                r = a4 % 2
                t = (r * (1 + a2 + a4) + a6) % 2
            else:
                r = a3 % 2
                t = (r + a4) % 2
        elif p == 3:
            r = (-b6) % 3 if b2 % 3 == 0 else (-b2 * b4) % 3
            t = (a1 * r + a3) % 3
        else:
            c4 = b2 * b2 - 24 * b4
            c6 = -(b2**3) + 36 * b2 * b4 - 216 * b6
            if c4 % p == 0:
                r = -b2 * pow(12, -1, p) % p
            else:
                r = -(c6 + b2 * c4) * pow(12 * c4, -1, p) % p
            t = -halfp * (a1 * r + a3) % p
        a = _translate(a, r, 0, t)
        a1, a2, a3, a4, a6 = a
        assert a3 % p == 0 and a4 % p == 0 and a6 % p == 0
        b2, b4, b6, b8 = _binvariants(a)

        if b2 % p != 0:
            return LocalData(p, 1, n, f"I{n}")  # multiplicative
        if not _vp_ge(a6, p, 2):
            return LocalData(p, n, n, "II")
        if not _vp_ge(b8, p, 3):
            return LocalData(p, n - 1, n, "III")
        if not _vp_ge(b6, p, 3):
            return LocalData(p, n - 2, n, "IV")

        # arrange p | a1, a2;  p^2 | a3, a4;  p^3 | a6
        if p == 2:
            s = a2 % 2
            t = 2 * ((a6 // 4) % 2)
        elif p == 3:
            s = a1 % 3
            t = (-5 * a3) % 9  # -a3/2 mod 9
        else:
            s = -a1 * halfp % p
            t = -a3 * pow(2, -1, p * p) % (p * p)
        a = _translate(a, 0, s, t)
        a1, a2, a3, a4, a6 = a
        assert a1 % p == 0 and a2 % p == 0
        assert a3 % p**2 == 0 and a4 % p**2 == 0 and a6 % p**3 == 0

        # cubic T^3 + bb T^2 + cc T + dd over F_p
        bb = (a2 // p) % p
        cc = (a4 // p**2) % p
        dd = (a6 // p**3) % p
        # discriminant-type quantities deciding the root multiplicities
        w = (27 * dd * dd - bb * bb * cc * cc + 4 * bb**3 * dd
             - 18 * bb * cc * dd + 4 * cc**3) % p
        x = (3 * cc - bb * bb) % p

        if w != 0:
            return LocalData(p, n - 4, n, "I0*")

        if x != 0:
            # double root: shift it to the origin, then walk the I_m* chain
            if p == 2:
                alpha = cc % 2
            elif p == 3:
                alpha = (bb * cc) % 3
            else:
                alpha = (9 * dd - bb * cc) * pow(2 * (bb * bb - 3 * cc), -1, p) % p
            a = _translate(a, p * alpha, 0, 0)
            a1, a2, a3, a4, a6 = a
            assert a2 % p == 0 and (a2 // p) % p != 0
            assert a3 % p**2 == 0 and a4 % p**3 == 0 and a6 % p**4 == 0
            mstar = 1
            mx = my = p * p
            while True:
                # quadratic Y^2 + (a3/my) Y - a6/(mx my)
                g3 = a3 // my
                g6 = a6 // (mx * my)
                if (g3 * g3 + 4 * g6) % p != 0:
                    return LocalData(p, n - 4 - mstar, n, f"I{mstar}*")
                root = g6 % 2 if p == 2 else (-g3 * halfp) % p
                a = _translate(a, 0, 0, my * root)
                a1, a2, a3, a4, a6 = a
                mstar += 1
                my *= p
                assert a3 % my == 0 and a6 % (mx * my) == 0
                # quadratic (a2/p) X^2 + (a4/(p mx)) X + a6/(mx my)
                h2 = a2 // p
                h4 = a4 // (p * mx)
                h6 = a6 // (mx * my)
                if (h4 * h4 - 4 * h2 * h6) % p != 0:
                    return LocalData(p, n - 4 - mstar, n, f"I{mstar}*")
                root = h6 % 2 if p == 2 else (-h4 * pow(2 * h2, -1, p)) % p
                a = _translate(a, mx * root, 0, 0)
                a1, a2, a3, a4, a6 = a
                mstar += 1
                mx *= p
                assert a4 % (p * mx) == 0 and a6 % (mx * my) == 0
                assert mstar <= n  # the chain length is bounded by v_p(disc)
        # triple root: shift it to the origin
        if p == 2:
            alpha = dd % 2
        elif p == 3:
            alpha = (-dd) % 3
        else:
            alpha = -bb * pow(3, -1, p) % p
        a = _translate(a, p * alpha, 0, 0)
        a1, a2, a3, a4, a6 = a
        assert a2 % p**2 == 0 and a4 % p**3 == 0 and a6 % p**4 == 0

        # quadratic Y^2 + (a3/p^2) Y - a6/p^4
        g3 = a3 // p**2
        g6 = a6 // p**4
        if (g3 * g3 + 4 * g6) % p != 0:
            return LocalData(p, n - 6, n, "IV*")
        root = g6 % 2 if p == 2 else (-g3 * halfp) % p
        a = _translate(a, 0, 0, p * p * root)
        a1, a2, a3, a4, a6 = a
        assert a3 % p**3 == 0 and a6 % p**5 == 0

        if not _vp_ge(a4, p, 4):
            return LocalData(p, n - 7, n, "III*")
        if not _vp_ge(a6, p, 6):
            return LocalData(p, n - 8, n, "II*")

        # non-minimal at p: rescale by u = p and run again
        a = (a1 // p, a2 // p**2, a3 // p**3, a4 // p**4, a6 // p**6)


def conductor_exponent_closed_form(c: Curve, p: int) -> tuple[int, int]:
    """(f_p, v_p(disc_min)) for p >= 5 on a model minimal at p:
    f_p = 0 unless p | Disc; then 1 if p does not divide A, else 2."""
    if p < 5 or not is_prime(p):
        raise ValueError("closed form only applies at primes p >= 5")
    d = discriminant(c)
    v = valuation(d, p)
    v_A = 10**9 if c.A == 0 else valuation(c.A, p)
    if v >= 12 and v_A >= 4:
        raise ValueError("model not minimal at p")
    if v == 0:
        return 0, 0
    return (1 if c.A % p != 0 else 2), v


# -- global invariants -------------------------------------------------------


@dataclass(frozen=True)
class GlobalInvariants:
    """Exact global data: height, discriminants, conductor, Szpiro ratio."""

    H: int
    disc: FactoredInteger
    disc_min: FactoredInteger
    conductor: int
    sigma: float
    sigma_digits: int
    local: tuple[LocalData, ...]

    def __post_init__(self):
        dm = abs(self.disc_min.value)
        if dm % self.conductor != 0 or self.conductor % self.disc_min.radical != 0:
            raise ValueError("conductor must sit between rad(disc_min) and disc_min")
        if self.sigma < 1:
            raise ValueError("sigma must be >= 1")


def sigma_ratio(disc_min_abs: int, conductor: int, digits: int = 12) -> float:
    """log |disc_min| / log N, certified to the requested significant digits
    by recomputing at increasing precision until two rounds agree."""
    if conductor <= 1:
        raise ValueError("conductor must exceed 1")
    if disc_min_abs == conductor:
        return 1.0
    prev = None
    for dps in (30, 60, 120):
        with mpmath.workdps(dps):
            val = mpmath.log(disc_min_abs) / mpmath.log(conductor)
        if prev is not None and abs(val - prev) <= abs(val) * mpmath.mpf(10) ** (
            -digits - 1
        ):
            return float(val)
        prev = val
    raise ArithmeticError("sigma did not stabilize")  # pragma: no cover


def global_invariants(c: Curve, disc_hint: FactoredInteger | None = None) -> GlobalInvariants:
    """Minimal discriminant, conductor and Szpiro ratio of a reduced curve.

    disc_hint, when supplied, must be the factorization of the discriminant
    of (A, B) and is used instead of factoring from scratch.
    """
    d = discriminant(c)
    if disc_hint is not None:
        if disc_hint.value != d:
            raise ValueError("disc_hint does not match the curve discriminant")
        dfac = disc_hint
    else:
        dfac = factor(d)
    local = []
    v_total = {}
    n_total = {}
    for p, _ in dfac.factors:
        ld = tate_local(c, p)
        local.append(ld)
        if ld.v_p_disc_min:
            v_total[p] = ld.v_p_disc_min
        if ld.f_p:
            n_total[p] = ld.f_p
    disc_min = FactoredInteger(dfac.sign, tuple(sorted(v_total.items())))
    conductor = 1
    for p, e in sorted(n_total.items()):
        conductor *= p**e
    return GlobalInvariants(
        H=naive_height(c),
        disc=dfac,
        disc_min=disc_min,
        conductor=conductor,
        sigma=sigma_ratio(abs(disc_min.value), conductor),
        sigma_digits=12,
        local=tuple(local),
    )


# -- torsion sanity check ----------------------------------------------------


def count_points(c: Curve, p: int) -> int:
    """#E(F_p) for a prime p >= 5 of good reduction, by direct enumeration."""
    if p > 10_000:
        raise ValueError("point counting capped at p <= 10^4")
    squares = [0] * p
    for y in range(p):
        squares[y * y % p] += 1
    total = 1  # point at infinity
    A, B = c.A % p, c.B % p
    for x in range(p):
        total += squares[(x * x * x + A * x + B) % p]
    return total


def torsion_multiple_check(c: Curve, G: str, primes) -> bool:
    """Necessary condition for torsion subgroup G: |G| divides #E(F_p) for
    every supplied good prime p >= 5.  Raises on bad-reduction primes."""
    order = group_order(normalize_group(G))
    d = discriminant(c)
    for p in primes:
        if p < 5 or not is_prime(p):
            raise ValueError(f"{p} is not a prime >= 5")
        if d % p == 0:
            raise ValueError(f"{p} is a prime of bad reduction")
        if count_points(c, p) % order != 0:
            return False
    return True


def good_primes(c: Curve, count: int = 3, start: int = 5) -> list[int]:
    """The first `count` primes >= start of good reduction for c."""
    d = discriminant(c)
    out = []
    for p in SMALL_PRIMES:
        if p >= start and d % p != 0:
            out.append(p)
            if len(out) == count:
                return out
    raise ValueError("ran out of tabulated primes")  # pragma: no cover
