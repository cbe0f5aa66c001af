"""Exponent calculus for torsion families.

From a coprime pair (f, g) of coefficient polynomials this module derives
the degree signature (nu, n, m), turns the factored discriminant form into
a weighted-degree profile, and computes the two exponents

    lambda = md / (delta_0 + sum delta_i)
    kappa  = md / (delta_0 + sum delta_i / w_i)

whose common value, for every torsion family over Q, is the expected Szpiro
ratio of the family.  beta_expected holds those reference values as an
independent hardcoded table so the computed pipeline can be checked against
it rather than trusted.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .polys import FormFactorization, RationalPoly, is_x_factor, poly_gcd

#: torsion groups possible over Q: C1..C10, C12 and C2 x C2n for n <= 4
MAZUR_GROUPS = (
    "C1", "C2", "C3", "C4", "C5", "C6", "C7", "C8", "C9", "C10", "C12",
    "C2xC2", "C2xC4", "C2xC6", "C2xC8",
)

#: expected Szpiro ratio per torsion group (independent reference table)
BETA_EXPECTED = {
    "C1": Fraction(1),
    "C2": Fraction(3, 2),
    "C3": Fraction(2),
    "C2xC2": Fraction(2),
    "C4": Fraction(12, 5),
    "C5": Fraction(3),
    "C6": Fraction(3),
    "C2xC4": Fraction(3),
    "C7": Fraction(4),
    "C8": Fraction(4),
    "C2xC6": Fraction(4),
    "C9": Fraction(9, 2),
    "C10": Fraction(9, 2),
    "C12": Fraction(24, 5),
    "C2xC8": Fraction(24, 5),
}


def normalize_group(label: str) -> str:
    """Canonical ASCII form of a torsion group label, e.g. 'C2xC4'."""
    s = str(label).strip().replace("×", "x").replace("*", "x").replace(" ", "")
    s = s.upper().replace("X", "x")
    if s not in MAZUR_GROUPS:
        raise ValueError(f"unknown torsion group label {label!r}")
    return s


def group_order(label: str) -> int:
    s = normalize_group(label)
    if "x" in s:
        a, b = s.split("x")
        return int(a[1:]) * int(b[1:])
    return int(s[1:])


def beta_expected(label: str) -> Fraction:
    """Reference expected Szpiro ratio for the given torsion group."""
    return BETA_EXPECTED[normalize_group(label)]


@dataclass(frozen=True)
class FamilySignature:
    """Reduced degree datum nu * max(deg f / 4, deg g / 6) = n / m."""

    nu: int
    n: int
    m: int

    def __post_init__(self):
        if self.nu not in (1, 2):
            raise ValueError("nu must be 1 or 2")
        if self.n < 1 or self.m < 1:
            raise ValueError("n and m must be positive")
        if self.m != 1 and self.n != 1:
            raise ValueError("need m = 1 or n = 1")
        if self.nu == 2 and self.n != 1:
            raise ValueError("nu = 2 requires n = 1")


def derive_signature(f: RationalPoly, g: RationalPoly, nu: int) -> FamilySignature:
    """Signature of a coprime pair (f, g), rejecting pairs whose degree
    datum is neither a positive integer nor a unit fraction."""
    if nu not in (1, 2):
        raise ValueError("nu must be 1 or 2")
    if f.is_zero and g.is_zero:
        raise ValueError("f and g cannot both vanish")
    if poly_gcd(f, g).degree > 0:
        raise ValueError("f and g must be coprime")
    degf = f.degree if not f.is_zero else 0
    degg = g.degree if not g.is_zero else 0
    val = nu * max(Fraction(degf, 4), Fraction(degg, 6))
    if val <= 0:
        raise ValueError("degree datum must be positive")
    n, m = val.numerator, val.denominator
    if n != 1 and m != 1:
        raise ValueError(f"degree datum {val} is neither integral nor a unit fraction")
    if nu == 2 and n != 1:
        raise ValueError(f"degree datum {val} too large for a quadratic-twist family")
    return FamilySignature(nu, n, m)


@dataclass(frozen=True)
class FormProfile:
    """Weighted-degree data of a factored binary form.

    md is the total weighted degree (m times the form degree); delta0 is 1
    exactly when the form has a bare y factor; entries hold (delta_i, w_i)
    per distinct irreducible factor, where delta_i = m * deg F_i and
    w_i = max(1, delta_i - 2), except w_i = 1 for factors divisible by x.
    """

    md: int
    delta0: int
    entries: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.delta0 not in (0, 1):
            raise ValueError("delta0 must be 0 or 1")
        for d, w in self.entries:
            if d < 1 or w < 1:
                raise ValueError("profile entries must be positive")
        if self.delta0 + sum(d for d, _ in self.entries) > self.md:
            raise ValueError("profile degrees exceed the total weighted degree")


def profile(fac: FormFactorization, m: int) -> FormProfile:
    """Profile of a factored discriminant form for parameter denominator b^m."""
    if m < 1:
        raise ValueError("m must be a positive integer")
    wx, _ = fac.weights
    delta0 = 1 if fac.y_exponent >= 1 else 0
    entries = []
    for poly, _mult in fac.factors:
        delta = m * wx * poly.degree
        w = 1 if is_x_factor(poly) else max(1, delta - 2)
        entries.append((delta, w))
    return FormProfile(m * fac.degree, delta0, tuple(entries))


def lambda_kappa(p: FormProfile) -> tuple[Fraction, Fraction]:
    """The pair (lambda, kappa); lambda <= kappa since every w_i >= 1."""
    denom_l = p.delta0 + sum(d for d, _ in p.entries)
    if denom_l == 0:
        raise ValueError("empty profile")
    denom_k = p.delta0 + sum(Fraction(d, w) for d, w in p.entries)
    lam = Fraction(p.md, denom_l)
    kap = Fraction(p.md) / denom_k
    assert lam <= kap
    return lam, kap


def theorem_delta(d: int, r: int) -> Fraction:
    """Saving exponent delta_d(r) in the density bound for degree-d forms
    with r distinct irreducible factors:

        1                                          if d <= 2,
        (d-1)((d-r)/(d-1) - 1/tau)
        --------------------------                 if d >= 3,
        1 + (d-1)(1 - 1/tau)

    with tau the number of divisors of d-1.  At r = 1 this is at least
    1 - 2/(d+1), with equality exactly when d-1 is prime.
    """
    if d < 1 or r < 1 or r > d:
        raise ValueError("need 1 <= r <= d")
    if d <= 2:
        return Fraction(1)
    tau = sum(1 for k in range(1, d) if (d - 1) % k == 0)
    num = (d - 1) * (Fraction(d - r, d - 1) - Fraction(1, tau))
    den = 1 + (d - 1) * (1 - Fraction(1, tau))
    return num / den
