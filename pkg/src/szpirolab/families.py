"""Torsion-family registry, curve construction, and factored discriminants.

Each family is a one-parameter curve family y^2 = x^3 + f(t) x + g(t)
specialized at t = a/b^m and rescaled to an integral model by u = q c b^n,
where q is a small rational clearing the coefficient denominators (q = 1 or
3 for every built-in family), c is a twist parameter (only meaningful for
nu = 2 families, which are closed under quadratic twists), and the sign of
q distinguishes the two quadratic twists by -1 when nu = 2.

The registry cross-checks all stored data on first use: the factored
discriminant identity, the degree signature, and the equality of the
computed exponents lambda = kappa with the reference expected ratio.

The factored-discriminant path is the reason sampling scales: the
discriminant of the unreduced model is a product of the unit, the scaling
u^(12/nu), and small evaluated factor values, so it is assembled from
factorizations of small integers instead of factoring one huge one.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .arith import FactoredInteger, factor, merge_factored
from .elliptic import Curve, minimal_short
from .familydata import FAMILY_ROWS
from .polys import (
    FormFactorization,
    RationalPoly,
    discriminant_poly,
    form_factorization,
)
from .profiles import (
    FamilySignature,
    beta_expected,
    derive_signature,
    lambda_kappa,
    normalize_group,
    profile,
)


@dataclass(frozen=True)
class TorsionFamily:
    """One torsion family: coefficient polynomials plus derived exact data."""

    G: str
    f: RationalPoly
    g: RationalPoly
    nu: int
    signature: FamilySignature
    d_factored: FormFactorization
    beta: Fraction
    scaling_set: tuple[Fraction, ...]
    exceptional_branch: str | None = None

    @property
    def n(self) -> int:
        return self.signature.n

    @property
    def m(self) -> int:
        return self.signature.m

    @property
    def form_degree(self) -> int:
        """Degree of the homogenized discriminant form: 12n/(nu*m)."""
        return 12 * self.n // (self.nu * self.m)

    @property
    def count_exponent(self) -> Fraction:
        """Expected growth exponent of distinct curves by height."""
        return Fraction(self.nu * (self.m + 1), 12 * self.n)


def _expand(scale: Fraction, parts) -> RationalPoly:
    out = RationalPoly.constant(scale)
    for coeffs in parts:
        out = out * RationalPoly(coeffs)
    return out


def _build_family(name: str) -> TorsionFamily:
    row = FAMILY_ROWS[name]
    f = _expand(row.f_scale, row.f_parts)
    g = _expand(row.g_scale, row.g_parts)
    sig = derive_signature(f, g, row.nu)
    if (sig.n, sig.m) != (row.n, row.m):
        raise AssertionError(f"{name}: stored signature disagrees with degrees")
    d = discriminant_poly(f, g)
    # rebuild the literal factored product exactly as tabulated
    literal = RationalPoly.constant(Fraction(row.d_unit))
    for coeffs, mult in row.d_parts:
        literal = literal * RationalPoly(coeffs) ** mult
    if literal != d:
        raise AssertionError(f"{name}: stored discriminant factorization is wrong")
    target = 12 * row.n // (row.nu * row.m)
    fac = form_factorization(d, target)
    lam, kap = lambda_kappa(profile(fac, row.m))
    beta = beta_expected(name)
    if not (lam == kap == beta):
        raise AssertionError(f"{name}: computed exponents {lam}, {kap} != {beta}")
    return TorsionFamily(
        G=name,
        f=f,
        g=g,
        nu=row.nu,
        signature=sig,
        d_factored=fac,
        beta=beta,
        scaling_set=tuple(Fraction(q) for q in row.qset),
        exceptional_branch=(
            "y^2 = x^3 + b^2 (order-3 point (0, b))" if name == "C3" else None
        ),
    )


_REGISTRY: dict[str, TorsionFamily] = {}


def registry(G: str) -> TorsionFamily:
    """The verified family record for a torsion group (C1 has none)."""
    name = normalize_group(G)
    if name == "C1":
        raise ValueError("C1 has no parameterization; sample curves directly")
    if name not in _REGISTRY:
        _REGISTRY[name] = _build_family(name)
    return _REGISTRY[name]


def parameterized_groups() -> tuple[str, ...]:
    return tuple(FAMILY_ROWS)


# -- parameters and scaling --------------------------------------------------


def check_parameter(fam: TorsionFamily, a: int, b: int, c: int = 1) -> None:
    """Validate (a, b, c) against the family's parameter invariants."""
    if b < 1:
        raise ValueError("b must be a positive integer")
    if c < 1:
        raise ValueError("c must be a positive integer")
    if c > 1:
        if fam.nu != 2:
            raise ValueError("twist parameter c requires a nu=2 family")
        if any(e > 1 for _, e in factor(c).factors):
            raise ValueError("c must be squarefree")
    # gcd(a, b^m) must not be divisible by any m-th power
    if a == 0:
        if b != 1:
            raise ValueError("a = 0 requires b = 1")
        return
    g = gcd(abs(a), b)
    if g > 1:
        for p, _ in factor(g).factors:
            e = 0
            aa = abs(a)
            while aa % p == 0:
                aa //= p
                e += 1
            if e >= fam.m:
                raise ValueError(
                    f"gcd(a, b^{fam.m}) is divisible by {p}^{fam.m}"
                )


def scaling_for(fam: TorsionFamily, a: int, b: int) -> Fraction:
    """Smallest positive q in the family's scaling set making the model
    integral at t = a/b^m (exists for every valid parameter)."""
    t = Fraction(a, b**fam.m)
    A0, B0 = fam.f(t), fam.g(t)
    e4, e6 = 4 // fam.nu, 6 // fam.nu
    for q in sorted(fam.scaling_set):
        u = q * b**fam.n
        A = u**e4 * A0
        B = u**e6 * B0
        if A.denominator == 1 and B.denominator == 1:
            return q
    raise AssertionError(f"{fam.G}: no scaling in {fam.scaling_set} works")


def raw_pair(
    fam: TorsionFamily, a: int, b: int, c: int = 1, q_sign: int = 1
) -> tuple[int, int, Fraction]:
    """Integral unreduced model (A, B) at t = a/b^m with u = q_sign*q*c*b^n.

    Returns (A, B, q).  q_sign = -1 selects the quadratic twist by -1 and
    is only meaningful for nu = 2 families (for nu = 1 the sign cancels).
    """
    if q_sign not in (1, -1):
        raise ValueError("q_sign must be +-1")
    check_parameter(fam, a, b, c)
    q = scaling_for(fam, a, b)
    t = Fraction(a, b**fam.m)
    e4, e6 = 4 // fam.nu, 6 // fam.nu
    u = q_sign * q * c * b**fam.n
    A = u**e4 * fam.f(t)
    B = u**e6 * fam.g(t)
    assert A.denominator == 1 and B.denominator == 1
    return int(A), int(B), q


def curve_from_parameter(
    G: str, a: int, b: int, c: int = 1, q_sign: int = 1
) -> Curve:
    """Minimal model of the family curve at t = a/b^m, twisted by c.

    Raises ValueError for parameters violating the gcd/power-free condition
    and for the finitely many singular specializations.
    """
    fam = registry(G)
    A, B, _q = raw_pair(fam, a, b, c, q_sign)
    if 4 * A**3 + 27 * B**2 == 0:
        raise ValueError(f"parameter t = {a}/{b}^{fam.m} is a singular point")
    curve, _u = minimal_short(A, B)
    return curve


def discriminant_factored(
    G: str, a: int, b: int, c: int = 1, q_sign: int = 1
) -> FactoredInteger:
    """Exact factorization of the discriminant of the unreduced model.

    Assembled from small pieces: -16, the scaling (q c b^n)^(12/nu), the
    discriminant unit, and each irreducible factor evaluated at (a, b^m),
    factored independently.  Never factors the full discriminant directly.
    """
    fam = registry(G)
    check_parameter(fam, a, b, c)
    if q_sign not in (1, -1):
        raise ValueError("q_sign must be +-1")
    q = scaling_for(fam, a, b)
    e12 = 12 // fam.nu
    fac = fam.d_factored
    head = Fraction(-16) * q**e12 * fac.unit  # integer for every family
    assert head.denominator == 1
    out = factor(int(head))
    if c > 1:
        out = merge_factored(out, factor(c) ** e12)
    b_exp = fam.m * fac.y_exponent + 0  # y-part of the form at y = b^m
    if b > 1:
        # u contributes b^(12n/nu); the factor values below absorb all of it
        # except the padding exponent m*e0
        if b_exp:
            out = merge_factored(out, factor(b) ** b_exp)
    bm = b**fam.m
    for poly, mult in fac.factors:
        # homogenized factor value: (b^m)^deg * poly(a / b^m), an integer
        val = sum(
            int(coef) * a**k * bm ** (poly.degree - k)
            for k, coef in enumerate(poly.coeffs)
        )
        if val == 0:
            raise ValueError(f"parameter t = {a}/{b}^{fam.m} is a singular point")
        out = merge_factored(out, factor(val) ** mult)
    return out
