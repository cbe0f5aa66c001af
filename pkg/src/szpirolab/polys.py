"""Exact univariate rational polynomials and integer binary forms.

Everything here is exact: coefficients are fractions.Fraction or int, and
no operation ever rounds.  The factorization routine is classical
Zassenhaus: squarefree split (Yun), factorization modulo a certified prime,
quadratic Hensel lifting to a Mignotte-style bound, and exhaustive subset
recombination, so a factor is declared irreducible only after every proper
subset of its modular pieces has failed to divide.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt, lcm

from .arith import primes_up_to
from .errors import BudgetExceeded

DEGREE_CAP = 64

_FACTOR_PRIMES = primes_up_to(10_000)


class RationalPoly:
    """Dense univariate polynomial with Fraction coefficients, low degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls):
        return cls(())

    @classmethod
    def one(cls):
        return cls((1,))

    @classmethod
    def t(cls):
        return cls((0, 1))

    @classmethod
    def constant(cls, c):
        return cls((c,))

    # -- basic structure ---------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self) -> Fraction:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __eq__(self, other):
        return isinstance(other, RationalPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        if self.is_zero:
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self[k]
            if c == 0:
                continue
            mono = "1" if k == 0 else ("t" if k == 1 else f"t^{k}")
            if k > 0 and abs(c) == 1:
                body = mono
            elif k == 0:
                body = str(abs(c))
            else:
                body = f"{abs(c)}*{mono}"
            parts.append(("- " if c < 0 else "+ ") + body)
        s = " ".join(parts)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return RationalPoly(
            [self[k] + other[k] for k in range(n)]
        )

    def __sub__(self, other):
        other = _coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return RationalPoly([self[k] - other[k] for k in range(n)])

    def __neg__(self):
        return RationalPoly([-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return RationalPoly([c * other for c in self.coeffs])
        other = _coerce(other)
        if self.is_zero or other.is_zero:
            return RationalPoly.zero()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return RationalPoly(out)

    __rmul__ = __mul__
    __radd__ = __add__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative polynomial power")
        out = RationalPoly.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __divmod__(self, other):
        other = _coerce(other)
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return RationalPoly.zero(), self
        quo = [Fraction(0)] * (dq + 1)
        inv = 1 / other.lc
        for k in range(dq, -1, -1):
            c = rem[k + other.degree] * inv
            quo[k] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] -= c * b
        return RationalPoly(quo), RationalPoly(rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other) -> "RationalPoly":
        q, r = divmod(self, other)
        if not r.is_zero:
            raise ValueError("division is not exact")
        return q

    def derivative(self) -> "RationalPoly":
        return RationalPoly([k * c for k, c in enumerate(self.coeffs)][1:])

    def __call__(self, x):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def scale_arg(self, a) -> "RationalPoly":
        """p(a*t): coefficient k picks up a**k."""
        a = Fraction(a)
        return RationalPoly([c * a**k for k, c in enumerate(self.coeffs)])

    def monic(self) -> "RationalPoly":
        if self.is_zero:
            return self
        inv = 1 / self.lc
        return RationalPoly([c * inv for c in self.coeffs])

    def content_and_primitive(self):
        """Write p = content * pp with pp a primitive integer polynomial
        having positive leading coefficient; content is a Fraction."""
        if self.is_zero:
            raise ValueError("zero polynomial has no primitive part")
        den = lcm(*(c.denominator for c in self.coeffs))
        ints = [int(c * den) for c in self.coeffs]
        g = 0
        for c in ints:
            g = gcd(g, abs(c))
        if ints[-1] < 0:
            g = -g
        content = Fraction(g, den)
        return content, RationalPoly([c // g for c in ints])

    @property
    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def int_coeffs(self) -> list[int]:
        if not self.is_integral:
            raise ValueError("polynomial has non-integer coefficients")
        return [int(c) for c in self.coeffs]


def _coerce(x) -> RationalPoly:
    if isinstance(x, RationalPoly):
        return x
    return RationalPoly.constant(Fraction(x))


def poly_gcd(a: RationalPoly, b: RationalPoly) -> RationalPoly:
    """Monic gcd over Q (Euclid with monic normalization each step)."""
    a, b = _coerce(a), _coerce(b)
    while not b.is_zero:
        a, b = b, (a % b)
        if not b.is_zero:
            b = b.monic()
    return a.monic() if not a.is_zero else a


# -- JSON wire format ------------------------------------------------------


def poly_to_json(p: RationalPoly) -> list[str]:
    """Serialize as "numerator/denominator" strings, lowest degree first."""
    return [f"{c.numerator}/{c.denominator}" for c in p.coeffs]


def poly_from_json(items) -> RationalPoly:
    return RationalPoly([Fraction(str(s)) for s in items])


# -- squarefree decomposition ---------------------------------------------


def yun_squarefree(p: RationalPoly) -> list[tuple[RationalPoly, int]]:
    """Yun's algorithm: p = unit * prod q_i^{m_i} with the q_i squarefree,
    monic, pairwise coprime and the m_i distinct increasing multiplicities.
    Returns the (q_i, m_i) list, constants omitted."""
    p = _coerce(p)
    if p.is_zero:
        raise ValueError("zero polynomial has no squarefree decomposition")
    if p.degree < 1:
        return []
    p = p.monic()
    dp = p.derivative()
    a = poly_gcd(p, dp)
    b = p.exact_div(a)
    c = dp.exact_div(a)
    out = []
    i = 1
    while b.degree >= 1:
        d = c - b.derivative()
        ai = poly_gcd(b, d)
        if ai.degree >= 1:
            out.append((ai, i))
        b = b.exact_div(ai)
        c = d.exact_div(ai)
        i += 1
    return out


# -- arithmetic in F_p[x] (coefficient lists, low degree first) ------------


def _mp_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _mp_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _mp_trim(out)


def _mp_divmod(a, b, p):
    a = list(a)
    inv = pow(b[-1], -1, p)
    dq = len(a) - len(b)
    if dq < 0:
        return [], _mp_trim(a)
    quo = [0] * (dq + 1)
    for k in range(dq, -1, -1):
        c = a[k + len(b) - 1] * inv % p
        quo[k] = c
        if c:
            for j, bj in enumerate(b):
                a[k + j] = (a[k + j] - c * bj) % p
    return _mp_trim(quo), _mp_trim(a)


def _mp_gcd(a, b, p):
    a, b = _mp_trim(list(a)), _mp_trim(list(b))
    while b:
        a, b = b, _mp_divmod(a, b, p)[1]
    if a:
        inv = pow(a[-1], -1, p)
        a = [c * inv % p for c in a]
    return a


def _mp_monic(a, p):
    inv = pow(a[-1], -1, p)
    return [c * inv % p for c in a]


def _mp_powmod(base, e, f, p):
    r = [1]
    base = _mp_divmod(base, f, p)[1]
    while e:
        if e & 1:
            r = _mp_divmod(_mp_mul(r, base, p), f, p)[1]
        base = _mp_divmod(_mp_mul(base, base, p), f, p)[1]
        e >>= 1
    return r


def _mp_xgcd(a, b, p):
    """Extended gcd over F_p: returns (g, s, t) with s*a + t*b = g, g monic."""
    r0, r1 = _mp_trim(list(a)), _mp_trim(list(b))
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        q, r = _mp_divmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, _mp_trim([(x - y) % p for x, y in itertools.zip_longest(s0, _mp_mul(q, s1, p), fillvalue=0)])
        t0, t1 = t1, _mp_trim([(x - y) % p for x, y in itertools.zip_longest(t0, _mp_mul(q, t1, p), fillvalue=0)])
    inv = pow(r0[-1], -1, p)
    return (
        [c * inv % p for c in r0],
        [c * inv % p for c in s0],
        [c * inv % p for c in t0],
    )


def _mp_factor_squarefree(f, p, rng):
    """Distinct-degree then Cantor-Zassenhaus equal-degree splitting.
    f monic squarefree over F_p, p odd.  Returns monic irreducibles."""
    out = []
    h = [0, 1]  # x
    v = list(f)
    d = 0
    while len(v) - 1 >= 2 * (d + 1):
        d += 1
        h = _mp_powmod(h, p, v, p)
        g = _mp_gcd([(a - b) % p for a, b in itertools.zip_longest(h, [0, 1], fillvalue=0)], v, p)
        if len(g) > 1:
            out.extend(_mp_split_equal_degree(g, d, p, rng))
            v = _mp_divmod(v, g, p)[0]
            h = _mp_divmod(h, v, p)[1]
    if len(v) > 1:
        out.append(_mp_monic(v, p))
    return out


def _mp_split_equal_degree(f, d, p, rng):
    """Split f (product of distinct monic irreducibles, all of degree d)."""
    n = len(f) - 1
    if n == d:
        return [f]
    e = (p**d - 1) // 2
    while True:
        a = [rng.randrange(p) for _ in range(n)]
        a = _mp_trim(a)
        if len(a) - 1 < 1:
            continue
        b = _mp_powmod(a, e, f, p)
        b = list(b)
        if not b:
            b = [0]
        b[0] = (b[0] - 1) % p
        g = _mp_gcd(b, f, p)
        if 0 < len(g) - 1 < n:
            left = _mp_split_equal_degree(g, d, p, rng)
            right = _mp_split_equal_degree(_mp_divmod(f, g, p)[0], d, p, rng)
            return left + right


# -- Hensel lifting (monic case) -------------------------------------------


def _centered(c, m):
    c %= m
    return c - m if 2 * c > m else c


def _lift_pair(f, g, h, s, t, p, steps):
    """Quadratic Hensel: from f = g*h (mod p) with s*g + t*h = 1 (mod p),
    f, g, h monic, lift `steps` times to modulus p**(2**steps)."""
    m = p
    for _ in range(steps):
        m2 = m * m

        def red(a):
            return _mp_trim([c % m2 for c in a])

        def mul(a, b):
            if not a or not b:
                return []
            out = [0] * (len(a) + len(b) - 1)
            for i, ai in enumerate(a):
                if ai:
                    for j, bj in enumerate(b):
                        out[i + j] = (out[i + j] + ai * bj) % m2
            return _mp_trim(out)

        def addsub(a, b, sgn):
            return _mp_trim(
                [
                    (x + sgn * y) % m2
                    for x, y in itertools.zip_longest(a, b, fillvalue=0)
                ]
            )

        e = addsub(red(f), mul(g, h), -1)
        q, r = _mp_divmod(mul(s, e), red(h), m2)
        g_new = addsub(addsub(red(g), mul(t, e), 1), mul(q, g), 1)
        h_new = addsub(red(h), r, 1)
        b = addsub(addsub(mul(s, g_new), mul(t, h_new), 1), [1], -1)
        c, d = _mp_divmod(mul(s, b), h_new, m2)
        s_new = addsub(red(s), d, -1)
        t_new = addsub(addsub(red(t), mul(t, b), -1), mul(c, g_new), -1)
        g, h, s, t, m = g_new, h_new, s_new, t_new, m2
    return g, h, m


def _hensel_tree(f_ints, modfactors, p, steps):
    """Lift the monic mod-p factorization of monic f to mod p**(2**steps)."""
    if len(modfactors) == 1:
        m = p ** (2**steps)
        return [[c % m for c in f_ints]]
    half = len(modfactors) // 2
    g = [1]
    for q in modfactors[:half]:
        g = _mp_mul(g, q, p)
    h = [1]
    for q in modfactors[half:]:
        h = _mp_mul(h, q, p)
    one, s, t = _mp_xgcd(g, h, p)
    assert one == [1], "modular factors not coprime"
    g_l, h_l, _ = _lift_pair(f_ints, g, h, s, t, p, steps)
    return _hensel_tree(g_l, modfactors[:half], p, steps) + _hensel_tree(
        h_l, modfactors[half:], p, steps
    )


def _choose_factor_prime(f_ints):
    """Smallest odd prime not dividing lc for which f stays squarefree mod p."""
    lc = f_ints[-1]
    df = [k * c for k, c in enumerate(f_ints)][1:]
    for p in _FACTOR_PRIMES:
        if p == 2 or lc % p == 0:
            continue
        fp = _mp_trim([c % p for c in f_ints])
        dfp = _mp_trim([c % p for c in df])
        if not dfp:
            continue
        if _mp_gcd(fp, dfp, p) == [1]:
            return p
    raise BudgetExceeded("no usable modular prime below 10^4")


def _divides_int(f_ints, g_ints):
    """Does monic g divide f over Z?  (f, g integer coefficient lists.)"""
    rem = list(f_ints)
    dq = len(rem) - len(g_ints)
    if dq < 0:
        return None
    quo = [0] * (dq + 1)
    for k in range(dq, -1, -1):
        c = rem[k + len(g_ints) - 1]
        quo[k] = c
        if c:
            for j, bj in enumerate(g_ints):
                rem[k + j] -= c * bj
    if any(rem):
        return None
    return quo


def _factor_monic_squarefree(f_ints):
    """Irreducible monic integer factors of a monic squarefree integer poly."""
    n = len(f_ints) - 1
    if n <= 1:
        return [list(f_ints)]
    p = _choose_factor_prime(f_ints)
    rng = random.Random(f"zassenhaus:{p}:{n}")
    modfs = _mp_factor_squarefree(_mp_trim([c % p for c in f_ints]), p, rng)
    if len(modfs) == 1:
        return [list(f_ints)]  # irreducible modulo a certified prime
    modfs.sort()
    # Mignotte-style bound on coefficients of any monic factor of f
    bound = (isqrt(n + 1) + 1) * (1 << n) * max(abs(c) for c in f_ints)
    steps = 0
    while p ** (2**steps) < 2 * bound + 1:
        steps += 1
    m = p ** (2**steps)
    lifted = _hensel_tree(list(f_ints), modfs, p, steps)
    pool = [[c % m for c in q] for q in lifted]
    remaining = list(f_ints)
    out = []
    size = 1
    while 2 * size <= len(pool):
        hit = True
        while hit and 2 * size <= len(pool):
            hit = False
            for combo in itertools.combinations(range(len(pool)), size):
                prod = [1]
                for idx in combo:
                    prod = [c % m for c in _mp_mul(prod, pool[idx], m)]
                cand = [_centered(c, m) for c in prod]
                quo = _divides_int(remaining, cand)
                if quo is not None:
                    out.append(cand)
                    remaining = quo
                    pool = [q for i, q in enumerate(pool) if i not in combo]
                    hit = True
                    break
        size += 1
    if len(remaining) > 1:
        out.append(remaining)
    return out


def _factor_primitive_squarefree(prim: RationalPoly) -> list[RationalPoly]:
    """Irreducible factors (primitive, positive lc) of a primitive squarefree
    integer polynomial with positive leading coefficient."""
    ints = prim.int_coeffs()
    n = len(ints) - 1
    lc = ints[-1]
    if n == 1:
        return [prim]
    if lc == 1:
        parts = _factor_monic_squarefree(ints)
        return [RationalPoly(q) for q in parts]
    # monic transform: F(y) = lc^(n-1) * f(y/lc) is monic with integer coeffs
    monic = [c * lc ** (n - 1 - k) if k < n else 1 for k, c in enumerate(ints)]
    out = []
    for q in _factor_monic_squarefree(monic):
        # map back via y = lc*x and take the primitive part
        g = RationalPoly([c * lc**k for k, c in enumerate(q)])
        _, gp = g.content_and_primitive()
        out.append(gp)
    prod = RationalPoly.one()
    for g in out:
        prod = prod * g
    assert prod == prim, "monic-transform factor map lost content"
    return out


@dataclass(frozen=True)
class FormFactorization:
    """unit * y^y_exponent * prod(factors[i]^mult[i]) == the factored form.

    Factors are primitive irreducible integer polynomials in t with positive
    leading coefficient (t stands for x after homogenization; a bare factor
    of t means the form is divisible by x).  weights give the variable
    grading used when the factorization is read as a binary form.
    """

    unit: Fraction
    y_exponent: int
    factors: tuple[tuple[RationalPoly, int], ...]
    weights: tuple[int, int] = (1, 1)

    @property
    def degree(self) -> int:
        wx, wy = self.weights
        return wy * self.y_exponent + wx * sum(
            m * f.degree for f, m in self.factors
        )

    def expand_univariate(self) -> RationalPoly:
        """Multiply everything back out with y set to 1."""
        out = RationalPoly.constant(self.unit)
        for f, m in self.factors:
            out = out * f**m
        return out

    def __str__(self):
        body = " * ".join(
            f"({f})^{m}" if m > 1 else f"({f})" for f, m in self.factors
        )
        ypart = f" * y^{self.y_exponent}" if self.y_exponent else ""
        return f"{self.unit}{ypart} * {body}" if body else f"{self.unit}{ypart}"


_T = RationalPoly((0, 1))


def is_x_factor(f: RationalPoly) -> bool:
    """True for the irreducible factor t (x-divisible after homogenization)."""
    return f == _T


def factor_rational(p: RationalPoly, degree_cap: int = DEGREE_CAP) -> FormFactorization:
    """Complete irreducible factorization over Q.

    Squarefree split first (Yun), then Zassenhaus per squarefree part:
    factor modulo a certified prime, Hensel lift, subset recombination.
    The recombination is exhaustive, so every emitted factor is certified
    irreducible.  Refuses inputs of degree above degree_cap.
    """
    p = _coerce(p)
    if p.is_zero:
        raise ValueError("cannot factor the zero polynomial")
    if p.degree > degree_cap:
        raise BudgetExceeded(
            f"degree {p.degree} exceeds factorization cap {degree_cap}"
        )
    if p.degree == 0:
        return FormFactorization(p.coeffs[0], 0, ())
    unit = p.lc
    factors = []
    for q_monic, mult in yun_squarefree(p):
        qc, qprim = q_monic.content_and_primitive()
        unit *= qc**mult
        for irr in _factor_primitive_squarefree(qprim):
            factors.append((irr, mult))
    factors.sort(key=lambda fm: (fm[0].degree, fm[0].coeffs))
    fac = FormFactorization(unit, 0, tuple(factors))
    assert fac.expand_univariate() == p, "factorization failed to round-trip"
    return fac


# -- binary forms -----------------------------------------------------------


@dataclass(frozen=True)
class BinaryForm:
    """Integer binary form, optionally with weighted variables.

    monomials are (i, j, coeff) triples for coeff * x^i * y^j, sorted by i;
    every monomial satisfies w_x*i + w_y*j == degree.
    """

    monomials: tuple[tuple[int, int, int], ...]
    degree: int
    weights: tuple[int, int] = (1, 1)

    def __post_init__(self):
        wx, wy = self.weights
        if wx < 1 or wy < 1:
            raise ValueError("weights must be positive")
        seen = set()
        for i, j, c in self.monomials:
            if c == 0 or c != int(c):
                raise ValueError("monomial coefficients must be nonzero integers")
            if i < 0 or j < 0 or wx * i + wy * j != self.degree:
                raise ValueError(
                    f"monomial x^{i} y^{j} violates weighted degree {self.degree}"
                )
            if (i, j) in seen:
                raise ValueError("duplicate monomial")
            seen.add((i, j))

    @classmethod
    def from_dict(cls, d: dict, degree: int, weights=(1, 1)) -> "BinaryForm":
        monos = tuple(sorted((i, j, int(c)) for (i, j), c in d.items() if c))
        return cls(monos, degree, tuple(weights))

    def eval(self, x: int, y: int) -> int:
        return sum(c * x**i * y**j for i, j, c in self.monomials)

    @property
    def y_valuation(self) -> int:
        if not self.monomials:
            raise ValueError("zero form")
        return min(j for _, j, _ in self.monomials)

    def to_univariate(self) -> RationalPoly:
        """Dehomogenize by setting y = 1."""
        coeffs = {}
        for i, _, c in self.monomials:
            coeffs[i] = coeffs.get(i, 0) + c
        n = max(coeffs) if coeffs else 0
        return RationalPoly([coeffs.get(k, 0) for k in range(n + 1)])

    def __mul__(self, other: "BinaryForm") -> "BinaryForm":
        if self.weights != other.weights:
            raise ValueError("cannot multiply forms with different weights")
        acc = {}
        for i1, j1, c1 in self.monomials:
            for i2, j2, c2 in other.monomials:
                key = (i1 + i2, j1 + j2)
                acc[key] = acc.get(key, 0) + c1 * c2
        return BinaryForm.from_dict(
            acc, self.degree + other.degree, self.weights
        )

    def __pow__(self, k: int) -> "BinaryForm":
        if k < 0:
            raise ValueError("negative form power")
        out = BinaryForm(((0, 0, 1),), 0, self.weights)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def scaled(self, c: int) -> "BinaryForm":
        return BinaryForm(
            tuple((i, j, c * cc) for i, j, cc in self.monomials),
            self.degree,
            self.weights,
        )


def homogenize(
    d: RationalPoly, target_degree: int, weights=(1, 1)
) -> tuple[BinaryForm, Fraction]:
    """Homogenize d(t) to a binary form of the given (weighted) degree.

    Monomial t^k maps to x^k y^((target - w_x*k)/w_y); the returned unit is
    the rational content, so unit * form reproduces the homogenization of d
    exactly.  The padding exponent e0 = form.y_valuation.
    """
    d = _coerce(d)
    if d.is_zero:
        raise ValueError("cannot homogenize the zero polynomial")
    wx, wy = weights
    if wx * d.degree > target_degree:
        raise ValueError(
            f"target degree {target_degree} below weighted degree {wx * d.degree}"
        )
    content, prim = d.content_and_primitive()
    monos = []
    for k, c in enumerate(prim.coeffs):
        if c == 0:
            continue
        rem = target_degree - wx * k
        if rem % wy:
            raise ValueError("weights do not divide the degree gap")
        monos.append((k, rem // wy, int(c)))
    return BinaryForm(tuple(monos), target_degree, tuple(weights)), content


def form_factorization(
    d: RationalPoly,
    target_degree: int,
    weights=(1, 1),
    degree_cap: int = DEGREE_CAP,
) -> FormFactorization:
    """Factor d over Q and attach the homogenization padding exponent e0."""
    wx, wy = weights
    d = _coerce(d)
    fac = factor_rational(d, degree_cap)
    gap = target_degree - wx * d.degree
    if gap < 0 or gap % wy:
        raise ValueError("target degree incompatible with weights")
    return FormFactorization(fac.unit, gap // wy, fac.factors, tuple(weights))


def eval_form(F: BinaryForm, a: int, b: int, m: int = 1) -> int:
    """Exact value F(a, b^m)."""
    if m < 1:
        raise ValueError("m must be a positive integer")
    return F.eval(a, b**m)


def discriminant_poly(f: RationalPoly, g: RationalPoly) -> RationalPoly:
    """4 f^3 + 27 g^2 for coprime f, g (checked by polynomial gcd)."""
    f, g = _coerce(f), _coerce(g)
    h = poly_gcd(f, g)
    if h.degree > 0:
        raise ValueError(f"f and g share the factor {h}")
    return f**3 * 4 + g**2 * 27
