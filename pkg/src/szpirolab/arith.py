"""Exact big-integer arithmetic: primality, factorization, radicals, valuations.

Every value is carried exactly; there is no floating point in this module.
The factoring strategy is trial division by primes below 10^4, then a
Miller-Rabin test that is deterministic for inputs below 3.3e24, then a
seeded Brent-cycle splitter with a bounded number of restarts.  Running out
of restarts raises FactorizationIncomplete rather than returning anything
wrong or silently stalling.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from math import gcd, isqrt

from .errors import FactorizationIncomplete

TRIAL_LIMIT = 10_000

# Deterministic Miller-Rabin witness set: correct for all n < 3.317e24
# (Sorenson-Webster), which covers every integer this toolkit factors in
# anger; beyond that the same bases act as a strong probable-prime test.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def primes_up_to(n: int) -> list[int]:
    """All primes <= n by a plain sieve of Eratosthenes."""
    if n < 2:
        return []
    bs = bytearray([1]) * (n + 1)
    bs[0] = bs[1] = 0
    for i in range(2, isqrt(n) + 1):
        if bs[i]:
            bs[i * i :: i] = bytearray(len(range(i * i, n + 1, i)))
    return [i for i in range(n + 1) if bs[i]]


SMALL_PRIMES = primes_up_to(TRIAL_LIMIT)
_SMALL_PRIME_SET = frozenset(SMALL_PRIMES)


def squarefree_up_to(n: int) -> list[int]:
    """Positive squarefree integers <= n, by sieving out square multiples."""
    bs = bytearray([1]) * (n + 1)
    for p in primes_up_to(isqrt(n)):
        bs[p * p :: p * p] = bytearray(len(range(p * p, n + 1, p * p)))
    return [i for i in range(1, n + 1) if bs[i]]


def is_prime(n: int) -> bool:
    """Miller-Rabin with a fixed witness set (deterministic below 3.3e24)."""
    if n < 2:
        return False
    if n < TRIAL_LIMIT:
        return n in _SMALL_PRIME_SET
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return False
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class FactoredInteger:
    """A nonzero integer carried with its full prime factorization.

    sign is +1 or -1; factors is a tuple of (prime, exponent) pairs with
    strictly increasing primes and exponents >= 1, so that
    sign * prod(p**e) reconstructs the integer exactly.
    """

    sign: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.sign not in (-1, 1):
            raise ValueError(f"sign must be +-1, got {self.sign}")
        last = 1
        for p, e in self.factors:
            if p <= last:
                raise ValueError("primes must be strictly increasing")
            if e < 1:
                raise ValueError(f"exponent of {p} must be >= 1")
            # membership test for sieved primes, Miller-Rabin above the sieve
            if p <= TRIAL_LIMIT:
                if p not in _SMALL_PRIME_SET:
                    raise ValueError(f"{p} is not prime")
            elif not is_prime(p):
                raise ValueError(f"{p} is not prime")
            last = p

    @property
    def value(self) -> int:
        n = self.sign
        for p, e in self.factors:
            n *= p**e
        return n

    @property
    def radical(self) -> int:
        r = 1
        for p, _ in self.factors:
            r *= p
        return r

    def valuation(self, p: int) -> int:
        for q, e in self.factors:
            if q == p:
                return e
        return 0

    def __mul__(self, other: "FactoredInteger") -> "FactoredInteger":
        return merge_factored(self, other)

    def __pow__(self, k: int) -> "FactoredInteger":
        if k < 0:
            raise ValueError("negative power of a FactoredInteger")
        if k == 0:
            return FactoredInteger(1, ())
        return FactoredInteger(
            self.sign if k % 2 else 1,
            tuple((p, e * k) for p, e in self.factors),
        )

    def exact_div(self, other: "FactoredInteger") -> "FactoredInteger":
        """Quotient self/other, which must be exact."""
        out = dict(self.factors)
        for p, e in other.factors:
            r = out.get(p, 0) - e
            if r < 0:
                raise ValueError(f"{other} does not divide {self}")
            if r:
                out[p] = r
            else:
                out.pop(p, None)
        return FactoredInteger(self.sign * other.sign, tuple(sorted(out.items())))

    def __str__(self):
        body = " * ".join(
            f"{p}^{e}" if e > 1 else str(p) for p, e in self.factors
        )
        return ("-" if self.sign < 0 else "") + (body or "1")


def merge_factored(a: FactoredInteger, b: FactoredInteger) -> FactoredInteger:
    """Factorization of the product a*b (merge sorted factor lists)."""
    out = []
    i = j = 0
    fa, fb = a.factors, b.factors
    while i < len(fa) and j < len(fb):
        pa, ea = fa[i]
        pb, eb = fb[j]
        if pa == pb:
            out.append((pa, ea + eb))
            i += 1
            j += 1
        elif pa < pb:
            out.append((pa, ea))
            i += 1
        else:
            out.append((pb, eb))
            j += 1
    out.extend(fa[i:])
    out.extend(fb[j:])
    return FactoredInteger(a.sign * b.sign, tuple(out))


def _brent_rho(n: int, rng: random.Random, max_iters: int) -> int | None:
    """One Brent-cycle attempt at a nontrivial factor of odd composite n."""
    y = rng.randrange(1, n)
    c = rng.randrange(1, n)
    m = 128
    g = r = q = 1
    iters = 0
    while g == 1:
        x = y
        for _ in range(r):
            y = (y * y + c) % n
        k = 0
        while k < r and g == 1:
            ys = y
            for _ in range(min(m, r - k)):
                y = (y * y + c) % n
                q = q * abs(x - y) % n
            g = gcd(q, n)
            k += m
        r *= 2
        iters += r
        if iters > max_iters:
            return None
    if g == n:
        # backtrack to find the first collision
        while True:
            ys = (ys * ys + c) % n
            g = gcd(abs(x - ys), n)
            if g > 1:
                break
    return g if g != n else None


def factor(
    n,
    hints=None,
    *,
    seed: int = 0,
    rho_iters: int = 1 << 20,
    rho_restarts: int = 24,
) -> FactoredInteger:
    """Full prime factorization of a nonzero integer.

    hints, if given, are known divisors of n; they are split off first so
    the remaining cofactors stay small.  The splitter is seeded, so results
    are reproducible, and a cofactor that survives rho_restarts restarts
    raises FactorizationIncomplete with the partial data.
    """
    if isinstance(n, FactoredInteger):
        return n
    if n == 0:
        raise ValueError("cannot factor 0")
    original = n
    sign = 1 if n > 0 else -1
    m = abs(n)
    found: dict[int, int] = {}

    def strip(p: int):
        nonlocal m
        e = 0
        while m % p == 0:
            m //= p
            e += 1
        if e:
            found[p] = found.get(p, 0) + e

    # peel off hinted divisors first so residual cofactors stay small
    if hints:
        for h in hints:
            h = abs(int(h))
            if h <= 1:
                continue
            if abs(original) % h != 0:
                raise ValueError(f"hint {h} does not divide {original}")
            for p, _ in factor(
                h, seed=seed, rho_iters=rho_iters, rho_restarts=rho_restarts
            ).factors:
                strip(p)

    for p in SMALL_PRIMES:
        if p * p > m:
            break
        strip(p)
    stack = [m] if m > 1 else []
    while stack:
        c = stack.pop()
        if c == 1:
            continue
        if c <= TRIAL_LIMIT * TRIAL_LIMIT or is_prime(c):
            # a survivor of trial division below the bound squared is prime
            found[c] = found.get(c, 0) + 1
            continue
        r = isqrt(c)
        if r * r == c:
            stack.extend((r, r))
            continue
        d = None
        for attempt in range(rho_restarts):
            rng = random.Random(f"{c}:{seed}:{attempt}")
            d = _brent_rho(c, rng, rho_iters)
            if d is not None:
                break
        if d is None:
            raise FactorizationIncomplete(original, sorted(found.items()), c)
        stack.extend((d, c // d))

    fi = FactoredInteger(sign, tuple(sorted(found.items())))
    assert fi.value == original
    return fi


def radical(n) -> int:
    """rad(n): the product of the distinct primes dividing n.

    Accepts an integer or a FactoredInteger.  For plain integers there is a
    fast certified path: after stripping primes below 10^4, a cofactor under
    10^12 has at most two prime factors, so its squarefree part is decided
    by a square test and a primality test alone.
    """
    if isinstance(n, FactoredInteger):
        return n.radical
    if n == 0:
        raise ValueError("rad(0) is undefined")
    n = abs(n)
    r = 1
    for p in SMALL_PRIMES:
        if p * p > n:
            break
        if n % p == 0:
            r *= p
            while n % p == 0:
                n //= p
    if n == 1:
        return r
    if n < TRIAL_LIMIT * TRIAL_LIMIT or is_prime(n):
        return r * n
    s = isqrt(n)
    if s * s == n:
        return r * s  # p^2 for a prime p above the trial bound
    if n < TRIAL_LIMIT**3:
        return r * n  # squarefree semiprime: no factor below 10^4, not p^2
    return r * factor(n).radical


def valuation(n, p: int) -> int:
    """v_p(n): the exponent of the prime p in n (n an int or FactoredInteger)."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if isinstance(n, FactoredInteger):
        return n.valuation(p)
    if n == 0:
        raise ValueError("v_p(0) is undefined")
    n = abs(n)
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e
