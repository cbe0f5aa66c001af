"""Sampling and statistical experiments over the torsion families.

Two populations are studied:

* family samples: parameters (a, b, c) drawn from boxes shaped like the
  height scaling (|a| ~ H^(nu m/12n), b ~ H^(nu/12n), c^6 <= H), mapped to
  minimal curves, deduplicated on the minimal pair (A, B);
* the trivial-torsion baseline: minimal pairs (A, B) drawn uniformly from
  the height box.

Histograms use a fixed 0.05 bin width in sigma.  Every experiment is
deterministic given its seed, and the parallel map over parameter chunks
merges associatively, so results do not depend on the worker count.
"""

from __future__ import annotations

import bisect
import math
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import gcd
from statistics import median

from .arith import factor, squarefree_up_to
from .elliptic import (
    global_invariants,
    good_primes,
    minimal_short,
    naive_height,
    torsion_multiple_check,
)
from .families import TorsionFamily, discriminant_factored, raw_pair, registry
from .profiles import beta_expected, normalize_group

HIST_BIN = 0.05

#: box inflation over the raw height scaling, so that the enumeration
#: covers every curve of height <= H (checked against direct censuses)
BOX_SLACK = 2.0


@dataclass(frozen=True)
class SampleRecord:
    """One sampled curve: parameters, minimal model, exact invariants."""

    G: str
    a: int
    b: int
    c: int
    A: int
    B: int
    H: int
    disc_min: int
    conductor: int
    sigma: float
    torsion_ok: bool
    factored: bool
    branch: str = "parameterized"

    @property
    def flags(self) -> str:
        toks = []
        toks.append("torsion_ok" if self.torsion_ok else "TORSION_FAIL")
        toks.append("factored" if self.factored else "INCOMPLETE")
        if self.branch != "parameterized":
            toks.append(self.branch)
        return ";".join(toks)


CSV_HEADER = ["G", "a", "b", "c", "A", "B", "H", "disc_min", "conductor", "sigma", "flags"]


def record_to_row(r: SampleRecord) -> list[str]:
    return [
        r.G,
        str(r.a),
        str(r.b),
        str(r.c),
        str(r.A),
        str(r.B),
        str(r.H),
        str(r.disc_min),
        str(r.conductor),
        repr(r.sigma),
        r.flags,
    ]


# -- parameter boxes ---------------------------------------------------------


def _unreduced_height(fam: TorsionFamily, a: int, b: int, c: int):
    try:
        A, B, _q = raw_pair(fam, a, b, c)
    except ValueError:
        return None
    return max(4 * abs(A) ** 3, 27 * B * B)


def _scan_max(fits, linear_to: int = 512) -> int:
    """Largest x >= 1 with fits(x), for predicates that may oscillate on
    [1, linear_to] but are monotone (true, then false) beyond it."""
    best = 0
    for x in range(1, linear_to + 1):
        if fits(x):
            best = x
    if best < linear_to:
        return best  # boundary inside the scanned range
    lo, hi = linear_to, 2 * linear_to
    while fits(hi):
        lo, hi = hi, 2 * hi
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if fits(mid):
            lo = mid
        else:
            hi = mid
    return lo


_BOX_CACHE: dict = {}


def parameter_box(fam: TorsionFamily, H, c: int = 1, slack: float = BOX_SLACK) -> tuple[int, int]:
    """(a_max, b_max) covering every curve of height <= H at twist c.

    Calibrated by scanning the actual unreduced heights along the axes
    (linear scan through the root region of the coefficient polynomials,
    bisection on the monotone tail), then inflated by `slack` to absorb
    off-axis effects and the bounded model reduction."""
    H = int(H)
    key = (fam.G, H, c, slack)
    if key in _BOX_CACHE:
        return _BOX_CACHE[key]

    def fit_a(x):
        hs = [_unreduced_height(fam, s * x, 1, c) for s in (1, -1)]
        return any(h is not None and h <= H for h in hs)

    def fit_b(x):
        hs = [_unreduced_height(fam, s, x, c) for s in (1, -1)]
        return any(h is not None and h <= H for h in hs)

    sa, sb = _scan_max(fit_a), _scan_max(fit_b)
    if sa == 0 and sb == 0 and not fit_a(1) and not fit_b(1):
        box = (0, 0)  # no curve of height <= H at this twist
    else:
        box = (max(int(slack * sa) + 1, 2), max(int(slack * sb) + 1, 1))
    _BOX_CACHE[key] = box
    return box


def twist_range(fam: TorsionFamily, H, c_max: int | None = None) -> list[int]:
    """Squarefree twist values c with c^6 <= H (nu = 2 families only)."""
    if fam.nu != 2:
        return [1]
    cap = int(float(H) ** (1 / 6)) + 1
    while cap**6 > H:
        cap -= 1
    if c_max is not None:
        cap = min(cap, c_max)
    return squarefree_up_to(max(cap, 1))


def twist_boxes(fam: TorsionFamily, H, c_max: int | None = None) -> list[tuple[int, int, int]]:
    """(c, a_max, b_max) per twist, dropping empty boxes; stops after a run
    of empty twists since all larger ones are empty as well."""
    out = []
    empty_run = 0
    for c in twist_range(fam, H, c_max):
        a_max, b_max = parameter_box(fam, H, c)
        if a_max == 0:
            empty_run += 1
            if empty_run >= 8:
                break
            continue
        empty_run = 0
        out.append((c, a_max, b_max))
    return out


def iter_parameters(fam: TorsionFamily, H, c_max: int | None = None):
    """All candidate (a, b, c, q_sign) in the covering boxes for height H."""
    for c, a_max, b_max in twist_boxes(fam, H, c_max):
        for b in range(1, b_max + 1):
            for a in range(-a_max, a_max + 1):
                if not _parameter_ok(fam, a, b):
                    continue
                yield (a, b, c, 1)
                if fam.nu == 2:
                    yield (a, b, c, -1)


def _parameter_ok(fam: TorsionFamily, a: int, b: int) -> bool:
    if a == 0:
        return b == 1
    if b == 1:
        return True
    g = gcd(abs(a), b)
    if g == 1:
        return True
    if fam.m == 1:
        return False
    for p, _ in factor(g).factors:
        e = 0
        aa = abs(a)
        while aa % p == 0:
            aa //= p
            e += 1
        if e >= fam.m:
            return False
    return True


# -- record construction -----------------------------------------------------


def build_record(G: str, a: int, b: int, c: int, q_sign: int) -> SampleRecord | None:
    """Minimal curve and exact invariants at one parameter, or None when the
    specialization is singular."""
    fam = registry(G)
    A, B, _q = raw_pair(fam, a, b, c, q_sign)
    if 4 * A**3 + 27 * B**2 == 0:
        return None
    pre = discriminant_factored(G, a, b, c, q_sign)
    curve, u = minimal_short(A, B, prime_hints=[p for p, _ in pre.factors])
    reduced = pre if u == 1 else pre.exact_div(factor(u) ** 12)
    gi = global_invariants(curve, disc_hint=reduced)
    ok = torsion_multiple_check(curve, G, good_primes(curve))
    return SampleRecord(
        G=G,
        a=a,
        b=b,
        c=c,
        A=curve.A,
        B=curve.B,
        H=gi.H,
        disc_min=gi.disc_min.value,
        conductor=gi.conductor,
        sigma=gi.sigma,
        torsion_ok=ok,
        factored=True,
        branch="parameterized",
    )


def exceptional_record(b: int) -> SampleRecord:
    """The order-3 special curve y^2 = x^3 + b^2 (outside the C3 chart)."""
    curve, u = minimal_short(0, b * b)
    gi = global_invariants(curve)
    ok = torsion_multiple_check(curve, "C3", good_primes(curve))
    return SampleRecord(
        G="C3",
        a=0,
        b=b,
        c=1,
        A=curve.A,
        B=curve.B,
        H=gi.H,
        disc_min=gi.disc_min.value,
        conductor=gi.conductor,
        sigma=gi.sigma,
        torsion_ok=ok,
        factored=True,
        branch="exceptional",
    )


def _records_for_chunk(args) -> list:
    G, chunk = args
    out = []
    for a, b, c, q_sign in chunk:
        rec = build_record(G, a, b, c, q_sign)
        if rec is not None:
            out.append(rec)
    return out


def _map_chunks(fn, jobs, workers: int):
    if workers <= 1:
        return [fn(j) for j in jobs]
    with ProcessPoolExecutor(max_workers=workers) as ex:
        return list(ex.map(fn, jobs))


# -- sampling ----------------------------------------------------------------


def sample_family(
    G: str,
    H_max,
    count: int,
    strategy: str = "random",
    seed: int = 0,
    workers: int = 1,
    c_max: int | None = None,
    include_exceptional: bool = True,
) -> list[SampleRecord]:
    """Deduplicated family samples with H(E) <= H_max.

    strategy 'grid' enumerates the whole parameter box (count caps the
    output); 'random' draws parameters uniformly from the box until `count`
    distinct curves are found or the draw budget runs out.  Deterministic
    for a fixed seed regardless of the worker count: the parameter list is
    fixed up front and only the per-record work is distributed.
    """
    G = normalize_group(G)
    if count < 1:
        raise ValueError("count must be >= 1")
    if strategy not in ("grid", "random"):
        raise ValueError(f"unknown strategy {strategy!r}")
    fam = registry(G)
    H_max = int(H_max)

    if strategy == "grid":
        params = list(iter_parameters(fam, H_max, c_max))
    else:
        rng = random.Random(f"sample:{G}:{seed}")
        boxes = twist_boxes(fam, H_max, c_max)
        # draw each twist in proportion to its parameter-box size, matching
        # the natural weight of the twist inside the height-limited family
        weights = [(2 * am + 1) * bm for _c, am, bm in boxes]
        params = []
        seen_p = set()
        budget = 60 * count
        for _ in range(budget):
            c, a_max, b_max = rng.choices(boxes, weights=weights)[0]
            a = rng.randint(-a_max, a_max)
            b = rng.randint(1, b_max)
            sgn = rng.choice((1, -1)) if fam.nu == 2 else 1
            key = (a, b, c, sgn)
            if key in seen_p or not _parameter_ok(fam, a, b):
                continue
            seen_p.add(key)
            params.append(key)

    chunks = [params[i : i + 200] for i in range(0, len(params), 200)]
    results = _map_chunks(_records_for_chunk, [(G, ch) for ch in chunks], workers)
    out: list[SampleRecord] = []
    seen: set[tuple[int, int]] = set()

    def push(rec):
        if rec.H > H_max:
            return False
        key = (rec.A, rec.B)
        if key in seen:
            return False
        seen.add(key)
        out.append(rec)
        return True

    for batch in results:
        for rec in batch:
            push(rec)
            if len(out) >= count:
                break
        if len(out) >= count:
            break

    if G == "C3" and include_exceptional and len(out) < count:
        b = 1
        while 27 * b**4 <= H_max and len(out) < count:
            push(exceptional_record(b))
            b += 1
    return out


def sample_trivial_torsion(H_max, count: int, seed: int = 0) -> list[SampleRecord]:
    """Uniform minimal pairs (A, B) with naive height <= H_max."""
    H_max = int(H_max)
    rng = random.Random(f"trivial:{seed}")
    a_cap = int((H_max / 4) ** (1 / 3))
    b_cap = int((H_max / 27) ** (1 / 2))
    out = []
    seen = set()
    while len(out) < count:
        A = rng.randint(-a_cap, a_cap)
        B = rng.randint(-b_cap, b_cap)
        if 4 * A**3 + 27 * B**2 == 0 or naive_height_pair(A, B) > H_max:
            continue
        curve, u = minimal_short(A, B)
        if u != 1 or (curve.A, curve.B) in seen:
            continue
        seen.add((curve.A, curve.B))
        gi = global_invariants(curve)
        out.append(
            SampleRecord(
                G="C1",
                a=A,
                b=abs(B),
                c=1,
                A=curve.A,
                B=curve.B,
                H=gi.H,
                disc_min=gi.disc_min.value,
                conductor=gi.conductor,
                sigma=gi.sigma,
                torsion_ok=True,
                factored=True,
            )
        )
    return out


def naive_height_pair(A: int, B: int) -> int:
    return max(4 * abs(A) ** 3, 27 * B * B)


# -- sigma concentration experiment ------------------------------------------


def histogram(sigmas) -> list[tuple[float, int]]:
    """Fixed-width histogram of sigma values: (bin center, count) pairs."""
    counts: dict[int, int] = {}
    for s in sigmas:
        k = int(s / HIST_BIN)
        counts[k] = counts.get(k, 0) + 1
    return [(round((k + 0.5) * HIST_BIN, 6), counts[k]) for k in sorted(counts)]


def szpiro_experiment(
    G: str,
    H_max,
    count: int,
    eps: float = 0.5,
    seed: int = 0,
    strategy: str = "random",
    workers: int = 1,
) -> dict:
    """Sample the family and summarize the sigma distribution.

    The summary reports the sample size, median sigma, the 0.05-bin
    histogram, and the fraction of samples outside (beta - eps, beta + eps).
    For C1 the samples are uniform minimal pairs of bounded height.
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    if eps <= 0:
        raise ValueError("eps must be positive")
    G = normalize_group(G)
    beta = float(beta_expected(G))
    if G == "C1":
        records = sample_trivial_torsion(H_max, count, seed)
    else:
        records = sample_family(G, H_max, count, strategy, seed, workers)
    sigmas = [r.sigma for r in records]
    if not sigmas:
        raise ValueError("no curves sampled; enlarge H_max")
    outside = sum(1 for s in sigmas if not beta - eps < s < beta + eps)
    summary = {
        "group": G,
        "beta": str(beta_expected(G)),
        "beta_float": beta,
        "H_max": str(int(H_max)),
        "count": len(sigmas),
        "requested": count,
        "eps": eps,
        "seed": seed,
        "strategy": strategy,
        "median_sigma": median(sigmas),
        "min_sigma": min(sigmas),
        "max_sigma": max(sigmas),
        "outside_fraction": outside / len(sigmas),
        "torsion_check_failures": sum(1 for r in records if not r.torsion_ok),
        "histogram_bin": HIST_BIN,
        "histogram": histogram(sigmas),
    }
    if G == "C3":
        exc = [r.sigma for r in records if r.branch == "exceptional"]
        summary["exceptional_count"] = len(exc)
        if exc:
            summary["exceptional_median_sigma"] = median(exc)
    return summary, records


# -- growth of distinct curves by height --------------------------------------


def _height_chunk(args) -> list:
    G, chunk = args
    fam = registry(G)
    out = []
    for a, b, c, q_sign in chunk:
        A, B, _q = raw_pair(fam, a, b, c, q_sign)
        if 4 * A**3 + 27 * B**2 == 0:
            continue
        curve, _u = minimal_short(A, B)
        out.append((curve.A, curve.B, naive_height(curve)))
    return out


def growth_experiment(
    G: str,
    H_top,
    decades: float = 3.0,
    points: int = 7,
    workers: int = 1,
) -> dict:
    """Distinct-curve counts at geometric height checkpoints, with the
    fitted log-log slope and the expected exponent nu(m+1)/(12n)."""
    G = normalize_group(G)
    fam = registry(G)
    H_top = int(H_top)
    params = list(iter_parameters(fam, H_top))
    chunks = [params[i : i + 500] for i in range(0, len(params), 500)]
    triples = _map_chunks(_height_chunk, [(G, ch) for ch in chunks], workers)
    best: dict[tuple[int, int], int] = {}
    for batch in triples:
        for A, B, H in batch:
            key = (A, B)
            if key not in best or H < best[key]:
                best[key] = H
    checkpoints = [
        int(10 ** (math.log10(H_top) - decades * (1 - i / (points - 1))))
        for i in range(points)
    ]
    heights = sorted(best.values())
    table = [(H, bisect.bisect_right(heights, H)) for H in checkpoints]
    xs = [math.log(H) for H, n in table if n > 0]
    ys = [math.log(n) for _H, n in table if n > 0]
    slope = _fit_slope(xs, ys)
    return {
        "group": G,
        "H_top": str(H_top),
        "decades": decades,
        "expected_exponent": str(fam.count_exponent),
        "expected_exponent_float": float(fam.count_exponent),
        "fitted_slope": slope,
        "table": [(str(H), n) for H, n in table],
        "distinct_curves": len(best),
    }


def _fit_slope(xs, ys) -> float:
    n = len(xs)
    if n < 2:
        raise ValueError("need at least two populated checkpoints")
    mx = sum(xs) / n
    my = sum(ys) / n
    den = sum((x - mx) ** 2 for x in xs)
    return sum((x - mx) * (y - my) for x, y in zip(xs, ys)) / den
