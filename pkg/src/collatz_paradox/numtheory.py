"""Diophantine side: convergents of log2/log3, near-1 power ratios, the
divergent-to-paradoxical construction, and effective gap bounds.

Comparisons of the form 3**p vs 2**q are done on materialized integers while
the exponents stay affordable; past that the same walks continue on certified
interval logarithms (still a proof, refined until decided).  Generated
convergents with small exponents are always re-verified against exact powers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .dynamics import BudgetExhausted, Trajectory, step, trajectory
from .bounds import ParadoxWitness, paradox_witness
from .precision import (
    Undecided,
    certified_sign,
    div_scaled,
    ln2_scaled,
    ln3_scaled,
    ln_scaled,
    mul_frac_scaled,
)

MAX_CONVERGENTS = 60
EXACT_EXPONENT_CAP = 200_000


def _as_fraction(x) -> Fraction:
    """Exact rational from int/Fraction/str/float (floats via their str form)."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, float):
        return Fraction(str(x))
    return Fraction(x)


def ratio_below_log2_log3(p: int, q: int) -> bool:
    """Whether p/q < log2/log3, i.e. 3**p < 2**q.

    Exact powers up to a size cap, certified intervals beyond (the interval
    route refines until the strict inequality is decided).
    """
    if q <= 0:
        raise ValueError("q must be positive")
    if p <= 0:
        return True
    if max(p, q) <= EXACT_EXPONENT_CAP:
        return pow(3, p).bit_length() <= q   # 3^p < 2^q, equality impossible
    return certified_sign(lambda prec: (
        q * ln2_scaled(prec)[0] - p * ln3_scaled(prec)[1],
        q * ln2_scaled(prec)[1] - p * ln3_scaled(prec)[0],
    )) > 0


@dataclass(frozen=True)
class Convergent:
    index: int
    p: int
    q: int

    @property
    def side(self) -> str:
        """Even-index convergents sit below log2/log3, odd ones above."""
        return "below" if self.index % 2 == 0 else "above"

    def as_fraction(self) -> Fraction:
        return Fraction(self.p, self.q)

    def verify_side(self) -> bool:
        below = ratio_below_log2_log3(self.p, self.q)
        return below if self.index % 2 == 0 else not below


def _cf_digits_and_convergents(count: int) -> tuple[list[int], list[Convergent]]:
    # continued-fraction digit extraction for x = log2/log3 via the comparator
    convs = [Convergent(0, 0, 1)]
    digits: list[int] = []
    pp, qq = 1, 0      # h_{-1}
    p, q = 0, 1        # h_0
    n = 1
    while len(convs) < count:
        # semiconvergents (t*p + pp)/(t*q + qq) sit on h_{n-2}'s side exactly
        # for t <= a_n; h_{n-2} has index n-2, which is below iff n is even
        prev_below = n % 2 == 0

        def on_prev_side(t: int) -> bool:
            num, den = t * p + pp, t * q + qq
            return ratio_below_log2_log3(num, den) == prev_below

        t = 1
        while on_prev_side(2 * t):
            t *= 2
        lo, hi = t, 2 * t   # on_prev_side holds at lo (a_n >= 1), fails at hi
        if t == 1 and not on_prev_side(1):
            raise AssertionError("continued-fraction step lost its invariant")
        while hi - lo > 1:
            mid = (lo + hi) // 2
            if on_prev_side(mid):
                lo = mid
            else:
                hi = mid
        a = lo
        digits.append(a)
        p, pp = a * p + pp, p
        q, qq = a * q + qq, q
        convs.append(Convergent(n, p, q))
        n += 1
    return digits, convs


def convergents(count: int) -> list[Convergent]:
    """First `count` continued-fraction convergents of log2/log3.

    The list starts 0/1, 1/1, 1/2, 2/3, 5/8, 12/19, 41/65, ...
    """
    if not 1 <= count <= MAX_CONVERGENTS:
        raise ValueError(f"count must be in 1..{MAX_CONVERGENTS}")
    return _cf_digits_and_convergents(count)[1][:count]


def partial_quotients(count: int) -> list[int]:
    """First `count` partial quotients of log2/log3 (starts 1, 1, 1, 2, ...)."""
    if not 1 <= count <= MAX_CONVERGENTS:
        raise ValueError(f"count must be in 1..{MAX_CONVERGENTS}")
    return _cf_digits_and_convergents(count + 1)[0][:count]


@dataclass(frozen=True)
class ApproxPair:
    """Exponents (a, b) with 3**a / 2**b in (1 - eps, 1) for the eps used."""

    a: int
    b: int

    def validate(self, epsilon) -> bool:
        eps = _as_fraction(epsilon)
        if not 0 < eps < 1:
            raise ValueError("epsilon must be in (0, 1)")
        s = 1 - eps
        lhs = s.numerator << self.b
        rhs = s.denominator * 3**self.a
        return lhs < rhs and 3**self.a < (1 << self.b)


def approx_pairs(epsilon, count: int) -> list[ApproxPair]:
    """Pairs (a, b) = even-index convergents with 1 - eps < 3**a/2**b < 1.

    Candidates are taken from the convergent list (index 2, 4, ...) and kept
    exactly when the two-sided membership holds; generation extends the list
    until `count` pairs qualify.
    """
    eps = _as_fraction(epsilon)
    if not 0 < eps < 1:
        raise ValueError("epsilon must be in (0, 1)")
    if count < 1:
        raise ValueError("count must be >= 1")
    out: list[ApproxPair] = []
    depth = 8
    while True:
        convs = convergents(min(depth, MAX_CONVERGENTS))
        for c in convs[2:]:
            if c.index % 2 != 0:
                continue
            pair = ApproxPair(c.p, c.q)
            if pair.validate(eps) and pair not in out:
                if pair.b < pair.a + 1:
                    raise AssertionError("approximation pair must have b >= a + 1")
                out.append(pair)
                if len(out) == count:
                    return out
        if depth >= MAX_CONVERGENTS:
            raise ValueError(
                f"could not find {count} pairs within {MAX_CONVERGENTS} convergents")
        depth += 8


@dataclass(frozen=True)
class DivergenceWitness:
    """Outcome of one step of the divergent-to-paradoxical construction."""

    n: int
    pair: ApproxPair
    in_s: bool                 # 1 - 1/(4n) < 3^a/2^b < 1
    j_reached: int             # least j with q_j(n) = a
    start: int                 # first term of the built trajectory
    length: int                # its step count
    lifted: bool               # True when start = 2**(b-j) * n
    witness: ParadoxWitness
    trajectory: Trajectory
    cst_counterexample: bool


def pair_in_s(n: int, pair: ApproxPair) -> bool:
    """Exact membership of (a, b) in the set S attached to n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    a, b = pair.a, pair.b
    return 3**a < (1 << b) and ((4 * n - 1) << b) < 4 * n * 3**a


def divergent_to_paradox(n: int, pair: ApproxPair, require_in_s: bool = True,
                         budget: int = 1_000_000) -> DivergenceWitness:
    """Build the paradox candidate the construction attaches to (n, pair).

    Walk from n until a odd steps have occurred, at the least such j.  If
    j >= b the candidate is the length-j trajectory from n itself (a CST
    counterexample when it verifies for n != 1 and the walk never dropped
    below n); otherwise lift to 2**(b-j) * n and use b steps.  The returned
    witness is always re-verified from a fresh trajectory.

    With require_in_s=False the construction runs mechanically for pairs
    outside S; the verification flag then reports whatever comes out.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    a, b = pair.a, pair.b
    if a < 1 or b < 1:
        raise ValueError("pair exponents must be positive")
    in_s = pair_in_s(n, pair)
    if require_in_s and not in_s:
        raise ValueError(f"pair {pair} is not in S for n = {n}")

    cur = n
    q = 0
    j = 0
    min_seen = n
    while q < a:
        if j >= budget:
            raise BudgetExhausted(n, budget, what="odd-step count never reached a")
        odd = cur & 1
        cur = step(cur)
        j += 1
        q += odd
        if cur < min_seen:
            min_seen = cur

    if j >= b:
        built = trajectory(n, j)
        w = paradox_witness(built)
        cst = w.paradoxical and n != 1 and min_seen >= n
        return DivergenceWitness(n, pair, in_s, j, n, j, False, w, built, cst)
    m = n << (b - j)
    built = trajectory(m, b)
    w = paradox_witness(built)
    return DivergenceWitness(n, pair, in_s, j, m, b, True, w, built, False)


# ---------------------------------------------------------------------------
# Effective gap bound and the heuristic length cap
# ---------------------------------------------------------------------------

RHIN_EXPONENT = Fraction(133, 10)


def rhin_gap_ok(j: int, q: int, prec_cap: int = 1 << 15) -> bool:
    """Certified check of |j ln2 - q ln3| >= max(j, q)**-13.3.

    Interval evaluation with widening precision; raises Undecided at the cap
    instead of guessing (the inequality is never decided by rounding).
    """
    h = max(abs(j), abs(q))
    if h < 2:
        raise ValueError("need max(|j|, |q|) >= 2")
    prec = 128
    while prec <= prec_cap:
        l2 = ln2_scaled(prec)
        l3 = ln3_scaled(prec)
        lam_lo = j * l2[0] - q * l3[1]
        lam_hi = j * l2[1] - q * l3[0]
        if lam_lo <= 0 <= lam_hi:
            prec *= 2
            continue
        if lam_hi < 0:
            lam_lo, lam_hi = -lam_hi, -lam_lo
        ln_lam = (ln_scaled(lam_lo, 1 << prec, prec)[0],
                  ln_scaled(lam_hi, 1 << prec, prec)[1])
        ln_h = mul_frac_scaled(ln_scaled(h, 1, prec), RHIN_EXPONENT)
        d_lo = ln_lam[0] + ln_h[0]
        d_hi = ln_lam[1] + ln_h[1]
        if d_lo >= 0:
            return True
        if d_hi < 0:
            return False
        prec *= 2
    raise Undecided("gap comparison not decided within the precision cap")


def _ln_of_bounds(bounds: tuple[int, int], prec: int) -> tuple[int, int]:
    lo, hi = bounds
    if lo <= 0:
        raise ValueError("ln of a non-positive interval")
    return ln_scaled(lo, 1 << prec, prec)[0], ln_scaled(hi, 1 << prec, prec)[1]


def _ln_heuristic_threshold(prec: int) -> tuple[int, int]:
    """ln(3 ln3 / ln2) = ln3 + ln(ln3) - ln(ln2)."""
    l3 = ln3_scaled(prec)
    l2 = ln2_scaled(prec)
    lnl3 = _ln_of_bounds(l3, prec)
    lnl2 = _ln_of_bounds(l2, prec)
    return l3[0] + lnl3[0] - lnl2[1], l3[1] + lnl3[1] - lnl2[0]


def heuristic_threshold_str(decimals: int = 3, prec: int = 128) -> str:
    """Decimal rendering of the constant 3 ln3/ln2 = 4.754... (display only)."""
    lo, hi = mul_frac_scaled(div_scaled(ln3_scaled(prec), ln2_scaled(prec), prec), Fraction(3))
    scale = 10**decimals
    v_lo = lo * scale >> prec
    v_hi = hi * scale >> prec
    if v_lo != v_hi:
        raise Undecided("increase prec for the requested decimals")
    whole, frac = divmod(v_lo, scale)
    return f"{whole}.{frac:0{decimals}d}"


def heuristic_j_cap(alpha, beta, prec_cap: int = 1 << 14) -> int:
    """Largest j compatible with j**14.3 * exp(-j/(alpha*beta)) > 3 ln3/ln2.

    alpha and beta are taken as exact rationals (decimal strings and floats
    are converted through their decimal form).  The left side has its maximum
    at j* = 14.3*alpha*beta and is strictly decreasing beyond, so the last
    admissible j is isolated by certified bracketing; returns 0 when no j >= 2
    qualifies.
    """
    ab = _as_fraction(alpha) * _as_fraction(beta)
    if ab <= 0:
        raise ValueError("alpha and beta must be positive")
    coeff = Fraction(143, 10)

    def margin(jv: int, prec: int) -> tuple[int, int]:
        lnj = mul_frac_scaled(ln_scaled(jv, 1, prec), coeff)
        lin = Fraction(jv) / ab
        lin_lo = (lin.numerator << prec) // lin.denominator
        lin_hi = lin_lo + 1
        thr = _ln_heuristic_threshold(prec)
        return lnj[0] - lin_hi - thr[1], lnj[1] - lin_lo - thr[0]

    def holds(jv: int) -> bool:
        return certified_sign(lambda prec: margin(jv, prec), prec_cap=prec_cap) > 0

    j_star = -((-143 * ab.numerator) // (10 * ab.denominator))  # ceil(14.3 ab)
    j_star = max(j_star, 2)
    if not holds(j_star):
        return 0
    hi = j_star
    while holds(hi):
        hi *= 2
    lo = max(j_star, hi // 2)
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if holds(mid):
            lo = mid
        else:
            hi = mid
    return lo
