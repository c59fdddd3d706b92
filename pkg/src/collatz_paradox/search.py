"""Stopping times, delays, excursions and the paradox enumeration itself.

The enumeration walks every start once, maintaining only (iterate, odd-count,
halving-count); the coefficient test 3**q < 2**e reduces to a table lookup of
bit lengths, so the hot loop does no big-number arithmetic at all.  Exact
coefficients and remainders are reconstructed per hit afterwards (hits are
rare).  Each walk ends at the first 1: for starts >= 3 nothing later can
reach the start again under the compressed map, and for the classic map this
matches the published census convention (continuing into the 1-4-2 cycle
would only ever admit the trivial starts 3 and 4).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .dyadic import Dyadic
from .dynamics import BudgetExhausted, Formalism, trajectory

INFINITE = math.inf
DEFAULT_BUDGET = 1_000_000

_BL3: list[int] = [1]   # _BL3[q] = bit_length(3**q)


def _bl3_table(upto: int) -> list[int]:
    p = 3 ** (len(_BL3) - 1)
    while len(_BL3) <= upto:
        p *= 3
        _BL3.append(p.bit_length())
    return _BL3


# ---------------------------------------------------------------------------
# Scalar trajectory statistics
# ---------------------------------------------------------------------------


def stopping_time(n: int, budget: int = DEFAULT_BUDGET) -> int | float:
    """Least j with T**j(n) < n; INFINITE for n = 1 (whose orbit never drops)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n == 1:
        return INFINITE   # the orbit of 1 is the cycle (1, 2); it never descends
    cur = n
    j = 0
    while cur >= n:
        cur = (3 * cur + 1) >> 1 if cur & 1 else cur >> 1
        j += 1
        if j > budget:
            raise BudgetExhausted(n, budget, what="no descent below the start")
    return j


def coeff_stopping_time(n: int, budget: int = DEFAULT_BUDGET) -> int:
    """Least j with 3**q_j(n) < 2**j (exact power comparison via bit lengths)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    bl3 = _bl3_table(80)
    cur = n
    q = 0
    j = 0
    while True:
        if cur & 1:
            cur = (3 * cur + 1) >> 1
            q += 1
            if q >= len(bl3):
                bl3 = _bl3_table(2 * q)
        else:
            cur >>= 1
        j += 1
        if bl3[q] <= j:
            return j
        if j > budget:
            raise BudgetExhausted(n, budget, what="coefficient never dropped below 1")


def delay(n: int, formalism: Formalism = Formalism.SHORTCUT,
          budget: int = DEFAULT_BUDGET) -> int:
    """Least j with iterate = 1."""
    if n < 1:
        raise ValueError("n must be >= 1")
    shortcut = formalism is Formalism.SHORTCUT
    cur = n
    j = 0
    while cur != 1:
        if cur & 1:
            cur = (3 * cur + 1) >> 1 if shortcut else 3 * cur + 1
        else:
            cur >>= 1
        j += 1
        if j > budget:
            raise BudgetExhausted(n, budget, what="never reached 1")
    return j


def delay_and_odd_count(n: int, budget: int = DEFAULT_BUDGET) -> tuple[int, int]:
    """(delay under the compressed map, odd steps on the way); the classic
    delay is then their sum."""
    if n < 1:
        raise ValueError("n must be >= 1")
    cur = n
    j = 0
    q = 0
    while cur != 1:
        if cur & 1:
            cur = (3 * cur + 1) >> 1
            q += 1
        else:
            cur >>= 1
        j += 1
        if j > budget:
            raise BudgetExhausted(n, budget, what="never reached 1")
    return j, q


def max_excursion(n: int, formalism: Formalism = Formalism.SHORTCUT,
                  budget: int = DEFAULT_BUDGET) -> int:
    """Greatest iterate of the trajectory down to 1 (attained before the
    trivial cycle for every start)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    shortcut = formalism is Formalism.SHORTCUT
    cur = n
    best = n
    j = 0
    while cur != 1:
        if cur & 1:
            cur = (3 * cur + 1) >> 1 if shortcut else 3 * cur + 1
            if cur > best:
                best = cur
        else:
            cur >>= 1
        j += 1
        if j > budget:
            raise BudgetExhausted(n, budget, what="never reached 1")
    return best


# ---------------------------------------------------------------------------
# Paradox hits
# ---------------------------------------------------------------------------

HIT_CSV_HEADER = "n,j,q,C_num,C_den,E_num,E_den,d,start_odd,end_odd,formalism"


@dataclass(frozen=True)
class ParadoxHit:
    """One paradoxical trajectory, with its exact linear-form data."""

    n: int
    j: int             # step count
    q: int             # odd steps
    e: int             # halvings (= j for the compressed map)
    c_num: int         # coefficient 3**q / 2**e, already in lowest terms
    c_den: int
    e_num: int         # remainder in lowest terms
    e_den: int
    d: int             # last - first
    start_odd: bool
    end_odd: bool
    formalism: Formalism

    @property
    def coefficient(self) -> Dyadic:
        return Dyadic(self.c_num, self.e)

    def remainder_fraction(self):
        from fractions import Fraction

        return Fraction(self.e_num, self.e_den)

    def csv_row(self) -> str:
        return (f"{self.n},{self.j},{self.q},{self.c_num},{self.c_den},"
                f"{self.e_num},{self.e_den},{self.d},{int(self.start_odd)},"
                f"{int(self.end_odd)},{self.formalism.value}")

    @classmethod
    def from_walk(cls, n: int, j: int, formalism: Formalism) -> "ParadoxHit":
        """Rebuild the exact trajectory data for a (start, length) pair and
        re-verify both defining conditions."""
        traj = trajectory(n, j, formalism)
        form = traj.forms[-1]
        if not form.coefficient_lt_one():
            raise AssertionError(f"hit ({n}, {j}) has coefficient >= 1")
        d = traj.last() - n
        if d < 0:
            raise AssertionError(f"hit ({n}, {j}) has a falling trajectory")
        e_num, e_den = form.E.as_integer_pair()
        hit = cls(n=n, j=j, q=form.q, e=form.e, c_num=3**form.q, c_den=1 << form.e,
                  e_num=e_num, e_den=e_den, d=d, start_odd=bool(n & 1),
                  end_odd=bool(traj.last() & 1), formalism=formalism)
        # exact consistency: d = C*n + E - n
        lhs = d << form.e
        rhs = 3**form.q * n + (form.E.num << (form.e - form.E.exp2)) - (n << form.e)
        if lhs != rhs:
            raise AssertionError(f"hit ({n}, {j}) fails the linear-form identity")
        return hit


def scan_paradoxes(n_lo: int, n_hi: int, formalism: Formalism = Formalism.SHORTCUT,
                   budget: int = DEFAULT_BUDGET) -> list[tuple[int, int]]:
    """Raw (n, j) pairs of every paradox with n_lo <= n <= n_hi, sorted.

    This is the hot loop; see the module docstring for why it may stop each
    walk at the first 1.
    """
    if n_lo < 3:
        raise ValueError("enumeration starts at 3 (1 and 2 have infinitely many hits)")
    if n_hi < n_lo:
        raise ValueError("empty range")
    bl3 = _bl3_table(4000)   # grows lazily; plenty for every realistic walk
    qcap = len(bl3)
    out: list[tuple[int, int]] = []
    append = out.append
    if formalism is Formalism.SHORTCUT:
        for n in range(n_lo, n_hi + 1):
            cur = n
            q = 0
            j = 0
            while cur != 1:
                if cur & 1:
                    cur = (3 * cur + 1) >> 1
                    q += 1
                    if q == qcap:
                        bl3 = _bl3_table(2 * q)
                        qcap = len(bl3)
                else:
                    cur >>= 1
                j += 1
                if bl3[q] <= j and cur >= n:
                    append((n, j))
                if j > budget:
                    raise BudgetExhausted(n, budget, what="never reached 1")
    else:
        for n in range(n_lo, n_hi + 1):
            cur = n
            q = 0
            e = 0
            j = 0
            while cur != 1:
                if cur & 1:
                    cur = 3 * cur + 1
                    q += 1
                    if q == qcap:
                        bl3 = _bl3_table(2 * q)
                        qcap = len(bl3)
                else:
                    cur >>= 1
                    e += 1
                j += 1
                if bl3[q] <= e and cur >= n:
                    append((n, j))
                if j > budget:
                    raise BudgetExhausted(n, budget, what="never reached 1")
    return out


def enumerate_paradoxes(n_lo: int, n_hi: int, formalism: Formalism = Formalism.SHORTCUT,
                        budget: int = DEFAULT_BUDGET) -> list[ParadoxHit]:
    """Every paradoxical trajectory starting in [n_lo, n_hi], sorted by (n, j),
    each re-verified with a fresh exact trajectory."""
    return [ParadoxHit.from_walk(n, j, formalism)
            for n, j in scan_paradoxes(n_lo, n_hi, formalism, budget)]


def naive_paradoxes(n_lo: int, n_hi: int, j_max: int,
                    formalism: Formalism = Formalism.SHORTCUT) -> list[tuple[int, int]]:
    """Brute-force oracle: for every n and every j <= j_max, recompute the
    trajectory from scratch and test both conditions with freshly computed
    powers.  No pruning, no incremental state; only the stop-at-1 domain
    convention is shared with the fast path."""
    out = []
    for n in range(n_lo, n_hi + 1):
        for j in range(1, j_max + 1):
            cur = n
            q = 0
            e = 0
            reached_one = False
            for _ in range(j):
                if cur == 1:
                    reached_one = True
                    break
                if cur % 2 == 1:
                    q += 1
                    cur = (3 * cur + 1) // 2 if formalism is Formalism.SHORTCUT else 3 * cur + 1
                    if formalism is Formalism.SHORTCUT:
                        e += 1
                else:
                    cur = cur // 2
                    e += 1
            if reached_one:
                break
            if 3**q < 2**e and cur >= n:
                out.append((n, j))
    return out


# ---------------------------------------------------------------------------
# Coefficient-stopping-time conjecture verification
# ---------------------------------------------------------------------------


@dataclass
class CstReport:
    lo: int
    hi: int
    checked: int
    counterexamples: list[tuple[int, int, int]]   # (n, tau, t)
    max_gap: int                                  # max over n of t - tau

    @property
    def ok(self) -> bool:
        return not self.counterexamples


def verify_cst(lo: int, hi: int, budget: int = DEFAULT_BUDGET) -> CstReport:
    """Check stopping time == coefficient stopping time for every n in [lo, hi].

    One walk per n: it ends at the stopping time (first descent below n) and
    records on the way the first step where the coefficient drops below 1.
    """
    if lo < 2:
        raise ValueError("range must start at 2 (the start 1 never descends)")
    if hi < lo:
        raise ValueError("empty range")
    bl3 = _bl3_table(4000)
    qcap = len(bl3)
    bad: list[tuple[int, int, int]] = []
    max_gap = 0
    for n in range(lo, hi + 1):
        cur = n
        q = 0
        j = 0
        tau = 0
        while cur >= n:
            if cur & 1:
                cur = (3 * cur + 1) >> 1
                q += 1
                if q == qcap:
                    bl3 = _bl3_table(2 * q)
                    qcap = len(bl3)
            else:
                cur >>= 1
            j += 1
            if tau == 0 and bl3[q] <= j:
                tau = j
            if j > budget:
                raise BudgetExhausted(n, budget, what="no descent below the start")
        if tau == 0:
            tau = j + 1   # cannot happen (descent forces C < 1); flag loudly
        if tau != j:
            bad.append((n, tau, j))
            max_gap = max(max_gap, j - tau)
    return CstReport(lo, hi, hi - lo + 1, bad, max_gap)
