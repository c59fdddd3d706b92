"""Extremal, average and necessary-condition bounds for paradoxical behavior.

Everything that decides an inequality does so with unbounded integers;
cross-multiplied power comparisons replace logarithms throughout.  The only
exception is the long harmonic-cap scan, which uses certified interval
arithmetic to skip the easy cases and falls back to the exact comparison
whenever the interval straddles (the result is still a proof, just cheaper).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .dyadic import Dyadic
from .dynamics import Formalism, Trajectory, trajectory
from .precision import log2_ratio_scaled

# ---------------------------------------------------------------------------
# Exact floor(j * log2/log3) and friends
# ---------------------------------------------------------------------------


def floor_log_ratio(j: int) -> int:
    """Largest q with 3**q <= 2**j, by big-integer comparison only.

    3**q < 2**j iff bit_length(3**q) <= j (the powers are never equal), so a
    float seed is corrected by exact bit-length tests.
    """
    if j < 1:
        raise ValueError("j must be >= 1")
    q = max(0, int(j * 0.6309297535714574) - 2)
    while pow(3, q + 1).bit_length() <= j:
        q += 1
    while q > 0 and pow(3, q).bit_length() > j:
        q -= 1
    return q


def iter_floor_log_ratio(j_hi: int):
    """Yield (j, floor_log_ratio(j)) for j = 1..j_hi with incremental powers."""
    p = 3  # 3**(q+1)
    q = 0
    for j in range(1, j_hi + 1):
        while p.bit_length() <= j:
            q += 1
            p *= 3
        yield j, q


# ---------------------------------------------------------------------------
# Extremal remainders (per length j and weight q)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RemainderBounds:
    j: int
    q: int
    lower: Dyadic            # (3^q - 2^q) / 2^j
    upper: Dyadic            # (3^q - 2^q) / 2^q
    lower_class: int         # residue mod 2^j attaining the lower bound
    upper_class: int         # residue mod 2^j attaining the upper bound


def remainder_bounds(j: int, q: int) -> RemainderBounds:
    """Exact extremal remainders and the residues mod 2**j attaining them.

    The upper bound belongs to the all-ones tail word (n = -2**(j-q)), the
    lower one to the all-ones head word (n = (2/3)**q - 1, via the modular
    inverse of 3**q).
    """
    if j < 1 or q < 0 or q > j:
        raise ValueError("need j >= 1 and 0 <= q <= j")
    mod = 1 << j
    if q == 0:
        zero = Dyadic(0, 0)
        return RemainderBounds(j, 0, zero, zero, 0, 0)
    spread = 3**q - 2**q
    upper_class = (mod - (1 << (j - q))) % mod
    inv3q = pow(3**q, -1, mod)
    lower_class = ((1 << q) * inv3q - 1) % mod
    return RemainderBounds(j, q, Dyadic(spread, j), Dyadic(spread, q), lower_class, upper_class)


def mean_remainder(j: int, formalism: Formalism = Formalism.SHORTCUT) -> Fraction:
    """Arithmetic mean of the remainders over one full period n = 1..2**j."""
    if j < 1:
        raise ValueError("j must be >= 1")
    if j > 22:
        raise ValueError("j > 22 enumerates too many residues")
    total_num = 0   # common denominator 2**(2j): per-residue E = num / 2**e with e <= j
    shortcut = formalism is Formalism.SHORTCUT
    for n in range(1, (1 << j) + 1):
        cur = n
        num = 0
        e = 0
        for _ in range(j):
            if cur & 1:
                num = 3 * num + (1 << e)
                if shortcut:
                    cur = (3 * cur + 1) >> 1
                    e += 1
                else:
                    cur = 3 * cur + 1
            else:
                cur >>= 1
                e += 1
        total_num += num << (j - e)
    return Fraction(total_num, 1 << (2 * j))


# ---------------------------------------------------------------------------
# The paradox criterion and the E/n window
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ParadoxWitness:
    paradoxical: bool
    C: Dyadic
    E: Dyadic
    d: int               # last - first (negative when not paradoxical is fine)


def paradox_witness(traj: Trajectory) -> ParadoxWitness:
    """Decide coefficient < 1 together with last >= first, exactly."""
    if traj.j < 1:
        raise ValueError("trajectory must have at least one step")
    form = traj.forms[-1]
    ok = form.coefficient_lt_one() and traj.last() >= traj.start
    return ParadoxWitness(ok, form.coefficient(), form.E, traj.last() - traj.start)


def is_paradoxical(traj: Trajectory) -> bool:
    return paradox_witness(traj).paradoxical


def harmonic_mean_odd_terms(traj: Trajectory) -> Fraction:
    """Harmonic mean of the odd terms among the first j iterates (exact)."""
    odds = traj.odd_terms()
    if not odds:
        raise ValueError("trajectory has no odd terms before the last")
    s = sum(Fraction(1, m) for m in odds)
    return Fraction(len(odds), 1) / s


@dataclass(frozen=True)
class EnRatioBounds:
    ratio: Fraction          # E / n
    lower: Fraction          # (2^e - 3^q) / 2^e  = 1 - C
    upper: Fraction          # ((3 + 1/h)^q - 3^q) / 2^e
    lower_holds: bool        # expected for paradoxical trajectories only
    upper_holds: bool        # expected for every trajectory with q >= 1


def en_ratio_bounds(traj: Trajectory) -> EnRatioBounds:
    """Both sides of the E/n window, cleared of h by cross-multiplication."""
    form = traj.forms[-1]
    q, e = form.q, form.e
    if q < 1:
        raise ValueError("trajectory needs at least one odd term")
    h = harmonic_mean_odd_terms(traj)
    ratio = form.E.as_fraction() / traj.start
    lower = Fraction((1 << e) - 3**q, 1 << e)
    hn, hd = h.numerator, h.denominator
    upper = Fraction((3 * hn + hd) ** q - 3**q * hn**q, hn**q << e)
    return EnRatioBounds(ratio, lower, upper, ratio >= lower, ratio <= upper)


def ones_ratio_window(traj: Trajectory) -> bool:
    """Necessary window for the odd-step density of a paradoxical trajectory.

    Right side: 3**q < 2**e.  Left side: 2**e <= (3 + 1/h)**q, evaluated as
    2**e * hn**q <= (3*hn + hd)**q with h = hn/hd in lowest terms.
    """
    form = traj.forms[-1]
    q, e = form.q, form.e
    if q < 1:
        return False
    if not form.coefficient_lt_one():
        return False
    h = harmonic_mean_odd_terms(traj)
    hn, hd = h.numerator, h.denominator
    return (hn**q << e) <= (3 * hn + hd) ** q


# ---------------------------------------------------------------------------
# Harmonic cap H(j) and the bound-chain scans
# ---------------------------------------------------------------------------


def harmonic_cap_holds(j: int, m: int) -> bool:
    """Whether H(j) >= m, i.e. a length-j paradox could have all odd terms >= m.

    With q = floor_log_ratio(j) this is exactly 2**j * m**q <= (3m+1)**q.
    """
    if j < 2:
        raise ValueError("j must be >= 2 (j = 1 has q = 0)")
    if m < 1:
        raise ValueError("m must be >= 1")
    q = floor_log_ratio(j)
    return (m**q << j) <= (3 * m + 1) ** q


def smallest_harmonic_cap_j(m: int, j_limit: int = 400_000, prec: int = 192) -> int:
    """Least j > 1 with H(j) >= m.

    The condition is j <= q * log2(3 + 1/m).  A certified interval for the
    log decides almost every j; any straddled case falls back to the exact
    power comparison, so the returned value carries a full proof.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    lo, hi = log2_ratio_scaled(3 * m + 1, m, prec)
    p3 = 3   # 3**(q+1)
    q = 0
    for j in range(2, j_limit + 1):
        while p3.bit_length() <= j:
            q += 1
            p3 *= 3
        if q == 0:
            continue
        js = j << prec
        if js <= q * lo:
            return j
        if js > q * hi:
            continue
        if (m**q << j) <= (3 * m + 1) ** q:   # straddle: decide exactly
            return j
    raise ValueError(f"no j <= {j_limit} with H(j) >= {m}")


def coefficient_ceiling_q(j: int, m: int) -> int:
    """Smallest q with (3m+1)**q >= 2**j * m**q (an exact ceiling, no logs)."""
    if j < 1 or m < 1:
        raise ValueError("need j >= 1 and m >= 1")

    def ok(q: int) -> bool:
        return (3 * m + 1) ** q >= (m**q << j)

    q = max(1, int(j * 0.63) - 4)
    while not ok(q):
        q += 1
    while q > 1 and ok(q - 1):
        q -= 1
    return q


# ---------------------------------------------------------------------------
# Complete classification for a handful of small lengths
# ---------------------------------------------------------------------------

SMALL_J_SOLVED = (2, 3, 4, 6, 7, 9)


def small_j_classification(j: int) -> set[int]:
    """All n with a paradoxical length-j trajectory, for the solved lengths.

    The harmonic cap does all the work: H(j) < 1 rules everything out, and
    H(j) < 3 forces the odd term 1 into the first j iterates, which caps the
    last term at 2 and hence n at 2; the two candidates are then checked
    directly.
    """
    if j not in SMALL_J_SOLVED:
        raise ValueError(f"only lengths {SMALL_J_SOLVED} are classified here")
    if not harmonic_cap_holds(j, 1):
        return set()
    if harmonic_cap_holds(j, 3):
        raise AssertionError(f"H({j}) >= 3; classification argument does not apply")
    return {n for n in (1, 2) if is_paradoxical(trajectory(n, j))}
