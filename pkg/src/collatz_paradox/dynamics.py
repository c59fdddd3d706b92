"""Collatz dynamics with an exactly maintained linear decomposition.

Two formalisms are supported: the compressed map n -> (3n+1)/2 or n/2
("shortcut") and the classic map n -> 3n+1 or n/2.  Alongside the iterates we
maintain the exact decomposition

    iterate_k = (3**q / 2**e) * n + E

where q counts odd steps, e counts halvings and E is a dyadic rational stored
with denominator exactly 2**e, so that every update is a shift/add.  All
arithmetic is on unbounded integers; nothing here ever rounds.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterator

from .dyadic import Dyadic
from .vectors import ParityVector


class BudgetExhausted(RuntimeError):
    """An iteration budget ran out before the walk settled.

    For any start above 2 this would be a major discovery, so callers treat
    it as an error rather than a soft result.
    """

    def __init__(self, n: int, budget: int, what: str = "iteration budget exhausted"):
        super().__init__(f"{what} (n = {n}, budget = {budget})")
        self.n = n
        self.budget = budget


class Formalism(enum.Enum):
    SHORTCUT = "shortcut"  # odd n -> (3n+1)/2
    CLASSIC = "classic"    # odd n -> 3n+1

    @classmethod
    def parse(cls, name: str) -> "Formalism":
        try:
            return cls(name.strip().lower())
        except ValueError:
            raise ValueError(f"unknown formalism {name!r} (use shortcut|classic)") from None


def step(n: int, formalism: Formalism = Formalism.SHORTCUT) -> int:
    """One application of the map; n must be a positive integer."""
    if n < 1:
        raise ValueError("domain is positive integers")
    if n & 1:
        return (3 * n + 1) >> 1 if formalism is Formalism.SHORTCUT else 3 * n + 1
    return n >> 1


@dataclass(frozen=True)
class LinearForm:
    """(q, e, E) with iterate = (3**q / 2**e) * n + E, E.exp2 == e."""

    q: int = 0
    e: int = 0
    E: Dyadic = Dyadic(0, 0)

    def coefficient(self) -> Dyadic:
        return Dyadic(3**self.q, self.e)

    def coefficient_lt_one(self) -> bool:
        # 3**q < 2**e iff bit_length(3**q) <= e (equality of the powers is impossible)
        return (3**self.q).bit_length() <= self.e


def advance_form(form: LinearForm, odd: bool, formalism: Formalism = Formalism.SHORTCUT) -> LinearForm:
    """Advance the decomposition by one step of the given parity.

    Shortcut: odd step maps E to (3E+1)/2, even to E/2.  Classic: odd step maps
    E to 3E+1 (no halving), even to E/2.  In every case E keeps denominator
    2**e for the new halving count e.
    """
    q, e, num = form.q, form.e, form.E.num
    if form.E.exp2 != e:
        raise ValueError("linear form remainder must carry exp2 == e")
    if odd:
        num = 3 * num + (1 << e)
        q += 1
        if formalism is Formalism.SHORTCUT:
            e += 1
    else:
        e += 1
    return LinearForm(q, e, Dyadic(num, e))


@dataclass(frozen=True)
class Trajectory:
    """Iterates and linear forms of one finite trajectory."""

    start: int
    formalism: Formalism
    iterates: tuple[int, ...]
    forms: tuple[LinearForm, ...]

    @property
    def j(self) -> int:
        return len(self.iterates) - 1

    @property
    def q(self) -> int:
        return self.forms[-1].q

    @property
    def e(self) -> int:
        return self.forms[-1].e

    def coefficient(self) -> Dyadic:
        return self.forms[-1].coefficient()

    def remainder(self) -> Dyadic:
        return self.forms[-1].E

    def last(self) -> int:
        return self.iterates[-1]

    def odd_terms(self) -> list[int]:
        """The odd iterates among the first j terms (the last one excluded)."""
        return [m for m in self.iterates[:-1] if m & 1]

    def check_identity(self) -> bool:
        """iterate_j * 2**e == 3**q * n + E.num, as unbounded integers."""
        f = self.forms[-1]
        return self.last() << f.e == 3**f.q * self.start + f.E.num


def trajectory(n: int, j: int, formalism: Formalism = Formalism.SHORTCUT) -> Trajectory:
    """Trajectory of j steps from n (j+1 iterates, forms maintained)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if j < 0:
        raise ValueError("j must be >= 0")
    iterates = [n]
    forms = [LinearForm()]
    cur = n
    for _ in range(j):
        odd = bool(cur & 1)
        forms.append(advance_form(forms[-1], odd, formalism))
        cur = step(cur, formalism)
        iterates.append(cur)
    return Trajectory(n, formalism, tuple(iterates), tuple(forms))


def iterate_with_forms(n: int, formalism: Formalism = Formalism.SHORTCUT,
                       max_steps: int | None = None) -> Iterator[tuple[int, LinearForm]]:
    """Stream (iterate, form) pairs without retaining history.

    Yields the state *after* each step, starting with step 1; stops after
    max_steps when given, otherwise runs forever (caller must bound it).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    cur = n
    form = LinearForm()
    k = 0
    while max_steps is None or k < max_steps:
        odd = bool(cur & 1)
        form = advance_form(form, odd, formalism)
        cur = step(cur, formalism)
        k += 1
        yield cur, form


def parity_vector(n: int, j: int, formalism: Formalism = Formalism.SHORTCUT) -> ParityVector:
    """Parities of n, T(n), ..., T**(j-1)(n); ones-count equals q_j(n)."""
    if j < 1:
        raise ValueError("parity vector length must be >= 1")
    bits = []
    cur = n
    for _ in range(j):
        bits.append(cur & 1)
        cur = step(cur, formalism)
    return ParityVector(bits)
