import random
from fractions import Fraction

import pytest

from collatz_paradox.dynamics import (BudgetExhausted, Formalism, LinearForm,
                                      advance_form, iterate_with_forms,
                                      parity_vector, step, trajectory)
from collatz_paradox.vectors import ParityVector


def test_step_both_formalisms():
    assert step(7, Formalism.SHORTCUT) == 11
    assert step(2, Formalism.SHORTCUT) == 1
    assert step(7, Formalism.CLASSIC) == 22
    assert step(22, Formalism.CLASSIC) == 11
    with pytest.raises(ValueError):
        step(0)


def test_advance_form_single_steps():
    start = LinearForm()
    odd = advance_form(start, True, Formalism.SHORTCUT)
    assert (odd.q, odd.e) == (1, 1) and odd.E == Fraction(1, 2)
    even = advance_form(start, False, Formalism.SHORTCUT)
    assert (even.q, even.e) == (0, 1) and even.E == 0
    codd = advance_form(start, True, Formalism.CLASSIC)
    assert (codd.q, codd.e) == (1, 0) and codd.E == 1


def test_form_after_eight_steps_from_seven():
    t = trajectory(7, 8)
    f = t.forms[-1]
    assert (f.q, f.e) == (5, 8)
    assert f.E == Fraction(347, 256)
    assert t.coefficient() == Fraction(243, 256)


def test_known_iterate_sequences():
    assert trajectory(7, 8).iterates == (7, 11, 17, 26, 13, 20, 10, 5, 8)
    assert trajectory(18, 8).iterates == (18, 9, 14, 7, 11, 17, 26, 13, 20)
    t = trajectory(1, 2)
    assert t.iterates == (1, 2, 1)
    assert t.coefficient() == Fraction(3, 4)
    assert t.remainder() == Fraction(1, 4)


def test_classic_trajectory_and_form():
    t = trajectory(7, 11, Formalism.CLASSIC)
    assert t.iterates[:6] == (7, 22, 11, 34, 17, 52)
    assert t.check_identity()
    assert t.e + t.q == 11


def test_parity_vector_examples():
    v = parity_vector(7, 8)
    assert v.bits == (1, 1, 1, 0, 1, 0, 0, 1)
    assert v.q == 5
    assert parity_vector(96, 5).bits == (0, 0, 0, 0, 0)
    assert parity_vector(5, 1).bits == (1,)


def test_parity_vector_period_is_two_power():
    for j in range(1, 11):
        for n in range(1, 2**j + 1):
            assert parity_vector(n, j) == parity_vector(n + 2**j, j)
    rng = random.Random(7)
    for j in range(11, 21):
        for n in [rng.randrange(1, 2**j) for _ in range(40)]:
            assert parity_vector(n, j) == parity_vector(n + 2**j, j)


def test_parity_vector_bijection_on_one_period():
    for j in list(range(1, 11)) + [12, 16]:
        seen = {parity_vector(n, j).bits for n in range(1, 2**j + 1)}
        assert len(seen) == 2**j


def test_formalisms_visit_the_same_odd_values():
    for n in range(1, 501):
        odds = []
        cur = n
        while cur != 1:
            if cur & 1:
                odds.append(cur)
            cur = step(cur, Formalism.SHORTCUT)
        odds_c = []
        cur = n
        while cur != 1:
            if cur & 1:
                odds_c.append(cur)
            cur = step(cur, Formalism.CLASSIC)
        assert odds == odds_c


def test_linear_form_identity_random_sample():
    rng = random.Random(20260810)
    for _ in range(2000):
        n = rng.randrange(1, 10**12)
        j = rng.randrange(0, 90)
        f = Formalism.SHORTCUT if rng.random() < 0.5 else Formalism.CLASSIC
        t = trajectory(n, j, f)
        assert t.check_identity()
        assert t.forms[-1].E.exp2 == t.forms[-1].e
        if f is Formalism.SHORTCUT:
            assert t.e == j
        else:
            assert t.e == j - t.q


def test_streaming_matches_batch():
    t = trajectory(27, 40)
    stream = iterate_with_forms(27, max_steps=40)
    for k, (cur, form) in enumerate(stream, start=1):
        assert cur == t.iterates[k]
        assert form == t.forms[k]


def test_trajectory_argument_validation():
    with pytest.raises(ValueError):
        trajectory(0, 5)
    with pytest.raises(ValueError):
        trajectory(5, -1)
    with pytest.raises(ValueError):
        parity_vector(5, 0)


def test_budget_exception_fields():
    exc = BudgetExhausted(27, 10)
    assert exc.n == 27 and exc.budget == 10
