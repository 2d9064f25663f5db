"""Greedy / quasi-greedy algorithms, base solving, Thue-Morse enclosure."""

import random
from fractions import Fraction as F

import pytest

from univoque.algebraic import DomainError, refine, sign_at
from univoque.characterization import check_greedy_admissible
from univoque.expansions import (NoBaseError, greedy_expansion, kl_constant,
                                 poly_from_sequence, quasi_from_greedy,
                                 quasi_greedy_expansion, solve_base,
                                 thue_morse_prefix, value)
from univoque.words import ep_sequence

S10 = ep_sequence((), (1, 0))
S110 = ep_sequence((), (1, 1, 0))


def test_value_examples():
    assert value(S10, 2) == F(2, 3)
    assert value(ep_sequence((2,), (0,)), 2) == 1
    assert value(S110, 2) == F(6, 7)
    with pytest.raises(DomainError):
        value(S10, 1)


def test_value_matches_direct_partial_sums():
    rng = random.Random(3)
    for _ in range(25):
        s = ep_sequence([rng.randint(0, 2) for _ in range(rng.randint(0, 3))],
                        [rng.randint(0, 2) for _ in range(rng.randint(1, 4))])
        q = F(rng.randint(5, 40), rng.randint(1, 4))
        if q <= 1:
            continue
        n = 400
        partial = sum(s.digit(i) * q ** -i for i in range(1, n + 1))
        tail = s.max_digit * q ** -n / (q - 1)
        assert partial <= value(s, q) <= partial + tail


def test_poly_from_sequence_examples():
    assert poly_from_sequence(S10) == (-1, -1, 1)
    assert poly_from_sequence(S110) == (-1, -1, -1, 1)
    assert poly_from_sequence(ep_sequence((2,), (0,))) == (2, -3, 1)
    with pytest.raises(ValueError):
        poly_from_sequence(ep_sequence((), (0,)))


def test_solve_base_examples():
    two = solve_base(ep_sequence((2,), (0,)))
    assert two.lo < 2 < two.hi
    golden = refine(solve_base(S10), F(1, 10 ** 7))
    assert float(golden.lo) == pytest.approx(1.6180339887, abs=1e-6)
    trib = solve_base(S110)
    assert float(refine(trib, F(1, 10 ** 7)).lo) == pytest.approx(
        1.8392867552, abs=1e-6)


def test_solve_base_needs_digit_sum_two():
    with pytest.raises(NoBaseError):
        solve_base(ep_sequence((1,), (0,)))


def test_solve_base_all_max_digit_sequence():
    # (2)^inf solves exactly at q = 3
    a = solve_base(ep_sequence((), (2,)))
    assert sign_at((-3, 1), a) == 0


def test_greedy_examples():
    assert greedy_expansion(1, 4).digits == (1, 0, 0, 0)
    assert greedy_expansion(2, 3).digits == (2, 0, 0)
    assert greedy_expansion(S10, 4).digits == (1, 1, 0, 0)
    assert greedy_expansion(S110, 5).digits == (1, 1, 1, 0, 0)
    assert greedy_expansion(S110, 5).exact


def test_quasi_greedy_examples():
    assert quasi_greedy_expansion(2, 4).digits == (1, 1, 1, 1)
    assert quasi_greedy_expansion(S10, 4).digits == (1, 0, 1, 0)
    assert quasi_greedy_expansion(S110, 6).digits == (1, 1, 0, 1, 1, 0)
    with pytest.raises(DomainError):
        quasi_greedy_expansion(1, 4)


def test_greedy_dominates_quasi_greedy():
    rng = random.Random(11)
    bases = [F(3, 2), F(2), F(5, 2), F(3)] + \
        [F(rng.randint(11, 40), 10) for _ in range(10)]
    for q in bases:
        g = greedy_expansion(q, 60).digits
        a = quasi_greedy_expansion(q, 60).digits
        assert a <= g


def test_partial_sum_bounds_rational():
    rng = random.Random(13)
    for _ in range(20):
        q = F(rng.randint(101, 400), 100)
        g = greedy_expansion(q, 40).digits
        a = quasi_greedy_expansion(q, 40).digits
        gs = as_ = F(0)
        for i in range(40):
            gs += g[i] * q ** -(i + 1)
            as_ += a[i] * q ** -(i + 1)
            assert gs <= 1
            assert as_ < 1


def test_quasi_from_greedy_examples():
    assert quasi_from_greedy((1, 1, 1)) == S110
    assert quasi_from_greedy((1, 1)) == S10
    assert quasi_from_greedy((2,)) == ep_sequence((), (1,))
    with pytest.raises(ValueError):
        quasi_from_greedy((1, 0))       # ends in zero
    with pytest.raises(ValueError):
        quasi_from_greedy((1, 2))       # fails the shift condition
    with pytest.raises(NoBaseError):
        quasi_from_greedy((1,))         # would give base 1


def _random_admissible_greedy_words(count, rng, max_len=7, max_digit=3):
    found = []
    while len(found) < count:
        n = rng.randint(1, max_len)
        w = tuple(rng.randint(0, max_digit) for _ in range(n))
        if sum(w) < 2 or w[-1] < 1:
            continue
        ok, _ = check_greedy_admissible(ep_sequence(w, (0,)))
        if ok and w not in found:
            found.append(w)
    return found


def test_round_trip_greedy_words():
    rng = random.Random(5)
    for w in _random_admissible_greedy_words(15, rng):
        base = solve_base(ep_sequence(w, (0,)))
        got = greedy_expansion(base, len(w) + 20).digits
        assert got == w + (0,) * 20


def test_greedy_quasi_pair_relation():
    rng = random.Random(6)
    for w in _random_admissible_greedy_words(15, rng):
        m = len(w)
        qg = quasi_from_greedy(w)
        base_g = solve_base(ep_sequence(w, (0,)))
        base_q = solve_base(qg)
        # same base: each defining polynomial vanishes at the other's root
        assert sign_at(base_q.poly, base_g) == 0
        assert sign_at(base_g.poly, base_q) == 0
        expect = tuple(qg.digit(i) for i in range(1, 3 * m + 1))
        assert quasi_greedy_expansion(base_g, 3 * m).digits == expect
        assert len(qg.preperiod) + len(qg.period) <= m


def test_value_strictly_decreasing_in_q():
    rng = random.Random(8)
    for _ in range(25):
        s = ep_sequence([rng.randint(0, 2) for _ in range(rng.randint(0, 3))],
                        [rng.randint(0, 2) for _ in range(rng.randint(1, 4))])
        if s.max_digit == 0:
            continue
        q1 = 1 + F(rng.randint(1, 200), 100)
        q2 = q1 + F(rng.randint(1, 100), 100)
        assert value(s, q1) > value(s, q2)


def test_thue_morse_prefix():
    assert thue_morse_prefix(2) == (1, 1)
    assert thue_morse_prefix(8) == (1, 1, 0, 1, 0, 0, 1, 1)
    assert thue_morse_prefix(16) == tuple(
        int(c) for c in "1101001100101101")
    # agrees with the bit-parity closed form
    t = thue_morse_prefix(256)
    assert all(t[i - 1] == bin(i).count("1") % 2 for i in range(1, 257))


def test_kl_constant_enclosures():
    lo, hi, _ = kl_constant(F(1, 100))
    assert hi - lo <= F(1, 100)
    assert lo < F(1787, 1000) < hi
    lo8, hi8, _ = kl_constant(F(1, 10 ** 8))
    assert hi8 - lo8 <= F(1, 10 ** 8)
    assert lo8 < F(178723165, 10 ** 8) + F(1, 10**8)
    assert hi8 > F(178723165, 10 ** 8)
    # nesting across accuracies
    assert lo <= lo8 and hi8 <= hi
