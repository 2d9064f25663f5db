"""Greedy and quasi-greedy expansions of 1, base solving, Thue-Morse.

The number 1 is expanded in a base q > 1 (q >= 1 for greedy) as
sum_i c_i q^{-i} = 1.  Digit decisions are exact: rational bases use
Fraction arithmetic, algebraic bases use sign tests of residual
polynomials reduced modulo the defining polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import polynomials as pl
from .algebraic import (AlgebraicReal, DomainError, floor_of, refine,
                        sign_of_fraction_poly, reduce_mod)
from .words import EPSequence, ep_sequence, word


class NoBaseError(ValueError):
    """The sequence has no base q > 1 with value 1 (digit sum < 2)."""


@dataclass(frozen=True)
class ExpansionPrefix:
    digits: tuple
    depth: int
    exact: bool


def coerce_base(q):
    """Accept a Fraction/int, an AlgebraicReal, or an EPSequence (meaning
    the unique base where its value is 1)."""
    if isinstance(q, AlgebraicReal):
        return q
    if isinstance(q, EPSequence):
        return solve_base(q)
    return Fraction(q)


def value(s: EPSequence, q) -> Fraction:
    """Exact value of sum_i s_i q^{-i} for rational q > 1."""
    q = Fraction(q)
    if q <= 1:
        raise DomainError("value requires q > 1")
    p, r = len(s.preperiod), len(s.period)
    x = 1 / q
    u = Fraction(0)
    for d in reversed(s.preperiod):
        u = (u + d) * x
    w = Fraction(0)
    for d in reversed(s.period):
        w = (w + d) * x
    return u + x ** p * w / (1 - x ** r)


def poly_from_sequence(s: EPSequence) -> tuple:
    """Integer polynomial vanishing exactly where value(s, q) = 1 (q > 1).

    P(q) = q^p (q^r - 1) - (q^r - 1) U(q) - W(q) with U, W the preperiod
    and period digit polynomials.
    """
    if not any(s.preperiod) and not any(s.period):
        raise ValueError("all-zero sequence has no defining polynomial")
    p, r = len(s.preperiod), len(s.period)
    u = pl.poly(reversed(s.preperiod))          # U(q) = sum u_i q^{p-i}
    w = pl.poly(reversed(s.period))             # W(q) = sum w_i q^{r-i}
    lead = pl.sub(pl.shift_up((1,), p + r), pl.shift_up((1,), p))
    mid = pl.sub(pl.shift_up(u, r), u)
    return pl.sub(pl.sub(lead, mid), w)


def solve_base(s: EPSequence) -> AlgebraicReal:
    """The unique q > 1 with value(s, q) = 1, as a certified algebraic real."""
    if s.digit_sum < 2:
        raise NoBaseError("digit sum < 2: no base q > 1 exists")
    p = poly_from_sequence(s)
    m = s.max_digit
    hi = Fraction(m + 1)
    if value(s, hi) == 1:
        hi = Fraction(m + 2)
    lo = None
    t = 1
    while lo is None:
        cand = 1 + Fraction(1, 2 ** t)
        if cand < hi:
            v = value(s, cand)
            if v > 1:
                lo = cand
            elif v == 1:
                # the probe hit the root exactly; step closer to 1
                pass
        t += 1
        if t > 64 and lo is None:
            raise NoBaseError("no bracket found left of the root")
    a = AlgebraicReal(p, lo, hi)
    a.validate()
    return refine(a, Fraction(1, 2))


# --- expansion digit machinery ---------------------------------------------


def _digit_cap(q) -> int:
    if isinstance(q, AlgebraicReal):
        n, is_int = floor_of(q)
        return n
    return int(Fraction(q))


def _greedy_rational(q: Fraction, n: int):
    r = Fraction(1)
    digits = []
    for _ in range(n):
        x = q * r
        g = x.numerator // x.denominator
        digits.append(g)
        r = x - g
    return digits


def _quasi_rational(q: Fraction, n: int):
    r = Fraction(1)
    digits = []
    for _ in range(n):
        x = q * r
        if x.denominator == 1:
            a = x.numerator - 1
        else:
            a = x.numerator // x.denominator
        digits.append(a)
        r = x - a
    return digits


class _Residual:
    """Residual q^n (1 - sum_{i<=n} c_i q^{-i}) as a polynomial in q reduced
    modulo the defining polynomial of an algebraic base."""

    def __init__(self, a: AlgebraicReal):
        self.base = a
        self.f = a.poly
        d = pl.degree(a.poly)
        self.r = [Fraction(0)] * d
        if d >= 1:
            self.r[0] = Fraction(1)
        self.is_zero = False

    def times_q(self) -> list:
        shifted = [Fraction(0)] + self.r
        return reduce_mod(shifted, self.f)

    def sign_minus(self, coeffs: list, t: int) -> int:
        c = list(coeffs)
        c[0] -= t
        if all(x == 0 for x in c):
            return 0
        return sign_of_fraction_poly(c, self.base)


def _expand_algebraic(a: AlgebraicReal, n: int, strict: bool):
    res = _Residual(a)
    cap = _digit_cap(a) + 1
    digits = []
    for _ in range(n):
        if res.is_zero:
            if strict:
                raise DomainError("residual vanished: expansion is finite")
            digits.append(0)
            continue
        x = res.times_q()
        d = 0
        while d <= cap:
            s = res.sign_minus(x, d + 1)
            if (s > 0) or (not strict and s == 0):
                d += 1
            else:
                break
        digits.append(d)
        res.r = list(x)
        res.r[0] -= d
        if all(c == 0 for c in res.r):
            res.is_zero = True
    return digits


def greedy_expansion(q, n: int) -> ExpansionPrefix:
    """First n digits of the greedy expansion of 1 in base q >= 1."""
    base = coerce_base(q)
    if isinstance(base, Fraction):
        if base < 1:
            raise DomainError("greedy expansion requires q >= 1")
        digits = _greedy_rational(base, n)
    else:
        if sign_of_fraction_poly([Fraction(-1), Fraction(1)], base) < 0:
            raise DomainError("greedy expansion requires q >= 1")
        digits = _expand_algebraic(base, n, strict=False)
    return ExpansionPrefix(word(digits), n, True)


def quasi_greedy_expansion(q, n: int) -> ExpansionPrefix:
    """First n digits of the quasi-greedy expansion of 1; needs q > 1."""
    base = coerce_base(q)
    if isinstance(base, Fraction):
        if base <= 1:
            raise DomainError("quasi-greedy expansion requires q > 1")
        digits = _quasi_rational(base, n)
    else:
        if sign_of_fraction_poly([Fraction(-1), Fraction(1)], base) <= 0:
            raise DomainError("quasi-greedy expansion requires q > 1")
        digits = _expand_algebraic(base, n, strict=True)
    return ExpansionPrefix(word(digits), n, True)


def quasi_from_greedy(g) -> EPSequence:
    """Periodic quasi-greedy expansion sharing the base of the finite greedy
    word g: (g_1 ... g_{m-1} (g_m - 1))^infinity."""
    from .characterization import check_greedy_admissible

    g = word(g)
    if not g or g[-1] < 1:
        raise ValueError("greedy word must end in a nonzero digit")
    as_seq = ep_sequence(g, (0,))
    ok, witness = check_greedy_admissible(as_seq)
    if not ok:
        raise ValueError("word is not a valid finite greedy expansion "
                         "(fails the shift condition at j=%d)" % witness.j)
    per = g[:-1] + (g[-1] - 1,)
    if not any(per):
        raise NoBaseError("resulting base would be q = 1")
    return ep_sequence((), per)


# --- Thue-Morse / Komornik-Loreti -------------------------------------------


def thue_morse_prefix(n: int) -> tuple:
    """First n terms of the truncated Thue-Morse sequence (1-based), built
    by the doubling recursion t_{2^N} = 1, t_{2^N + i} = 1 - t_i."""
    if n < 1:
        raise ValueError("n must be >= 1")
    t = [1]
    while len(t) < n:
        t = t + [1] + [1 - x for x in t]
    return tuple(t[:n])


def _kl_side(q: Fraction, tau: list, state: dict) -> int:
    """+1 when the Thue-Morse value at q exceeds 1, -1 when it falls short.
    The prefix length grows until the geometric tail bound is decisive."""
    while True:
        n = len(tau)
        x = 1 / q
        s = Fraction(0)
        for d in reversed(tau):
            s = (s + d) * x
        if s > 1:
            return 1
        if s + x ** n / (q - 1) < 1:
            return -1
        tau.extend(thue_morse_prefix(2 * n)[n:])
        state["max_prefix"] = max(state["max_prefix"], len(tau))


def kl_constant(eps, max_iter: int = 10_000) -> tuple:
    """Rational enclosure of the smallest univoque base (~1.787).

    Bisection of q -> sum tau_i q^{-i} with rigorous tail bounds.  Returns
    (lo, hi, prefix_length_used) with hi - lo <= eps.
    """
    eps = Fraction(eps)
    if eps <= 0:
        raise DomainError("eps must be positive")
    lo, hi = Fraction(3, 2), Fraction(2)
    tau = list(thue_morse_prefix(32))
    state = {"max_prefix": len(tau)}
    it = 0
    while hi - lo > eps:
        it += 1
        if it > max_iter:
            raise RuntimeError("iteration cap exceeded")
        mid = (lo + hi) / 2
        if _kl_side(mid, tau, state) > 0:
            lo = mid
        else:
            hi = mid
    return lo, hi, max(state["max_prefix"], len(tau))
