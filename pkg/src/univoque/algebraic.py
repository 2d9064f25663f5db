"""Algebraic real numbers as (integer polynomial, isolating interval) pairs.

The polynomial need not be irreducible; the interval must contain exactly
one distinct real root, certified by a Sturm count.  All decisions are
exact: bisection midpoints are rationals and sign tests never touch
floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import polynomials as pl


class DomainError(ValueError):
    """Input outside the mathematical domain of an operation."""


class EndpointRootError(ValueError):
    """An interval endpoint is a root of the tested polynomial.

    Perturb the endpoints (e.g. shrink the interval slightly) and retry.
    """


def _sign(v) -> int:
    return (v > 0) - (v < 0)


def sturm_count(p: tuple, lo: Fraction, hi: Fraction) -> int:
    """Number of distinct real roots of p in the open interval (lo, hi)."""
    if pl.is_zero(p):
        raise ValueError("zero polynomial has no isolated roots")
    if lo >= hi:
        raise ValueError("need lo < hi")
    if pl.evaluate(p, lo) == 0 or pl.evaluate(p, hi) == 0:
        raise EndpointRootError(
            "interval endpoint is a root; perturb the endpoints")
    chain = pl.sturm_chain(p)
    return pl.sign_variations(chain, lo) - pl.sign_variations(chain, hi)


@dataclass(frozen=True)
class AlgebraicReal:
    """A real root of an integer polynomial, pinned by an isolating interval."""

    poly: tuple
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lo", Fraction(self.lo))
        object.__setattr__(self, "hi", Fraction(self.hi))

    @property
    def interval(self) -> tuple:
        return (self.lo, self.hi)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def midpoint_float(self) -> float:
        return float((self.lo + self.hi) / 2)

    def validate(self) -> None:
        if sturm_count(self.poly, self.lo, self.hi) != 1:
            raise ValueError("interval does not isolate exactly one root")


def algebraic_real(poly_coeffs, lo, hi, validate: bool = True) -> AlgebraicReal:
    a = AlgebraicReal(pl.poly(poly_coeffs), Fraction(lo), Fraction(hi))
    if validate:
        a.validate()
    return a


def from_rational(x) -> AlgebraicReal:
    """Represent an exact rational as the root of a linear polynomial."""
    x = Fraction(x)
    p = pl.poly([-x.numerator, x.denominator])
    return AlgebraicReal(p, x - Fraction(1, 2), x + Fraction(1, 2))


def _bisect_once(a: AlgebraicReal) -> AlgebraicReal:
    """One bisection step.  The root of the squarefree part is simple, so it
    carries a sign change; the half without a sign change is discarded."""
    sf = pl.squarefree_part(a.poly)
    mid = (a.lo + a.hi) / 2
    smid = _sign(pl.evaluate(sf, mid))
    if smid == 0:
        # the midpoint IS the root; keep a thin interval around it
        delta = (a.hi - a.lo) / 8
        return AlgebraicReal(a.poly, mid - delta, mid + delta)
    if _sign(pl.evaluate(sf, a.lo)) != smid:
        return AlgebraicReal(a.poly, a.lo, mid)
    return AlgebraicReal(a.poly, mid, a.hi)


def refine(a: AlgebraicReal, eps) -> AlgebraicReal:
    """Shrink the isolating interval to width <= eps; same root, new value."""
    eps = Fraction(eps)
    if eps <= 0:
        raise DomainError("eps must be positive")
    while a.hi - a.lo > eps:
        a = _bisect_once(a)
    return a


def sign_at(c, a: AlgebraicReal) -> int:
    """Exact sign of the integer polynomial c at the root represented by a.

    Zero is recognized via gcd(a.poly, c); otherwise the interval is
    refined until c keeps a constant sign over it.
    """
    c = pl.poly(c)
    if pl.is_zero(c):
        return 0
    if pl.degree(c) == 0:
        return _sign(c[0])
    g = pl.poly_gcd(a.poly, c)
    if pl.degree(g) >= 1 and sturm_count(g, a.lo, a.hi) >= 1:
        return 0
    cur = a
    while True:
        vlo = pl.evaluate(c, cur.lo)
        vhi = pl.evaluate(c, cur.hi)
        if vlo != 0 and vhi != 0:
            if sturm_count(c, cur.lo, cur.hi) == 0:
                return _sign(vlo)
            cur = _bisect_once(cur)
            continue
        # an endpoint landed on a root of c: nudge it inward by a quarter
        # width, falling back to plain bisection if that loses the root
        w = cur.hi - cur.lo
        if vlo == 0:
            cand = AlgebraicReal(cur.poly, cur.lo + w / 4, cur.hi)
        else:
            cand = AlgebraicReal(cur.poly, cur.lo, cur.hi - w / 4)
        sf = pl.squarefree_part(cur.poly)
        if (pl.evaluate(sf, cand.lo) != 0 and pl.evaluate(sf, cand.hi) != 0
                and _sign(pl.evaluate(sf, cand.lo)) !=
                _sign(pl.evaluate(sf, cand.hi))):
            cur = cand
        else:
            cur = _bisect_once(cur)


def sign_of_fraction_poly(coeffs, a: AlgebraicReal) -> int:
    """sign_at for a polynomial with Fraction coefficients."""
    cleaned = pl.make_primitive(coeffs)
    return sign_at(cleaned, a)


def reduce_mod(coeffs, f: tuple) -> list:
    """Reduce a Fraction-coefficient polynomial modulo the integer poly f.

    Returns a list of Fractions of length deg(f) (degree < deg f)."""
    d = pl.degree(f)
    r = [Fraction(c) for c in coeffs]
    lead = Fraction(f[-1])
    while len(r) > d:
        top = r.pop()
        if top == 0:
            continue
        q = top / lead
        shift = len(r) - d
        for i in range(d):
            r[shift + i] -= q * f[i]
    while len(r) < d:
        r.append(Fraction(0))
    return r


def floor_of(a: AlgebraicReal) -> tuple:
    """Integer part of a value >= 1, plus a flag for exact integrality."""
    if sign_at(pl.poly([-1, 1]), a) < 0:
        raise DomainError("floor_of requires a value >= 1")
    cur = a
    while cur.hi - cur.lo >= 1:
        cur = _bisect_once(cur)
    nlo = cur.lo.numerator // cur.lo.denominator
    nhi = cur.hi.numerator // cur.hi.denominator
    if nlo == nhi:
        # the interval might still straddle-touch nhi exactly at an endpoint;
        # the only integer the root could equal is in [nlo, nlo+1)
        t = nlo
        s = sign_at(pl.poly([-t, 1]), cur)
        if s == 0:
            return t, True
        return t, False
    # exactly one integer candidate t = nhi lies inside (lo, hi)
    t = nhi
    s = sign_at(pl.poly([-t, 1]), cur)
    if s == 0:
        return t, True
    if s > 0:
        return t, False
    return t - 1, False
