"""Lexicographic admissibility and univoqueness checks.

A sequence is the greedy expansion of some base iff every shifted tail is
strictly below the sequence itself (condition 21).  Univoqueness adds the
same strict bound for complemented tails (22).  The closure of the
univoque set relaxes 21 to non-strict (23) while keeping the complement
condition strict (24).  All quantifiers over shifts reduce to the finite
set of distinct shifts of the canonical eventually periodic form.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .words import (EPSequence, LT, EQ, GT, complement, complement_word,
                    lex_compare, lex_compare_word, shift, format_sequence)

# stable numeric codes for the shift conditions, reported in witnesses
SHIFT_STRICT = 21          # shifted tail <  sequence   (greedy / univoque)
COMPL_STRICT_GREEDY = 22   # complemented tail < sequence (univoque)
SHIFT_WEAK = 23            # shifted tail <= sequence   (closure)
COMPL_STRICT_QUASI = 24    # complemented tail < sequence (closure)
BLOCK_COMPL = 25           # finite-block form used by the m-search
DOUBLING_BLOCK = 26        # complement of prefix < following block


class SearchCapExceeded(RuntimeError):
    """An existence-guaranteed search ran past its engineering cap."""


@dataclass(frozen=True)
class ConditionWitness:
    condition: int
    j: int
    left: str
    right: str
    relation: str

    def as_dict(self) -> dict:
        return {"condition": self.condition, "j": self.j,
                "left": self.left, "right": self.right,
                "relation": self.relation}


@dataclass(frozen=True)
class UnivoqueCertificate:
    verdict: str                       # univoque | closure_only | inadmissible
    witnesses: tuple = field(default_factory=tuple)
    shifts_checked: int = 0

    @property
    def is_univoque(self) -> bool:
        return self.verdict == "univoque"

    @property
    def in_closure(self) -> bool:
        return self.verdict in ("univoque", "closure_only")

    def as_dict(self) -> dict:
        return {"verdict": self.verdict,
                "shifts_checked": self.shifts_checked,
                "witnesses": [w.as_dict() for w in self.witnesses]}


def _rel(cmp: int) -> str:
    return {LT: "<", EQ: "=", GT: ">"}[cmp]


def classify(s: EPSequence) -> UnivoqueCertificate:
    """Evaluate all four shift conditions on the distinct shifts of s."""
    b = s.digit(1)
    n_shifts = len(s.preperiod) + len(s.period)
    if s.max_digit > b:
        w = ConditionWitness(COMPL_STRICT_GREEDY, 0, format_sequence(s),
                             str(b), "digit exceeds first digit")
        return UnivoqueCertificate("inadmissible", (w,), 0)

    witnesses = []
    ok21 = ok22 = ok23 = ok24 = True
    for j in range(1, n_shifts + 1):
        t = shift(s, j)
        c_shift = lex_compare(t, s)
        if c_shift != LT and ok21:
            ok21 = False
            witnesses.append(ConditionWitness(
                SHIFT_STRICT, j, format_sequence(t), format_sequence(s),
                _rel(c_shift)))
        if c_shift == GT and ok23:
            ok23 = False
            witnesses.append(ConditionWitness(
                SHIFT_WEAK, j, format_sequence(t), format_sequence(s),
                _rel(c_shift)))
        ct = complement(t, b)
        c_compl = lex_compare(ct, s)
        if c_compl != LT:
            if ok22:
                ok22 = False
                witnesses.append(ConditionWitness(
                    COMPL_STRICT_GREEDY, j, format_sequence(ct),
                    format_sequence(s), _rel(c_compl)))
            if ok24:
                ok24 = False
                witnesses.append(ConditionWitness(
                    COMPL_STRICT_QUASI, j, format_sequence(ct),
                    format_sequence(s), _rel(c_compl)))

    if ok21 and ok22:
        verdict = "univoque"
    elif ok23 and ok24:
        verdict = "closure_only"
    else:
        verdict = "inadmissible"
    return UnivoqueCertificate(verdict, tuple(witnesses), n_shifts)


def check_greedy_admissible(s: EPSequence):
    """Is s the greedy expansion of 1 for some base (Parry's condition)?

    Returns (bool, witness-or-None); the witness records the smallest
    failing shift index."""
    n_shifts = len(s.preperiod) + len(s.period)
    for j in range(1, n_shifts + 1):
        t = shift(s, j)
        c = lex_compare(t, s)
        if c != LT:
            return False, ConditionWitness(SHIFT_STRICT, j,
                                           format_sequence(t),
                                           format_sequence(s), _rel(c))
    return True, None


def check_univoque(s: EPSequence) -> UnivoqueCertificate:
    """Certificate for membership of the base of s in the univoque set."""
    return classify(s)


def check_closure(s: EPSequence) -> UnivoqueCertificate:
    """Certificate for membership of the base of s in the closure of the
    univoque set (s read as a quasi-greedy expansion)."""
    return classify(s)


def check_quasi_greedy_admissible(s: EPSequence) -> bool:
    """Is s the quasi-greedy expansion of 1 for some q > 1?  Requires
    infinitely many nonzero digits plus the non-strict shift condition."""
    if s.is_finite():
        return False
    n_shifts = len(s.preperiod) + len(s.period)
    for j in range(1, n_shifts + 1):
        if lex_compare(shift(s, j), s) == GT:
            return False
    return True


def find_m(s: EPSequence, k: int, cap: int | None = None) -> int:
    """Smallest m in [k, cap] such that for every 0 <= j < m the
    complemented block of digits j+1..m is strictly below the leading block
    of the same length."""
    cert = classify(s)
    if not cert.in_closure:
        raise ValueError("sequence is not closure-admissible")
    if k < 1:
        raise ValueError("k must be >= 1")
    if cap is None:
        cap = 50 * (len(s.preperiod) + len(s.period))
    if cap < k:
        raise ValueError("cap must be >= k")
    b = s.digit(1)
    for m in range(k, cap + 1):
        prefix = s.prefix(m)
        if all(lex_compare_word(complement_word(prefix[j:], b),
                                prefix[:m - j]) == LT
               for j in range(m)):
            return m
    raise SearchCapExceeded("no valid m found up to cap %d" % cap)


def verify_lemma_26(s: EPSequence, m_max: int):
    """Check, for m = 1..m_max, that the complemented length-m prefix is
    strictly below the next block of m digits.  Returns (bool, first
    failing m or None)."""
    b = s.digit(1)
    head = s.prefix(2 * m_max)
    for m in range(1, m_max + 1):
        if lex_compare_word(complement_word(head[:m], b),
                            head[m:2 * m]) != LT:
            return False, m
    return True, None
