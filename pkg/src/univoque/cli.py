"""Command-line interface.

All numeric output is exact (rationals as "num/den", intervals as string
pairs); decimal renderings are attached for readability only.  Exit codes:
0 success / check passed, 1 semantic failure (check failed, not unique),
2 usage, parse or domain errors.
"""

from __future__ import annotations

import json
import os
import re
import sys
from fractions import Fraction

import click

from . import approximator, characterization, expansions, oracle
from .algebraic import DomainError, algebraic_real
from .words import EPSequence, ParseError, format_sequence, format_word, \
    parse_sequence


def _max_work(default: int) -> int:
    raw = os.environ.get("UVQ_MAX_WORK")
    if raw is None:
        return default
    try:
        return min(default, int(raw)) if int(raw) > 0 else default
    except ValueError:
        return default


def _fail(msg: str, code: int):
    click.echo("error: %s" % msg, err=True)
    sys.exit(code)


def _frac(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise ParseError("invalid rational: %r" % text)


_POLY_RE = re.compile(
    r"^poly:\s*(-?\d+(?:\s*,\s*-?\d+)*)\s+in\s+\(\s*([^,\s]+)\s*,\s*([^)\s]+)\s*\)$")


def parse_base(text: str):
    """Base grammar: a rational/decimal literal, "poly:c0,c1,... in (lo,hi)"
    with constant-first coefficients, or "seq:<sequence>"."""
    text = text.strip()
    if text.startswith("seq:"):
        s = parse_sequence(text[4:])
        if not isinstance(s, EPSequence):
            raise ParseError("sequence base needs an explicit period, "
                             "e.g. seq:1101(0)")
        return s
    m = _POLY_RE.match(text)
    if m:
        coeffs = [int(t) for t in m.group(1).split(",")]
        lo, hi = _frac(m.group(2)), _frac(m.group(3))
        try:
            return algebraic_real(coeffs, lo, hi)
        except Exception as exc:
            raise ParseError("invalid polynomial root: %s" % exc)
    if text.startswith("poly:"):
        raise ParseError("polynomial base must look like "
                         "'poly:1,-1,-1 in (1,2)'")
    return _frac(text)


def _fmt_frac(x: Fraction) -> str:
    return "%d/%d" % (x.numerator, x.denominator)


def _emit(payload: dict, as_json: bool):
    if as_json:
        click.echo(json.dumps(payload, sort_keys=True))
        return
    for key, val in payload.items():
        if key == "command":
            continue
        click.echo("%s: %s" % (key, _plain(val)))


def _plain(val):
    if isinstance(val, (list, tuple)):
        return "[" + ", ".join(str(_plain(v)) for v in val) + "]"
    if isinstance(val, dict):
        return json.dumps(val, sort_keys=True)
    return val


@click.group()
def main():
    """Exact toolkit for expansions of 1 in real bases q > 1."""


@main.command()
@click.argument("base")
@click.option("--mode", type=click.Choice(["greedy", "quasi"]),
              default="greedy", show_default=True)
@click.option("--depth", type=int, default=20, show_default=True)
@click.option("--json", "as_json", is_flag=True)
def expand(base, mode, depth, as_json):
    """Greedy or quasi-greedy digit prefix of the expansion of 1."""
    try:
        b = parse_base(base)
        fn = (expansions.greedy_expansion if mode == "greedy"
              else expansions.quasi_greedy_expansion)
        prefix = fn(b, depth)
    except (ParseError, DomainError, expansions.NoBaseError,
            ValueError) as exc:
        _fail(str(exc), 2)
    _emit({"command": "expand", "base": base, "mode": mode, "depth": depth,
           "digits": format_word(prefix.digits), "exact": prefix.exact},
          as_json)


@main.command()
@click.argument("seq")
@click.option("--which",
              type=click.Choice(["univoque", "closure", "greedy", "quasi"]),
              required=True)
@click.option("--json", "as_json", is_flag=True)
def check(seq, which, as_json):
    """Lexicographic admissibility / univoqueness checks on a sequence."""
    try:
        s = parse_sequence(seq)
        if not isinstance(s, EPSequence):
            raise ParseError("an infinite sequence is required; add an "
                             "explicit period, e.g. '111(0)'")
    except ParseError as exc:
        _fail(str(exc), 2)
    payload = {"command": "check", "sequence": format_sequence(s),
               "which": which}
    if which == "univoque":
        cert = characterization.check_univoque(s)
        ok = cert.is_univoque
        payload.update(cert.as_dict())
    elif which == "closure":
        cert = characterization.check_closure(s)
        ok = cert.in_closure
        payload.update(cert.as_dict())
    elif which == "greedy":
        ok, witness = characterization.check_greedy_admissible(s)
        payload["witnesses"] = [] if ok else [witness.as_dict()]
    else:
        ok = characterization.check_quasi_greedy_admissible(s)
    payload["pass"] = bool(ok)
    _emit(payload, as_json)
    sys.exit(0 if ok else 1)


@main.command()
@click.argument("alpha")
@click.option("--from", "n_from", type=int, default=None,
              help="first N (default: the minimal legal N)")
@click.option("--to", "n_to", type=int, default=None,
              help="last N (default: same as --from)")
@click.option("--json", "as_json", is_flag=True)
def approximate(alpha, n_from, n_to, as_json):
    """Certified algebraic univoque approximants of the base whose
    quasi-greedy expansion is (ALPHA)^infinity."""
    try:
        from .words import parse_word
        alpha_w = parse_word(alpha)
    except ParseError as exc:
        _fail(str(exc), 2)
    try:
        if n_from is None:
            s, k, _ = approximator._target_sequence(alpha_w)
            m = characterization.find_m(s, k)
            n_from = -(-m // k)
        if n_to is None:
            n_to = n_from
        records = approximator.approximate(alpha_w, n_from, n_to)
    except approximator.NTooSmallError as exc:
        _fail(str(exc), 2)
    except (approximator.NotInClosureError, ValueError) as exc:
        _fail(str(exc), 1)
    payload = {"command": "approximate", "alpha": alpha,
               "from": n_from, "to": n_to,
               "records": [r.as_dict() for r in records]}
    _emit(payload, as_json)


@main.command()
@click.option("--eps", default="1/1000", show_default=True,
              help="enclosure width, a rational or decimal string")
@click.option("--json", "as_json", is_flag=True)
def kl(eps, as_json):
    """Enclosure of the smallest univoque base (~1.787)."""
    try:
        e = _frac(eps)
        lo, hi, n_used = expansions.kl_constant(e)
    except (ParseError, DomainError) as exc:
        _fail(str(exc), 2)
    _emit({"command": "kl", "eps": eps,
           "interval": [_fmt_frac(lo), _fmt_frac(hi)],
           "decimal": [float(lo), float(hi)],
           "prefix_length": n_used}, as_json)


@main.command("oracle")
@click.argument("base")
@click.option("--depth", type=int, default=10, show_default=True)
@click.option("--counts", is_flag=True, help="report viable counts only")
@click.option("--json", "as_json", is_flag=True)
def oracle_cmd(base, depth, counts, as_json):
    """Enumerate all viable expansion prefixes of 1 (brute force)."""
    try:
        b = parse_base(base)
        cap = _max_work(100_000)
        tree = oracle.enumerate_expansions(b, depth, level_cap=cap,
                                           counts_only=counts)
    except (ParseError, DomainError, expansions.NoBaseError,
            ValueError) as exc:
        _fail(str(exc), 2)
    unique = tree.exhaustive and all(c == 1 for c in tree.counts)
    payload = {"command": "oracle", "base": base, "depth": depth,
               "counts": list(tree.counts), "exhaustive": tree.exhaustive,
               "unique_prefix": unique}
    if not counts:
        payload["levels"] = [[format_word(p) for p in lvl]
                             for lvl in tree.levels]
    _emit(payload, as_json)
    sys.exit(0 if unique else 1)


@main.command()
@click.argument("seq")
@click.option("--json", "as_json", is_flag=True)
def solve(seq, as_json):
    """Defining polynomial and isolating interval of the base whose value
    at the given sequence is 1."""
    try:
        s = parse_sequence(seq)
        if not isinstance(s, EPSequence):
            raise ParseError("an infinite sequence is required")
        a = expansions.solve_base(s)
    except (ParseError, expansions.NoBaseError, ValueError) as exc:
        _fail(str(exc), 2)
    _emit({"command": "solve", "sequence": format_sequence(s),
           "polynomial": list(a.poly),
           "interval": [_fmt_frac(a.lo), _fmt_frac(a.hi)],
           "decimal": [float(a.lo), float(a.hi)]}, as_json)


if __name__ == "__main__":
    main()
