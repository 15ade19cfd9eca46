"""Exact nonnegative rationals and integer valuations.

Rationals are plain :class:`fractions.Fraction` values, which are immutable,
arbitrary precision and always stored in lowest terms.  The helpers here add
the nonnegativity contract and a few integer-pair shortcuts used on hot paths.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

Rational = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def make_rational(num: int, den: int) -> Fraction:
    """Return ``num/den`` reduced.  Both parts must be nonnegative."""
    if den == 0:
        raise ZeroDivisionError("zero denominator")
    if num < 0 or den < 0:
        raise ValueError(f"negative rationals are not supported: {num}/{den}")
    return Fraction(num, den)


def as_rational(q) -> Fraction:
    """Coerce an int, Fraction or ``"a/b"`` string to a nonnegative Fraction."""
    if isinstance(q, str):
        text = q.strip()
        if "/" in text:
            num, _, den = text.partition("/")
            q = make_rational(int(num), int(den))
        else:
            q = Fraction(int(text))
    elif isinstance(q, tuple):
        q = make_rational(*q)
    else:
        q = Fraction(q)
    if q < 0:
        raise ValueError(f"negative rationals are not supported: {q}")
    return q


def padic_valuation(n: int, p: int) -> int:
    """Largest ``e`` with ``p**e`` dividing ``n``."""
    if n <= 0:
        raise ValueError("valuation is defined only for n >= 1")
    if p < 2:
        raise ValueError("p must be >= 2")
    e = 0
    q, r = divmod(n, p)
    while r == 0:
        e += 1
        n = q
        q, r = divmod(n, p)
    return e


def floor_of(q: Fraction) -> int:
    return q.numerator // q.denominator


def is_reduced(a: int, b: int) -> bool:
    return gcd(a, b) == 1


def render(q: Fraction, machine: bool = False) -> str:
    """``num/den``; integers drop the ``/1`` unless ``machine`` is set."""
    if q.denominator == 1 and not machine:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"
