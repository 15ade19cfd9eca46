"""Inverse of the enumerations: the index at which a rational appears.

Each positive rational falls in exactly one half-open interval determined by
the residue of its index, which fixes the child position.  Inverting the
child-value map gives the value of an ancestor (the parent itself, or for the
"shifted" positions the vertex just before the parent, via u_{bk-1} = 1 + u_{k-1})
with a strictly smaller numerator + denominator.  Repeating until a base case
yields the index; the descent is iterative.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import NamedTuple

from .exact import as_rational
from .trees import TreeKind


class Case(NamedTuple):
    """Outcome of :func:`classify`: either a fixed ``base`` index or a child ``position``."""

    base: int | None = None
    position: int | None = None


# position -> (shifted, parent value (num, den) from (alpha, beta))
# shifted: the recovered value is u_{k-1} rather than u_k
_BINARY = {
    1: (False, lambda x, y: (x, y - x)),
    2: (False, lambda x, y: (x - y, y)),
}
_TERNARY = {
    1: (True, lambda x, y: (x - y, y)),
    2: (False, lambda x, y: (x, y - 2 * x)),
    3: (False, lambda x, y: (2 * x - y, 2 * y - 2 * x)),
}
_QUINARY = {
    1: (True, lambda x, y: (2 * x - y, 2 * y - 3 * x)),
    2: (True, lambda x, y: (3 * x - 2 * y, 3 * y - 3 * x)),
    3: (True, lambda x, y: (x - y, y)),
    4: (False, lambda x, y: (x, y - 3 * x)),
    5: (False, lambda x, y: (3 * x - y, 3 * y - 6 * x)),
}
_INVERSES = {TreeKind.BINARY: _BINARY, TreeKind.TERNARY: _TERNARY, TreeKind.QUINARY: _QUINARY}


def classify(kind: TreeKind, q: Fraction) -> Case:
    x, y = q.numerator, q.denominator
    if x <= 0:
        raise ValueError("classify expects a positive rational")
    if kind is TreeKind.BINARY:
        if x == y:
            return Case(base=1)
        return Case(position=1 if x < y else 2)
    if kind is TreeKind.TERNARY:
        if y == 2 * x:
            return Case(base=1)
        if x == y:
            return Case(base=2)
        if y > 2 * x:
            return Case(position=2)
        if x > y:
            return Case(position=1)
        return Case(position=3)
    # quinary
    if y == 3 * x:
        return Case(base=1)
    if y == 2 * x:
        return Case(base=2)
    if 2 * y == 3 * x:
        return Case(base=3)
    if x == y:
        return Case(base=4)
    if y > 3 * x:
        return Case(position=4)
    if x > y:
        return Case(position=3)
    if 2 * y < 6 * x < 3 * y:
        return Case(position=5)
    if 3 * y < 6 * x < 4 * y:
        return Case(position=1)
    return Case(position=2)


def rank_with_steps(kind: TreeKind, q) -> tuple[int, int]:
    """Return ``(n, steps)`` where ``steps`` counts ancestor recoveries."""
    q = as_rational(q)
    inverses = _INVERSES[kind]
    b = kind.branching
    trail = []
    x, y = q.numerator, q.denominator
    while True:
        if x == 0:
            n = 0
            break
        case = classify(kind, Fraction(x, y))
        if case.base is not None:
            n = case.base
            break
        shifted, inverse = inverses[case.position]
        trail.append((case.position, shifted))
        x, y = inverse(x, y)
        g = gcd(x, y)
        x, y = x // g, y // g
    steps = len(trail)
    for position, shifted in reversed(trail):
        k = n + 1 if shifted else n
        n = b * (k - 1) + 1 + position
    return n, steps


def rank(kind: TreeKind, q) -> int:
    """Unique index ``n`` with ``u_n == q``.  Accepts Fraction, int or ``"a/b"``."""
    return rank_with_steps(kind, q)[0]

