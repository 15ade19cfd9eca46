"""The enumerations u_0 = 0, u_1, u_2, ... attached to each tree.

Three independent generators produce the same stream:

* ``TREE``      reads the tree in level order,
* ``VALUATION`` uses u_n = 1 / (k (1 + 2 v_p(n) - u_{n-1})),
* ``NEWMAN``    uses u_n = f(u_{n-1}) / k with f(x) = 1 / (1 + 2 floor(x) - x).

The recurrences run on integer pairs; each yielded term is a reduced Fraction.
"""

from __future__ import annotations

import enum
from fractions import Fraction
from typing import Iterator

from .exact import ZERO, padic_valuation
from .trees import TreeKind, node_at_index, walk


class GeneratorMethod(enum.Enum):
    TREE = "tree"
    VALUATION = "valuation"
    NEWMAN = "newman"

    @classmethod
    def parse(cls, name: str) -> "GeneratorMethod":
        try:
            return cls(name.strip().lower())
        except ValueError:
            choices = ", ".join(m.value for m in cls)
            raise ValueError(f"unknown method {name!r} (choose from {choices})") from None


def newman_f(x: Fraction) -> Fraction:
    if x < 0:
        raise ValueError("newman_f is defined here for x >= 0")
    a, b = x.numerator, x.denominator
    return Fraction(b, (1 + 2 * (a // b)) * b - a)


def next_term(kind: TreeKind, n: int, prev: Fraction) -> Fraction:
    """u_n from u_{n-1} using the p-adic valuation of ``n``."""
    v = padic_valuation(n, kind.prime)
    a, b = prev.numerator, prev.denominator
    return Fraction(b, kind.multiplier * ((1 + 2 * v) * b - a))


def nth_term(kind: TreeKind, n: int) -> Fraction:
    if n < 0:
        raise ValueError("sequence indices are nonnegative")
    if n == 0:
        return ZERO
    return node_at_index(kind, n).value


def iterate(kind: TreeKind, method: GeneratorMethod = GeneratorMethod.VALUATION,
            start: int = 0) -> Iterator[tuple[int, Fraction]]:
    """Endless stream of ``(n, u_n)`` beginning at index ``start``.

    A nonzero ``start`` seeds the stream from random access, so disjoint
    index ranges can be produced independently.
    """
    if start < 0:
        raise ValueError("sequence indices are nonnegative")
    if method is GeneratorMethod.TREE:
        return _tree_stream(kind, start)
    if method is GeneratorMethod.VALUATION:
        return _valuation_stream(kind, start)
    if method is GeneratorMethod.NEWMAN:
        return _newman_stream(kind, start)
    raise ValueError(f"unknown method {method!r}")


def terms(kind: TreeKind, count: int, method: GeneratorMethod = GeneratorMethod.VALUATION,
          start: int = 0) -> list[Fraction]:
    """``count`` consecutive terms from ``start``, as a list."""
    out = []
    if count <= 0:
        return out
    for _, q in iterate(kind, method, start):
        out.append(q)
        if len(out) == count:
            break
    return out


def _tree_stream(kind, start):
    n = start
    if n == 0:
        yield 0, ZERO
        n = 1
    for node in walk(kind, n):
        yield n, Fraction(node.a, node.b)
        n += 1


def _valuation_stream(kind, start):
    p, k = kind.prime, kind.multiplier
    n = start
    u = nth_term(kind, n)
    a, b = u.numerator, u.denominator
    yield n, u
    while True:
        n += 1
        # inlined padic_valuation; n >= 1 here
        v = 0
        m = n
        while m % p == 0:
            m //= p
            v += 1
        u = Fraction(b, k * ((1 + 2 * v) * b - a))
        a, b = u.numerator, u.denominator
        yield n, u


def _newman_stream(kind, start):
    k = kind.multiplier
    n = start
    u = nth_term(kind, n)
    a, b = u.numerator, u.denominator
    yield n, u
    while True:
        n += 1
        u = Fraction(b, k * ((1 + 2 * (a // b)) * b - a))
        a, b = u.numerator, u.denominator
        yield n, u


# half-open [low, high) per residue of n mod branching; None means +infinity
_INTERVALS = {
    TreeKind.BINARY: {0: (Fraction(0), Fraction(1)), 1: (Fraction(1), None)},
    TreeKind.TERNARY: {
        0: (Fraction(0), Fraction(1, 2)),
        1: (Fraction(1, 2), Fraction(1)),
        2: (Fraction(1), None),
    },
    TreeKind.QUINARY: {
        0: (Fraction(0), Fraction(1, 3)),
        1: (Fraction(1, 3), Fraction(1, 2)),
        2: (Fraction(1, 2), Fraction(2, 3)),
        3: (Fraction(2, 3), Fraction(1)),
        4: (Fraction(1), None),
    },
}


def interval_for_index(kind: TreeKind, n: int) -> tuple[Fraction, Fraction | None]:
    """Half-open interval ``[low, high)`` that must contain ``u_n``."""
    return _INTERVALS[kind][n % kind.branching]


def in_interval(q: Fraction, bounds: tuple[Fraction, Fraction | None]) -> bool:
    low, high = bounds
    return q >= low and (high is None or q < high)
