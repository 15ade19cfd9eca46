"""Bulk conformance checks over enumeration prefixes.

Each check scans a prefix (or a height-bounded set of fractions) and stops
at the first counterexample.  Used by ``rational-trees verify`` and by the
test suite for the large-range properties.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import islice
from math import gcd
from typing import Callable

from .exact import ONE, floor_of, padic_valuation
from .rank import classify, rank, rank_with_steps
from .sequences import GeneratorMethod, in_interval, interval_for_index, iterate, nth_term
from .trees import TreeKind, children, is_valid_node, node_at_index, parent_index, walk


@dataclass
class CheckResult:
    name: str
    passed: bool
    checked: int
    counterexample: str | None = None

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        text = f"[{status}] {self.name} ({self.checked} checked)"
        if self.counterexample:
            text += f": first counterexample {self.counterexample}"
        return text


def reduced_fractions(height: int):
    """Every reduced positive a/b with a + b <= height."""
    for m in range(2, height + 1):
        for a in range(1, m):
            if gcd(a, m - a) == 1:
                yield Fraction(a, m - a)


def check_cross_method(kind: TreeKind, count: int) -> CheckResult:
    streams = [iterate(kind, m) for m in GeneratorMethod]
    checked = 0
    for rows in islice(zip(*streams), count + 1):
        n = rows[0][0]
        values = [q for _, q in rows]
        values.append(nth_term(kind, n))
        if any(v != values[0] for v in values):
            return CheckResult("cross-method equality", False, checked, f"n={n}: {values}")
        checked += 1
    return CheckResult("cross-method equality", True, checked)


def check_node_invariants(kind: TreeKind, count: int) -> CheckResult:
    p = kind.prime
    for n, node in enumerate(islice(walk(kind), count), 1):
        if not is_valid_node(kind, node):
            return CheckResult("node invariants", False, n - 1, f"n={n}: {node}")
        expected_c = 0 if kind is TreeKind.BINARY else padic_valuation(n, p)
        if node.c != expected_c:
            return CheckResult("node invariants", False, n - 1, f"n={n}: c={node.c}, v_p={expected_c}")
    return CheckResult("node invariants", True, count)


def check_floor_identity(kind: TreeKind, count: int) -> CheckResult:
    p = kind.prime
    prev = None
    for n, q in islice(iterate(kind), count + 1):
        if prev is not None and floor_of(prev) != padic_valuation(n, p):
            return CheckResult("floor identity", False, n - 1, f"n={n}: floor(u_{n-1})={floor_of(prev)}")
        prev = q
    return CheckResult("floor identity", True, count)


def check_shift_identity(kind: TreeKind, count: int) -> CheckResult:
    """u_{bk-1} = 1 + u_{k-1} for every bk - 1 <= count."""
    b = kind.branching
    ks = range(1, (count + 1) // b + 1)
    for k in ks:
        if nth_term(kind, b * k - 1) != ONE + nth_term(kind, k - 1):
            return CheckResult("shift identity", False, k - 1, f"k={k}")
    return CheckResult("shift identity", True, len(ks))


def check_intervals(kind: TreeKind, count: int) -> CheckResult:
    b = kind.branching
    for n, q in islice(iterate(kind), count + 1):
        if not in_interval(q, interval_for_index(kind, n)):
            return CheckResult("interval classification", False, n, f"n={n}: u_n={q}")
        if n > 0:
            case = classify(kind, q)
            ok = case.base == n if case.base is not None else (n - 1 - case.position) % b == 0
            if not ok:
                return CheckResult("interval classification", False, n, f"n={n}: classify={case}")
    return CheckResult("interval classification", True, count + 1)


def check_injective(kind: TreeKind, count: int) -> CheckResult:
    seen = {}
    for n, q in islice(iterate(kind), count + 1):
        key = (q.numerator, q.denominator)
        if key in seen:
            return CheckResult("injectivity", False, n, f"u_{seen[key]} = u_{n} = {q}")
        seen[key] = n
    return CheckResult("injectivity", True, count + 1)


def check_rank_of_terms(kind: TreeKind, count: int) -> CheckResult:
    for n, q in islice(iterate(kind), count + 1):
        r = rank(kind, q)
        if r != n:
            return CheckResult("rank(u_n) = n", False, n, f"n={n}: rank({q})={r}")
    return CheckResult("rank(u_n) = n", True, count + 1)


def check_terms_of_rank(kind: TreeKind, height: int) -> CheckResult:
    checked = 0
    for q in reduced_fractions(height):
        n, steps = rank_with_steps(kind, q)
        if nth_term(kind, n) != q:
            return CheckResult("u_rank(q) = q", False, checked, f"q={q}: n={n}")
        if steps > q.numerator + q.denominator - 2:
            return CheckResult("u_rank(q) = q", False, checked, f"q={q}: {steps} descent steps")
        checked += 1
    return CheckResult("u_rank(q) = q", True, checked)


def check_parent_child(kind: TreeKind, count: int) -> CheckResult:
    for n in range(2, count + 1):
        m, pos = parent_index(kind, n)
        if children(kind, node_at_index(kind, m))[pos - 1] != node_at_index(kind, n):
            return CheckResult("parent/child consistency", False, n - 2, f"n={n}")
    return CheckResult("parent/child consistency", True, max(count - 1, 0))


def check_denominator_chain(kind: TreeKind, count: int) -> CheckResult:
    prev = None
    for n, q in islice(iterate(kind), 1, count + 2):
        if prev is not None and prev.denominator != q.numerator:
            return CheckResult("denominator chain", False, n - 2, f"n={n - 1}")
        prev = q
    return CheckResult("denominator chain", True, count)


def run_all(kind: TreeKind, count: int, height: int) -> list[CheckResult]:
    checks: list[Callable[[], CheckResult]] = [
        lambda: check_cross_method(kind, count),
        lambda: check_node_invariants(kind, count),
        lambda: check_parent_child(kind, count),
        lambda: check_floor_identity(kind, count),
        lambda: check_shift_identity(kind, count),
        lambda: check_intervals(kind, count),
        lambda: check_injective(kind, count),
        lambda: check_rank_of_terms(kind, count),
        lambda: check_terms_of_rank(kind, height),
    ]
    if kind is TreeKind.BINARY:
        checks.append(lambda: check_denominator_chain(kind, count))
    return [check() for check in checks]
