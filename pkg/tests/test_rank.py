from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from rational_trees.rank import Case, classify, rank, rank_with_steps
from rational_trees.sequences import nth_term, terms
from rational_trees.trees import TreeKind
from rational_trees.verify import reduced_fractions

B, T, Q = TreeKind.BINARY, TreeKind.TERNARY, TreeKind.QUINARY


@pytest.mark.parametrize("kind, q, expected", [
    (T, F(1, 4), Case(position=2)),
    (T, F(1, 2), Case(base=1)),
    (T, F(1), Case(base=2)),
    (T, F(3, 4), Case(position=3)),
    (T, F(5, 2), Case(position=1)),
    (Q, F(1), Case(base=4)),
    (Q, F(1, 3), Case(base=1)),
    (Q, F(1, 2), Case(base=2)),
    (Q, F(2, 3), Case(base=3)),
    (Q, F(4, 3), Case(position=3)),
    (Q, F(1, 5), Case(position=4)),
    (Q, F(2, 5), Case(position=5)),
    (Q, F(3, 5), Case(position=1)),
    (Q, F(4, 5), Case(position=2)),
    (B, F(1), Case(base=1)),
    (B, F(2, 5), Case(position=1)),
    (B, F(5, 2), Case(position=2)),
])
def test_classify(kind, q, expected):
    assert classify(kind, q) == expected


@pytest.mark.parametrize("kind, q, expected", [
    (T, "7/10", 13),
    (T, 2, 8),
    (Q, "2/5", 6),
    (B, "2/5", 12),
    (Q, "1/1", 4),
    (B, 1, 1),
    (T, 0, 0),
    (Q, "4/5", 18),
    (Q, "3/8", 26),
    (T, "4/6", 4),  # reduced before ranking
])
def test_rank_examples(kind, q, expected):
    assert rank(kind, q) == expected


def test_rank_rejects_negative():
    with pytest.raises(ValueError):
        rank(T, F(-1, 2))


@pytest.mark.parametrize("kind", list(TreeKind))
def test_rank_agrees_with_brute_force_lookup(kind):
    # brute force: position of first occurrence in a long prefix
    prefix = terms(kind, 30000)
    lookup = {}
    for n, q in enumerate(prefix):
        lookup.setdefault(q, n)
    hits = 0
    for q in reduced_fractions(25):
        if q in lookup:
            assert rank(kind, q) == lookup[q]
            hits += 1
        else:
            assert rank(kind, q) >= len(prefix)
    assert hits > 100


@pytest.mark.parametrize("kind", list(TreeKind))
def test_round_trip_from_index(kind):
    for n in range(3000):
        assert rank(kind, nth_term(kind, n)) == n


@pytest.mark.parametrize("kind", list(TreeKind))
def test_round_trip_from_fraction(kind):
    for q in reduced_fractions(40):
        assert nth_term(kind, rank(kind, q)) == q


@pytest.mark.parametrize("kind", list(TreeKind))
def test_classification_matches_residue(kind):
    b = kind.branching
    for n in range(1, 3000):
        case = classify(kind, nth_term(kind, n))
        if case.base is not None:
            assert case.base == n
        else:
            assert (n - 1 - case.position) % b == 0


@pytest.mark.parametrize("kind", list(TreeKind))
def test_descent_strictly_reduces_height(kind):
    for q in reduced_fractions(60):
        _, steps = rank_with_steps(kind, q)
        assert steps <= q.numerator + q.denominator - 2


def test_descent_is_not_logarithmic_on_integer_spines():
    # integers sit on a single spine: n/1 needs n - 1 recoveries in the binary tree
    n, steps = rank_with_steps(B, 99)
    assert steps == 98 and n == 2**99 - 1
    _, steps = rank_with_steps(T, 99)
    assert steps > 4 * (100).bit_length() + 8


@settings(max_examples=300, deadline=None)
@given(st.integers(1, 10**4), st.integers(1, 10**4), st.sampled_from(list(TreeKind)))
def test_round_trip_random_fractions(a, b, kind):
    q = F(a, b)
    assert nth_term(kind, rank(kind, q)) == q


def test_deep_rank_is_iterative():
    # 5000 recoveries; a recursive implementation would overflow the default stack
    _, steps = rank_with_steps(T, 5001)
    assert steps == 5000
