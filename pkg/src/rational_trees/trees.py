"""The binary (Calkin-Wilf), ternary and quinary labelled trees.

Every vertex carries a triple ``(a; b; c)`` whose value is ``a/b``.  Vertices
are numbered 1, 2, 3, ... in level order, so the children of vertex ``m`` are
``b*(m-1) + 1 + i`` for ordinals ``i = 1..b`` where ``b`` is the branching.
Random access walks that index arithmetic back to the root and then replays
the child rules down the recorded path, which costs O(log n) steps.
"""

from __future__ import annotations

import enum
from fractions import Fraction
from math import gcd
from typing import Iterator, NamedTuple


class TreeKind(enum.Enum):
    BINARY = (2, 1, 2)
    TERNARY = (3, 2, 3)
    QUINARY = (5, 3, 5)

    def __init__(self, branching: int, multiplier: int, prime: int):
        self.branching = branching
        self.multiplier = multiplier
        self.prime = prime

    @classmethod
    def parse(cls, name: str) -> "TreeKind":
        key = name.strip().lower()
        try:
            return _KIND_ALIASES[key]
        except KeyError:
            choices = ", ".join(sorted(_KIND_ALIASES))
            raise ValueError(f"unknown tree kind {name!r} (choose from {choices})") from None

    @property
    def label(self) -> str:
        return self.name.lower()


_KIND_ALIASES = {
    "binary": TreeKind.BINARY,
    "cw": TreeKind.BINARY,
    "ternary": TreeKind.TERNARY,
    "t3": TreeKind.TERNARY,
    "quinary": TreeKind.QUINARY,
    "q5": TreeKind.QUINARY,
}


class NodeTriple(NamedTuple):
    a: int
    b: int
    c: int

    @property
    def value(self) -> Fraction:
        # a, b are coprime on every reachable node; Fraction re-checks anyway.
        return Fraction(self.a, self.b)

    def __str__(self) -> str:
        return f"({self.a};{self.b};{self.c})"


_ROOTS = {
    TreeKind.BINARY: NodeTriple(1, 1, 0),
    TreeKind.TERNARY: NodeTriple(1, 2, 0),
    TreeKind.QUINARY: NodeTriple(1, 3, 0),
}


def root(kind: TreeKind) -> NodeTriple:
    return _ROOTS[kind]


def is_valid_node(kind: TreeKind, node: NodeTriple) -> bool:
    a, b, c = node
    if a < 1 or b < 1 or c < 0 or gcd(a, b) != 1:
        return False
    if kind is TreeKind.BINARY:
        return c == 0
    if kind is TreeKind.TERNARY:
        return 2 * a >= b - 4 * a * c
    return 3 * a >= b - 6 * a * c


def _binary_children(a, b, c):
    return [NodeTriple(a, a + b, 0), NodeTriple(a + b, b, 0)]


def _ternary_children(a, b, c):
    if b % 2:
        return [
            NodeTriple(4 * (c + 1) * a - b, 2 * a, 0),
            NodeTriple(a, 2 * a + b, c + 1),
            NodeTriple(2 * a + b, 2 * a + 2 * b, 0),
        ]
    h = b // 2
    return [
        NodeTriple(2 * (c + 1) * a - h, a, 0),
        NodeTriple(a, 2 * a + b, c + 1),
        NodeTriple(a + h, a + b, 0),
    ]


def _quinary_children(a, b, c):
    second = NodeTriple((6 * c + 5) * a - b, 6 * (c + 1) * a - b, 0)
    fourth = NodeTriple(a, 3 * a + b, c + 1)
    if b % 3:
        return [
            NodeTriple(3 * (4 * c + 3) * a - 2 * b, 3 * (6 * c + 5) * a - 3 * b, 0),
            second,
            NodeTriple(6 * (c + 1) * a - b, 3 * a, 0),
            fourth,
            NodeTriple(3 * a + b, 6 * a + 3 * b, 0),
        ]
    t = b // 3
    return [
        NodeTriple((4 * c + 3) * a - 2 * t, (6 * c + 5) * a - b, 0),
        second,
        NodeTriple(2 * (c + 1) * a - t, a, 0),
        fourth,
        NodeTriple(a + t, 2 * a + b, 0),
    ]


_CHILD_RULES = {
    TreeKind.BINARY: _binary_children,
    TreeKind.TERNARY: _ternary_children,
    TreeKind.QUINARY: _quinary_children,
}


def children(kind: TreeKind, node: NodeTriple) -> list[NodeTriple]:
    """All children of ``node``, first to last."""
    assert is_valid_node(kind, node), f"invalid node {node} for {kind.label} tree"
    return _CHILD_RULES[kind](*node)


def child(kind: TreeKind, node: NodeTriple, position: int) -> NodeTriple:
    """The child at 1-based ``position``."""
    if not 1 <= position <= kind.branching:
        raise ValueError(f"child position must be in 1..{kind.branching}, got {position}")
    return _CHILD_RULES[kind](*node)[position - 1]


def child_index(kind: TreeKind, m: int, position: int) -> int:
    return kind.branching * (m - 1) + 1 + position


def parent_index(kind: TreeKind, n: int) -> tuple[int, int]:
    """Return ``(parent, position)`` such that vertex ``n`` is child ``position`` of ``parent``."""
    if n <= 1:
        raise ValueError("root has no parent")
    q, r = divmod(n - 2, kind.branching)
    return q + 1, r + 1


def path_to(kind: TreeKind, n: int) -> list[int]:
    """Child positions leading from the root to vertex ``n`` (empty for the root)."""
    if n < 1:
        raise ValueError("indices are 1-based")
    positions = []
    b = kind.branching
    while n > 1:
        q, r = divmod(n - 2, b)
        positions.append(r + 1)
        n = q + 1
    positions.reverse()
    return positions


def depth_of(kind: TreeKind, n: int) -> int:
    """1-based level of vertex ``n``."""
    return len(path_to(kind, n)) + 1


def node_at_index(kind: TreeKind, n: int) -> NodeTriple:
    rule = _CHILD_RULES[kind]
    node = _ROOTS[kind]
    for pos in path_to(kind, n):
        node = rule(*node)[pos - 1]
    return node


def level_bounds(kind: TreeKind, depth: int) -> tuple[int, int]:
    """First and last index on level ``depth``."""
    if depth < 1:
        raise ValueError("levels are numbered from 1")
    b = kind.branching
    return (b ** (depth - 1) - 1) // (b - 1) + 1, (b**depth - 1) // (b - 1)


def walk(kind: TreeKind, start: int = 1) -> Iterator[NodeTriple]:
    """Level-order stream of vertices from index ``start`` onward, forever.

    Each level is produced by a depth-first sweep, so memory stays
    proportional to the depth rather than the width of the tree.
    """
    depth = depth_of(kind, start)
    path = path_to(kind, start)
    while True:
        yield from _sweep(kind, depth, path)
        depth += 1
        path = [1] * (depth - 1)


def level(kind: TreeKind, depth: int) -> Iterator[NodeTriple]:
    """Vertices of level ``depth``, left to right."""
    level_bounds(kind, depth)
    return _sweep(kind, depth, [1] * (depth - 1))


def _sweep(kind, depth, path):
    # Frames hold (node, next ordinal to expand); the initial stack follows
    # ``path`` so the sweep can begin mid-level.
    rule = _CHILD_RULES[kind]
    b = kind.branching
    node = _ROOTS[kind]
    if depth == 1:
        yield node
        return
    stack = []
    for pos in path[:-1]:
        kids = rule(*node)
        stack.append((kids, pos))
        node = kids[pos - 1]
    kids = rule(*node)
    for pos in range(path[-1], b + 1):
        yield kids[pos - 1]
    while stack:
        kids, pos = stack.pop()
        if pos == b:
            continue
        stack.append((kids, pos + 1))
        node = kids[pos]
        while len(stack) < depth - 2:
            sub = rule(*node)
            stack.append((sub, 1))
            node = sub[0]
        yield from rule(*node)
