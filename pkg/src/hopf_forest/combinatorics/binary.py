"""Planar binary trees, written ``L`` (a leaf) or ``(left right)``."""

from __future__ import annotations

from hopf_forest.combinatorics._scan import Scanner
from hopf_forest.errors import ParseError


class PlanarBinaryTree:
    __slots__ = ("left", "right", "_str", "_leaves")

    def __init__(self, left: PlanarBinaryTree | None = None, right: PlanarBinaryTree | None = None):
        if (left is None) != (right is None):
            raise ValueError("an internal node needs both a left and a right subtree")
        self.left = left
        self.right = right
        if left is None:
            self._str = "L"
            self._leaves = 1
        else:
            self._str = f"({left._str} {right._str})"
            self._leaves = left._leaves + right._leaves

    @property
    def is_leaf(self) -> bool:
        return self.left is None

    @property
    def leaves(self) -> int:
        return self._leaves

    @property
    def degree(self) -> int:
        return self._leaves - 1

    @property
    def is_irreducible(self) -> bool:
        return not self.is_leaf and self.right.is_leaf

    def __str__(self) -> str:
        return self._str

    def __repr__(self) -> str:
        return f"PlanarBinaryTree({self._str!r})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PlanarBinaryTree) and other._str == self._str

    def __hash__(self) -> int:
        return hash(("B", self._str))

    def __lt__(self, other: PlanarBinaryTree) -> bool:
        return self._str < other._str


LEAF = PlanarBinaryTree()


def node(left: PlanarBinaryTree, right: PlanarBinaryTree) -> PlanarBinaryTree:
    return PlanarBinaryTree(left, right)


def parse_pbt(text: str) -> PlanarBinaryTree:
    sc = Scanner(text)

    def tree() -> PlanarBinaryTree:
        ch = sc.peek()
        if ch == "L":
            sc.pos += 1
            return LEAF
        if ch != "(":
            raise ParseError(f"expected 'L' or '(', found {ch or 'end of input'!r}", text, sc.pos)
        sc.pos += 1
        left = tree()
        right = tree()
        sc.expect(")")
        return PlanarBinaryTree(left, right)

    t = tree()
    sc.finish()
    return t


def pbt_backslash(s: PlanarBinaryTree, t: PlanarBinaryTree) -> PlanarBinaryTree:
    """Identify the rightmost leaf of ``s`` with the root of ``t``."""
    if s.is_leaf:
        return t
    return PlanarBinaryTree(s.left, pbt_backslash(s.right, t))


def pbt_irreducible_decomposition(t: PlanarBinaryTree) -> list[PlanarBinaryTree]:
    """Factors ``(A1 L), (A2 L), ...`` read off the right branch; ``[]`` for a leaf."""
    out = []
    while not t.is_leaf:
        out.append(PlanarBinaryTree(t.left, LEAF))
        t = t.right
    return out
