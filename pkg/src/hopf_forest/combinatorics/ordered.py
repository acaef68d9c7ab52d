"""Ordered (rooted planar) trees, written ``(`` children ``)``: ``()`` is one node."""

from __future__ import annotations

from collections.abc import Iterable, Sequence

from hopf_forest.combinatorics._scan import Scanner


class OrderedTree:
    """Immutable ordered tree; equality and order follow the canonical string."""

    __slots__ = ("children", "_str", "_size")

    def __init__(self, children: Iterable[OrderedTree] = ()):
        self.children: tuple[OrderedTree, ...] = tuple(children)
        self._str = "(" + "".join(c._str for c in self.children) + ")"
        self._size = 1 + sum(c._size for c in self.children)

    @property
    def size(self) -> int:
        """Number of nodes."""
        return self._size

    @property
    def degree(self) -> int:
        return self._size - 1

    @property
    def is_planted(self) -> bool:
        return len(self.children) == 1

    def __str__(self) -> str:
        return self._str

    def __repr__(self) -> str:
        return f"OrderedTree({self._str!r})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, OrderedTree) and other._str == self._str

    def __hash__(self) -> int:
        return hash(("O", self._str))

    def __lt__(self, other: OrderedTree) -> bool:
        return self._str < other._str


ORDERED_UNIT = OrderedTree()


def parse_ordered(text: str) -> OrderedTree:
    sc = Scanner(text)

    def tree() -> OrderedTree:
        sc.expect("(")
        kids = []
        while sc.peek() == "(":
            kids.append(tree())
        sc.expect(")")
        return OrderedTree(kids)

    t = tree()
    sc.finish()
    return t


def ord_backslash(x: OrderedTree, y: OrderedTree) -> OrderedTree:
    """Join at the roots, the branches of ``x`` to the left of those of ``y``."""
    return OrderedTree(x.children + y.children)


def ord_planted_components(x: OrderedTree) -> list[OrderedTree]:
    return [OrderedTree((c,)) for c in x.children]


def ord_graft(x: OrderedTree, y: OrderedTree, f: Sequence[int]) -> OrderedTree:
    """Graft the planted components of ``x`` onto ``y``.

    ``f[i]`` is the preorder index of the node of ``y`` receiving component ``i``
    (0-based). Components sharing a node keep their order and go to the left of
    that node's own children.
    """
    comps = x.children
    if len(f) != len(comps):
        raise ValueError(f"graft map has {len(f)} entries but x has {len(comps)} components")
    attached: dict[int, list[OrderedTree]] = {}
    for i, v in enumerate(f):
        if not 0 <= v < y.size:
            raise ValueError(f"f({i}) = {v} is not a node of {y} (nodes 0..{y.size - 1})")
        attached.setdefault(v, []).append(comps[i])
    counter = iter(range(y.size))

    def rebuild(t: OrderedTree) -> OrderedTree:
        v = next(counter)
        kids = [rebuild(c) for c in t.children]
        return OrderedTree(attached.get(v, []) + kids)

    return rebuild(y)


def ord_restrict(x: OrderedTree, subset: Iterable[int]) -> OrderedTree:
    """Keep only the root branches indexed by ``subset`` (0-based)."""
    idx = sorted(set(subset))
    k = len(x.children)
    if any(not 0 <= i < k for i in idx):
        raise ValueError(f"subset {idx} is not contained in range({k})")
    return OrderedTree(x.children[i] for i in idx)


def ord_irreducible_decomposition(x: OrderedTree) -> list[OrderedTree]:
    # the \-irreducible ordered trees are exactly the planted ones
    return ord_planted_components(x)
