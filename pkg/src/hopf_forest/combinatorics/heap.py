"""Heap-ordered trees.

A heap-ordered tree on ``n+1`` nodes carries the labels ``0..n``: the root is ``0``,
labels grow from a node to its children and shrink from left to right among
siblings. Text form: ``label(child child ...)``, e.g. ``0(2() 1(3()))``.
"""

from __future__ import annotations

import functools
from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from hopf_forest.combinatorics._scan import Scanner
from hopf_forest.combinatorics.ordered import OrderedTree
from hopf_forest.errors import HeapOrderError


class HeapOrderedTree:
    """A labelled node together with its subtrees.

    Instances are used both for whole trees (root label 0) and for subtrees
    while building; :func:`validate_heap` checks the whole-tree conditions.
    """

    __slots__ = ("label", "children", "_str", "_size", "_max")

    def __init__(self, label: int, children: Iterable[HeapOrderedTree] = ()):
        self.label = label
        self.children: tuple[HeapOrderedTree, ...] = tuple(children)
        self._str = f"{label}(" + " ".join(c._str for c in self.children) + ")"
        self._size = 1 + sum(c._size for c in self.children)
        self._max = max([label] + [c._max for c in self.children])

    @property
    def size(self) -> int:
        return self._size

    @property
    def degree(self) -> int:
        return self._size - 1

    @property
    def max_label(self) -> int:
        return self._max

    def labels(self) -> list[int]:
        """Labels in preorder."""
        out = [self.label]
        for c in self.children:
            out.extend(c.labels())
        return out

    def shape(self) -> OrderedTree:
        return OrderedTree(c.shape() for c in self.children)

    def shifted(self, d: int) -> HeapOrderedTree:
        return HeapOrderedTree(self.label + d, (c.shifted(d) for c in self.children))

    def relabeled(self, mapping: dict[int, int]) -> HeapOrderedTree:
        return HeapOrderedTree(mapping[self.label], (c.relabeled(mapping) for c in self.children))

    def __str__(self) -> str:
        return self._str

    def __repr__(self) -> str:
        return f"HeapOrderedTree({self._str!r})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, HeapOrderedTree) and other._str == self._str

    def __hash__(self) -> int:
        return hash(("H", self._str))

    def __lt__(self, other: HeapOrderedTree) -> bool:
        return self._str < other._str


HEAP_UNIT = HeapOrderedTree(0)


def validate_heap(t: HeapOrderedTree) -> HeapOrderedTree:
    """Return ``t`` unchanged or raise :class:`HeapOrderError` naming the violation."""
    if t.label != 0:
        raise HeapOrderError(f"root label must be 0, got {t.label} in {t}")
    if sorted(t.labels()) != list(range(t.size)):
        raise HeapOrderError(f"labels must be exactly 0..{t.size - 1} in {t}")

    def check(node: HeapOrderedTree) -> None:
        for c in node.children:
            if c.label <= node.label:
                raise HeapOrderError(
                    f"labels must increase from parent to child ({node.label} -> {c.label}) in {t}")
        for a, b in zip(node.children, node.children[1:]):
            if a.label <= b.label:
                raise HeapOrderError(
                    f"children labels must decrease from left to right ({a.label}, {b.label}) in {t}")
        for c in node.children:
            check(c)

    check(t)
    return t


def parse_heap(text: str) -> HeapOrderedTree:
    sc = Scanner(text)

    def node() -> HeapOrderedTree:
        label = sc.integer()
        sc.expect("(")
        kids = []
        while sc.peek() not in (")", ""):
            kids.append(node())
        sc.expect(")")
        return HeapOrderedTree(label, kids)

    t = node()
    sc.finish()
    return validate_heap(t)


def standardize(children: Sequence[HeapOrderedTree]) -> HeapOrderedTree:
    """Root ``0`` over ``children``, non-root labels replaced by their rank."""
    labels = sorted(l for c in children for l in c.labels())
    rank = {l: i for i, l in enumerate(labels, 1)}
    return HeapOrderedTree(0, (c.relabeled(rank) for c in children))


def hot_backslash(x: HeapOrderedTree, y: HeapOrderedTree) -> HeapOrderedTree:
    """Join at the roots after shifting the labels of ``x`` past those of ``y``."""
    d = y.max_label
    return validate_heap(HeapOrderedTree(0, tuple(c.shifted(d) for c in x.children) + y.children))


def hot_planted_components(x: HeapOrderedTree) -> list[HeapOrderedTree]:
    return [standardize([c]) for c in x.children]


def hot_graft(x: HeapOrderedTree, y: HeapOrderedTree, f: Sequence[int]) -> HeapOrderedTree:
    """Labelled grafting: shape as for ordered trees, ``x`` shifted by ``max_label(y)``.

    ``f[i]`` is the preorder index of the node of ``y`` receiving component ``i``.
    """
    comps = [c.shifted(y.max_label) for c in x.children]
    if len(f) != len(comps):
        raise ValueError(f"graft map has {len(f)} entries but x has {len(comps)} components")
    attached: dict[int, list[HeapOrderedTree]] = {}
    for i, v in enumerate(f):
        if not 0 <= v < y.size:
            raise ValueError(f"f({i}) = {v} is not a node of {y} (nodes 0..{y.size - 1})")
        attached.setdefault(v, []).append(comps[i])
    counter = iter(range(y.size))

    def rebuild(t: HeapOrderedTree) -> HeapOrderedTree:
        v = next(counter)
        kids = [rebuild(c) for c in t.children]
        return HeapOrderedTree(t.label, attached.get(v, []) + kids)

    return validate_heap(rebuild(y))


def hot_restrict(x: HeapOrderedTree, subset: Iterable[int]) -> HeapOrderedTree:
    """Keep the root branches indexed by ``subset`` (0-based) and standardize."""
    idx = sorted(set(subset))
    k = len(x.children)
    if any(not 0 <= i < k for i in idx):
        raise ValueError(f"subset {idx} is not contained in range({k})")
    return validate_heap(standardize([x.children[i] for i in idx]))


def hot_irreducible_decomposition(x: HeapOrderedTree) -> list[HeapOrderedTree]:
    """Maximal factorization ``x = x1 \\ x2 \\ ... \\ xl`` into \\-irreducibles.

    ``x = a \\ b`` with ``a`` holding the first ``j`` root branches exactly when
    every label in those branches exceeds every label in the remaining ones.
    """
    kids = x.children
    branch_labels = [c.labels() for c in kids]
    cuts = [0]
    for j in range(1, len(kids)):
        left = min(l for ls in branch_labels[:j] for l in ls)
        right = max(l for ls in branch_labels[j:] for l in ls)
        if left > right:
            cuts.append(j)
    cuts.append(len(kids))
    return [standardize(kids[a:b]) for a, b in zip(cuts, cuts[1:]) if b > a]


def hot_is_irreducible(x: HeapOrderedTree) -> bool:
    return len(hot_irreducible_decomposition(x)) == 1


@functools.total_ordering
@dataclass(frozen=True)
class OrderPair:
    """``(k, l)``: planted-component and irreducible-component counts.

    More planted components rank higher; for equal ``k`` the pair with fewer
    irreducible components ranks higher.
    """

    k: int
    l: int

    def sort_key(self) -> tuple[int, int]:
        return (self.k, -self.l)

    def __lt__(self, other: OrderPair) -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        return f"({self.k},{self.l})"


def order_pair(x: HeapOrderedTree) -> OrderPair:
    return OrderPair(len(x.children), len(hot_irreducible_decomposition(x)))


def compare_order(a: OrderPair, b: OrderPair) -> str:
    """Return ``"<"``, ``"="`` or ``">"``."""
    if a == b:
        return "="
    return "<" if a < b else ">"
