"""Exhaustive enumeration of each family by degree, in canonical string order."""

from __future__ import annotations

import functools
import itertools
import math

from hopf_forest.combinatorics.binary import LEAF, PlanarBinaryTree
from hopf_forest.combinatorics.heap import HEAP_UNIT, HeapOrderedTree, hot_is_irreducible
from hopf_forest.combinatorics.ordered import OrderedTree
from hopf_forest.combinatorics.permutations import Permutation, perm_is_irreducible
from hopf_forest.config import get_limits
from hopf_forest.errors import ResourceLimitError

TREE_KINDS = ("pbt", "ordered", "irreducible-pbt", "planted")
PERM_KINDS = ("heap", "perm", "irreducible-perm", "irreducible-heap")
KINDS = TREE_KINDS + PERM_KINDS


def catalan(n: int) -> int:
    return math.comb(2 * n, n) // (n + 1)


@functools.lru_cache(maxsize=None)
def _pbts(n: int) -> tuple[PlanarBinaryTree, ...]:
    if n == 0:
        return (LEAF,)
    return tuple(PlanarBinaryTree(l, r) for i in range(n) for l in _pbts(i) for r in _pbts(n - 1 - i))


@functools.lru_cache(maxsize=None)
def _forests(m: int) -> tuple[tuple[OrderedTree, ...], ...]:
    """All sequences of ordered trees with ``m`` nodes in total."""
    if m == 0:
        return ((),)
    out = []
    for s in range(1, m + 1):
        for t in _ordered(s - 1):
            for rest in _forests(m - s):
                out.append((t,) + rest)
    return tuple(out)


@functools.lru_cache(maxsize=None)
def _ordered(n: int) -> tuple[OrderedTree, ...]:
    return tuple(OrderedTree(f) for f in _forests(n))


def _insert_leftmost(t: HeapOrderedTree, target: int, label: int) -> HeapOrderedTree:
    counter = itertools.count()

    def rebuild(node: HeapOrderedTree) -> HeapOrderedTree:
        v = next(counter)
        kids = [rebuild(c) for c in node.children]
        if v == target:
            kids.insert(0, HeapOrderedTree(label))
        return HeapOrderedTree(node.label, kids)

    return rebuild(t)


@functools.lru_cache(maxsize=None)
def _heaps(n: int) -> tuple[HeapOrderedTree, ...]:
    # the largest label is a leaf and, being the largest, the leftmost of its siblings
    if n == 0:
        return (HEAP_UNIT,)
    return tuple(_insert_leftmost(t, v, n) for t in _heaps(n - 1) for v in range(t.size))


def check_cap(kind: str, n: int) -> None:
    limits = get_limits()
    cap = limits.max_tree_degree if kind in TREE_KINDS else limits.max_perm_degree
    if n > cap:
        raise ResourceLimitError(f"degree {n} exceeds the cap {cap} for {kind!r} "
                                 f"(raise it with HOPF_FOREST_MAX_DEGREE)")


def enumerate_objects(kind: str, n: int) -> list:
    """All objects of ``kind`` in degree ``n``, sorted by canonical string."""
    if kind not in KINDS:
        raise ValueError(f"unknown kind {kind!r}; expected one of {', '.join(KINDS)}")
    if n < 0:
        raise ValueError("degree must be nonnegative")
    check_cap(kind, n)
    if kind == "pbt":
        items = _pbts(n)
    elif kind == "irreducible-pbt":
        items = [t for t in _pbts(n) if t.is_irreducible]
    elif kind == "ordered":
        items = _ordered(n)
    elif kind == "planted":
        items = [t for t in _ordered(n) if t.is_planted]
    elif kind == "heap":
        items = _heaps(n)
    elif kind == "irreducible-heap":
        items = [t for t in _heaps(n) if n > 0 and hot_is_irreducible(t)]
    elif kind == "perm":
        items = [Permutation(p) for p in itertools.permutations(range(1, n + 1))]
    else:
        items = [Permutation(p) for p in itertools.permutations(range(1, n + 1))
                 if perm_is_irreducible(Permutation(p))]
    return sorted(items, key=str)
