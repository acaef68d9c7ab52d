"""The bijections psi (binary trees -> ordered trees) and phi (permutations -> heap-ordered trees)."""

from __future__ import annotations

from functools import reduce

from hopf_forest.combinatorics.binary import LEAF, PlanarBinaryTree, pbt_backslash, pbt_irreducible_decomposition
from hopf_forest.combinatorics.heap import HeapOrderedTree, validate_heap
from hopf_forest.combinatorics.ordered import ORDERED_UNIT, OrderedTree, ord_backslash
from hopf_forest.combinatorics.permutations import Permutation


def psi(t: PlanarBinaryTree) -> OrderedTree:
    """Binary tree with ``n`` leaves to ordered tree with ``n`` nodes.

    Multiplicative for ``\\``; an irreducible ``(t' L)`` goes to the planted tree
    obtained by putting a new root under ``psi(t')``.
    """
    if t.is_leaf:
        return ORDERED_UNIT
    factors = pbt_irreducible_decomposition(t)
    if len(factors) == 1:
        return OrderedTree((psi(t.left),))
    return reduce(ord_backslash, (psi(f) for f in factors))


def psi_inv(x: OrderedTree) -> PlanarBinaryTree:
    factors = [PlanarBinaryTree(psi_inv(c), LEAF) for c in x.children]
    return reduce(pbt_backslash, factors, LEAF)


def phi(w: Permutation) -> HeapOrderedTree:
    """Insert ``u(1), u(2), ...`` in turn.

    The node drawn at step ``i`` becomes the rightmost child of the node drawn at
    the last earlier step ``j`` with ``u(j) < u(i)`` (step 0 is the root, ``u(0) = 0``).
    """
    u = (0,) + w.values
    kids: list[list[int]] = [[] for _ in u]
    for i in range(1, len(u)):
        j = max(j for j in range(i) if u[j] < u[i])
        kids[j].append(i)

    def build(step: int) -> HeapOrderedTree:
        return HeapOrderedTree(u[step], (build(c) for c in kids[step]))

    return validate_heap(build(0))


def phi_inv(x: HeapOrderedTree) -> Permutation:
    """Read the non-root labels: ancestors before descendants, left branches before right."""
    return Permutation(x.labels()[1:])
