"""Basis objects: ordered, heap-ordered and planar binary trees, and permutations."""

from __future__ import annotations

from functools import singledispatch

from hopf_forest.combinatorics.bijections import phi, phi_inv, psi, psi_inv
from hopf_forest.combinatorics.binary import (
    LEAF,
    PlanarBinaryTree,
    parse_pbt,
    pbt_backslash,
    pbt_irreducible_decomposition,
)
from hopf_forest.combinatorics.enumeration import KINDS, catalan, enumerate_objects
from hopf_forest.combinatorics.heap import (
    HEAP_UNIT,
    HeapOrderedTree,
    OrderPair,
    compare_order,
    hot_backslash,
    hot_graft,
    hot_irreducible_decomposition,
    hot_is_irreducible,
    hot_planted_components,
    hot_restrict,
    order_pair,
    parse_heap,
    validate_heap,
)
from hopf_forest.combinatorics.ordered import (
    ORDERED_UNIT,
    OrderedTree,
    ord_backslash,
    ord_graft,
    ord_irreducible_decomposition,
    ord_planted_components,
    ord_restrict,
    parse_ordered,
)
from hopf_forest.combinatorics.permutations import (
    EMPTY_PERMUTATION,
    Permutation,
    parse_perm,
    perm_backslash,
    perm_global_descents,
    perm_irreducible_decomposition,
    perm_is_irreducible,
)


@singledispatch
def irreducible_decomposition(obj) -> list:
    """Maximal factorization of ``obj`` into \\-irreducible pieces."""
    raise TypeError(f"no \\-decomposition for {type(obj).__name__}")


irreducible_decomposition.register(Permutation, perm_irreducible_decomposition)
irreducible_decomposition.register(HeapOrderedTree, hot_irreducible_decomposition)
irreducible_decomposition.register(OrderedTree, ord_irreducible_decomposition)
irreducible_decomposition.register(PlanarBinaryTree, pbt_irreducible_decomposition)


@singledispatch
def backslash(x, y):
    raise TypeError(f"no \\-operation for {type(x).__name__}")


backslash.register(Permutation, perm_backslash)
backslash.register(HeapOrderedTree, hot_backslash)
backslash.register(OrderedTree, ord_backslash)
backslash.register(PlanarBinaryTree, pbt_backslash)


PARSERS = {
    "pbt": parse_pbt,
    "ordered": parse_ordered,
    "heap": parse_heap,
    "perm": parse_perm,
}


def parse_object(kind: str, text: str):
    """Parse ``text`` as an object of ``kind`` (``pbt``, ``ordered``, ``heap`` or ``perm``)."""
    try:
        parser = PARSERS[kind]
    except KeyError:
        raise ValueError(f"unknown object kind {kind!r}; expected one of {', '.join(PARSERS)}") from None
    return parser(text)


