"""Concrete graded connected Hopf algebras.

``HO`` and ``HHO`` are the Grossman-Larson algebras of ordered and heap-ordered
trees. ``SH``/``TENSOR`` are the shuffle and tensor Hopf algebras on words over a
graded alphabet. ``GR_YSYM``/``GR_SSYM`` are shuffle algebras on the
\\-irreducible binary trees/permutations, with basis elements written as the
objects themselves (``M_w`` is keyed by ``w``); their ``_DUAL`` versions are the
tensor algebras on the same alphabets. ``QSYM`` uses the quasi-shuffle product.
"""

from __future__ import annotations

import itertools
from collections.abc import Callable, Hashable
from fractions import Fraction
from functools import reduce
from typing import Any

from hopf_forest.combinatorics import (
    EMPTY_PERMUTATION,
    HEAP_UNIT,
    LEAF,
    ORDERED_UNIT,
    HeapOrderedTree,
    OrderedTree,
    PlanarBinaryTree,
    Permutation,
    enumerate_objects,
    hot_graft,
    hot_restrict,
    irreducible_decomposition,
    ord_graft,
    ord_restrict,
    parse_heap,
    parse_ordered,
    parse_pbt,
    parse_perm,
    pbt_backslash,
    perm_backslash,
)
from hopf_forest.errors import InvalidBasisError, ReducibleLetterError
from hopf_forest.lincomb import LinComb, lc_sum
from hopf_forest.words import (
    ALPHABETS,
    EMPTY_WORD,
    Alphabet,
    Composition,
    Word,
    compositions,
    deconcatenation,
    deshuffle,
    parse_composition,
    parse_word,
    quasi_shuffle,
    shuffle,
    word_weight,
    words_of_weight,
)

ALGEBRA_NAMES = ("HO", "HHO", "GR_YSYM", "GR_SSYM", "GR_YSYM_DUAL", "GR_SSYM_DUAL", "QSYM", "SH", "TENSOR")


class HopfAlgebra:
    """Graded connected Hopf algebra given on a basis.

    Subclasses implement ``_product``/``_coproduct`` on basis elements; results
    are memoized per instance.
    """

    name = "?"
    commutative = False
    cocommutative = False

    def __init__(self) -> None:
        self._products: dict[tuple, LinComb] = {}
        self._coproducts: dict[Hashable, LinComb] = {}

    def __repr__(self) -> str:
        return self.name

    # to be provided by subclasses
    def unit(self) -> Hashable:
        raise NotImplementedError

    def degree(self, b: Hashable) -> int:
        raise NotImplementedError

    def is_basis(self, b: Any) -> bool:
        raise NotImplementedError

    def basis(self, n: int) -> list:
        raise NotImplementedError

    def parse(self, text: str) -> Hashable:
        raise NotImplementedError

    def _product(self, a: Hashable, b: Hashable) -> LinComb:
        raise NotImplementedError

    def _coproduct(self, a: Hashable) -> LinComb:
        raise NotImplementedError

    # shared machinery
    def check(self, b: Any) -> None:
        if not self.is_basis(b):
            raise InvalidBasisError(f"{b!r} is not a basis element of {self.name}")

    def product_basis(self, a: Hashable, b: Hashable) -> LinComb:
        key = (a, b)
        try:
            return self._products[key]
        except KeyError:
            self.check(a)
            self.check(b)
            v = self._products[key] = self._product(a, b)
            return v

    def coproduct_basis(self, a: Hashable) -> LinComb:
        try:
            return self._coproducts[a]
        except KeyError:
            self.check(a)
            v = self._coproducts[a] = self._coproduct(a)
            return v

    def counit(self, b: Hashable) -> Fraction:
        return Fraction(1) if b == self.unit() else Fraction(0)

    def element(self, b: Hashable) -> LinComb:
        self.check(b)
        return LinComb.basis(b)

    def one(self) -> LinComb:
        return LinComb.basis(self.unit())

    def multiply(self, x: LinComb, y: LinComb) -> LinComb:
        return lc_sum(cx * cy * self.product_basis(a, b) for a, cx in x.items() for b, cy in y.items())

    def coproduct(self, x: LinComb) -> LinComb:
        return lc_sum(c * self.coproduct_basis(b) for b, c in x.items())

    def counit_of(self, x: LinComb) -> Fraction:
        return sum((c * self.counit(b) for b, c in x.items()), Fraction(0))

    def basis_up_to(self, n: int) -> list:
        return [b for d in range(n + 1) for b in self.basis(d)]


class GrossmanLarsonAlgebra(HopfAlgebra):
    """``x·y = sum_f x #_f y`` over all maps from components of x to nodes of y;
    ``Δ(x) = sum_S x_S ⊗ x_{S^c}`` over subsets of components."""

    cocommutative = True
    kind: str
    tree_type: type
    graft: Callable
    restrict: Callable

    def degree(self, b) -> int:
        return b.degree

    def is_basis(self, b: Any) -> bool:
        return isinstance(b, self.tree_type)

    def basis(self, n: int) -> list:
        return enumerate_objects(self.kind, n)

    def _product(self, x, y) -> LinComb:
        k = len(x.children)
        return LinComb((self.graft(x, y, f), 1) for f in itertools.product(range(y.size), repeat=k))

    def _coproduct(self, x) -> LinComb:
        k = len(x.children)
        terms = []
        for mask in range(1 << k):
            s = [i for i in range(k) if mask >> i & 1]
            sc = [i for i in range(k) if not mask >> i & 1]
            terms.append(((self.restrict(x, s), self.restrict(x, sc)), 1))
        return LinComb(terms)


class OrderedTreeAlgebra(GrossmanLarsonAlgebra):
    name = "HO"
    kind = "ordered"
    tree_type = OrderedTree
    graft = staticmethod(ord_graft)
    restrict = staticmethod(ord_restrict)

    def unit(self) -> OrderedTree:
        return ORDERED_UNIT

    def parse(self, text: str) -> OrderedTree:
        return parse_ordered(text)


class HeapOrderedTreeAlgebra(GrossmanLarsonAlgebra):
    name = "HHO"
    kind = "heap"
    tree_type = HeapOrderedTree
    graft = staticmethod(hot_graft)
    restrict = staticmethod(hot_restrict)

    def unit(self) -> HeapOrderedTree:
        return HEAP_UNIT

    def parse(self, text: str) -> HeapOrderedTree:
        return parse_heap(text)


class WordAlgebra(HopfAlgebra):
    """Shuffle (``mode="shuffle"``) or tensor (``mode="tensor"``) Hopf algebra on words."""

    def __init__(self, alphabet: Alphabet, mode: str, name: str | None = None):
        super().__init__()
        if mode not in ("shuffle", "tensor"):
            raise ValueError(f"mode must be 'shuffle' or 'tensor', not {mode!r}")
        self.alphabet = alphabet
        self.mode = mode
        self.commutative = mode == "shuffle"
        self.cocommutative = mode == "tensor"
        self.name = name or f"{'SH' if mode == 'shuffle' else 'TENSOR'}({alphabet})"

    # conversions between basis objects and words; the identity here
    def to_word(self, b: Hashable) -> Word:
        return b

    def from_word(self, w: Word) -> Hashable:
        return w

    def unit(self) -> Hashable:
        return self.from_word(EMPTY_WORD)

    def is_basis(self, b: Any) -> bool:
        return isinstance(b, Word) and all(self.alphabet.is_letter(a) for a in b.letters)

    def basis(self, n: int) -> list:
        return sorted((self.from_word(w) for w in words_of_weight(self.alphabet, n)), key=str)

    def parse(self, text: str) -> Hashable:
        return parse_word(text, self.alphabet)

    def degree(self, b: Hashable) -> int:
        """Weight grading."""
        return word_weight(self.to_word(b), self.alphabet)

    def length(self, b: Hashable) -> int:
        return len(self.to_word(b))

    def _product(self, a, b) -> LinComb:
        u, v = self.to_word(a), self.to_word(b)
        if self.mode == "shuffle":
            return shuffle(u, v).map_basis(self.from_word)
        return LinComb.basis(self.from_word(u + v))

    def _coproduct(self, a) -> LinComb:
        w = self.to_word(a)
        pairs = deconcatenation(w) if self.mode == "shuffle" else deshuffle(w)
        return pairs.map_basis(lambda p: (self.from_word(p[0]), self.from_word(p[1])))


class RealizedWordAlgebra(WordAlgebra):
    """Word algebra whose basis elements are written as \\-products of letters.

    The word ``w1|...|wk`` of irreducible letters corresponds to the object
    ``w1 \\ ... \\ wk``; the inverse is the irreducible decomposition.
    """

    def __init__(self, alphabet: Alphabet, mode: str, name: str, obj_type: type,
                 obj_unit: Hashable, join: Callable, kind: str, parse_obj: Callable):
        super().__init__(alphabet, mode, name)
        self.obj_type = obj_type
        self.obj_unit = obj_unit
        self.join = join
        self.kind = kind
        self.parse_obj = parse_obj

    def to_word(self, b: Hashable) -> Word:
        return Word(irreducible_decomposition(b))

    def from_word(self, w: Word) -> Hashable:
        for a in w.letters:
            if not self.alphabet.is_letter(a):
                raise ReducibleLetterError(f"letter {a} of {w} is not \\-irreducible")
        return reduce(self.join, w.letters, self.obj_unit)

    def is_basis(self, b: Any) -> bool:
        return isinstance(b, self.obj_type)

    def basis(self, n: int) -> list:
        return enumerate_objects(self.kind, n)

    def parse(self, text: str) -> Hashable:
        return self.parse_obj(text)


class QSymAlgebra(HopfAlgebra):
    """Monomial quasi-symmetric functions: quasi-shuffle product, deconcatenation."""

    name = "QSYM"
    commutative = True

    def unit(self) -> Composition:
        return Composition()

    def degree(self, b: Composition) -> int:
        return b.degree

    def is_basis(self, b: Any) -> bool:
        return isinstance(b, Composition)

    def basis(self, n: int) -> list:
        return sorted((Composition(c) for c in compositions(n)), key=str)

    def parse(self, text: str) -> Composition:
        return parse_composition(text)

    def _product(self, a, b) -> LinComb:
        return quasi_shuffle(a, b)

    def _coproduct(self, a) -> LinComb:
        p = a.parts
        return LinComb(((Composition(p[:i]), Composition(p[i:])), 1) for i in range(len(p) + 1))


def _realized(alphabet_name: str, mode: str, name: str) -> RealizedWordAlgebra:
    if alphabet_name == "pbt":
        return RealizedWordAlgebra(ALPHABETS["pbt"], mode, name, PlanarBinaryTree, LEAF,
                                   pbt_backslash, "pbt", parse_pbt)
    return RealizedWordAlgebra(ALPHABETS["perm"], mode, name, Permutation, EMPTY_PERMUTATION,
                               perm_backslash, "perm", parse_perm)


HO = OrderedTreeAlgebra()
HHO = HeapOrderedTreeAlgebra()
GR_YSYM = _realized("pbt", "shuffle", "GR_YSYM")
GR_SSYM = _realized("perm", "shuffle", "GR_SSYM")
GR_YSYM_DUAL = _realized("pbt", "tensor", "GR_YSYM_DUAL")
GR_SSYM_DUAL = _realized("perm", "tensor", "GR_SSYM_DUAL")
QSYM = QSymAlgebra()

_WORD_ALGEBRAS: dict[tuple[str, str], WordAlgebra] = {}


def word_algebra(alphabet: str | Alphabet, mode: str) -> WordAlgebra:
    """Cached ``SH``/``TENSOR`` algebra on a named or given alphabet."""
    alpha = ALPHABETS[alphabet] if isinstance(alphabet, str) else alphabet
    key = (alpha.name, mode) if isinstance(alphabet, str) else (id(alpha), mode)
    if key not in _WORD_ALGEBRAS:
        _WORD_ALGEBRAS[key] = WordAlgebra(alpha, mode)
    return _WORD_ALGEBRAS[key]


def get_algebra(name: str, alphabet: str = "perm") -> HopfAlgebra:
    """Look up an algebra by its CLI name; ``alphabet`` only matters for SH/TENSOR."""
    fixed = {"HO": HO, "HHO": HHO, "GR_YSYM": GR_YSYM, "GR_SSYM": GR_SSYM,
             "GR_YSYM_DUAL": GR_YSYM_DUAL, "GR_SSYM_DUAL": GR_SSYM_DUAL, "QSYM": QSYM}
    if name in fixed:
        return fixed[name]
    if name == "SH":
        return word_algebra(alphabet, "shuffle")
    if name == "TENSOR":
        return word_algebra(alphabet, "tensor")
    raise ValueError(f"unknown algebra {name!r}; expected one of {', '.join(ALGEBRA_NAMES)}")


# module-level operation names
def product(alg: HopfAlgebra, a: Hashable, b: Hashable) -> LinComb:
    return alg.product_basis(a, b)


def coproduct(alg: HopfAlgebra, a: Hashable) -> LinComb:
    return alg.coproduct_basis(a)


def counit(alg: HopfAlgebra, a: Hashable) -> Fraction:
    alg.check(a)
    return alg.counit(a)


def degree(alg: HopfAlgebra, a: Hashable) -> int:
    alg.check(a)
    return alg.degree(a)


def gr_basis_to_word(alg: RealizedWordAlgebra, obj: Hashable) -> Word:
    alg.check(obj)
    return alg.to_word(obj)


def word_to_object(alg: RealizedWordAlgebra, w: Word) -> Hashable:
    return alg.from_word(w)
