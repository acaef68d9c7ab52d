import itertools
from collections import Counter
from fractions import Fraction

import pytest
from hypothesis import given

from conftest import objects
from hopf_forest.algebras import (
    GR_SSYM,
    GR_SSYM_DUAL,
    GR_YSYM,
    HHO,
    HO,
    QSYM,
    get_algebra,
    gr_basis_to_word,
    word_algebra,
    word_to_object,
)
from hopf_forest.combinatorics import (
    enumerate_objects,
    hot_planted_components,
    ord_planted_components,
    ord_restrict,
    parse_perm,
    phi,
)
from hopf_forest.errors import InvalidBasisError, ReducibleLetterError
from hopf_forest.lincomb import LinComb, tensor
from hopf_forest.words import Word, symbol_alphabet, words_of_weight

SYMBOLS = symbol_alphabet({"a": 1, "b": 1, "c": 2})
SH = word_algebra(SYMBOLS, "shuffle")
T = word_algebra(SYMBOLS, "tensor")


def lc(alg, terms):
    return LinComb((alg.parse(s), c) for s, c in terms.items())


def test_ordered_product():
    x, y = HO.parse("(()())"), HO.parse("(())")
    assert HO.product_basis(x, y) == lc(HO, {"((()()))": 1, "(()(()))": 2, "(()()())": 1})


def test_heap_product():
    x, y = phi(parse_perm("21")), phi(parse_perm("1"))
    expected = LinComb((phi(parse_perm(w)), 1) for w in ["132", "312", "213", "321"])
    assert HHO.product_basis(x, y) == expected


def test_permutation_shuffle_product():
    assert GR_SSYM.product_basis(GR_SSYM.parse("231"), GR_SSYM.parse("1")) == lc(GR_SSYM, {"3421": 2, "4231": 1})
    sh = get_algebra("SH", "perm")
    assert sh.product_basis(sh.parse("[12|1]"), sh.parse("[1]")) == lc(sh, {"[12|1|1]": 2, "[1|12|1]": 1})


@pytest.mark.parametrize("n,m", list(itertools.product(range(1, 5), repeat=2)))
def test_quasi_shuffle_of_single_parts(n, m):
    expected = LinComb({QSYM.parse(f"({n},{m})"): 1}) + LinComb({QSYM.parse(f"({m},{n})"): 1}) \
        + LinComb({QSYM.parse(f"({n + m})"): 1})
    assert QSYM.product_basis(QSYM.parse(f"({n})"), QSYM.parse(f"({m})")) == expected


@pytest.mark.parametrize("alg", [HO, HHO, GR_SSYM, GR_YSYM, QSYM, SH, T], ids=str)
def test_unit(alg):
    for n in range(4):
        for b in alg.basis(n):
            assert alg.product_basis(alg.unit(), b) == LinComb.basis(b) == alg.product_basis(b, alg.unit())


def test_ordered_coproduct():
    x = HO.parse("(()()(()))")
    e, p, q = HO.parse("()"), HO.parse("(())"), HO.parse("((()))")
    expected = LinComb({
        (e, x): 1, (p, HO.parse("(()(()))")): 2, (q, HO.parse("(()())")): 1,
        (HO.parse("(()())"), q): 1, (HO.parse("(()(()))"), p): 2, (x, e): 1,
    })
    assert HO.coproduct_basis(x) == expected


@given(objects("ordered", 6))
def test_ordered_coproduct_matches_restrictions(x):
    k = len(ord_planted_components(x))
    oracle = Counter()
    for mask in range(2 ** k):
        s = {i for i in range(k) if mask >> i & 1}
        oracle[ord_restrict(x, s), ord_restrict(x, set(range(k)) - s)] += 1
    assert HO.coproduct_basis(x) == LinComb(oracle)


def test_word_coproducts():
    ab, a, b, empty = SH.parse("[a|b]"), SH.parse("[a]"), SH.parse("[b]"), SH.parse("[]")
    assert SH.coproduct_basis(ab) == LinComb({(empty, ab): 1, (a, b): 1, (ab, empty): 1})
    assert T.coproduct_basis(a) == LinComb({(empty, a): 1, (a, empty): 1})
    assert T.coproduct_basis(ab) == LinComb({(empty, ab): 1, (a, b): 1, (b, a): 1, (ab, empty): 1})
    assert T.coproduct_basis(empty) == LinComb({(empty, empty): 1})


def test_shuffle_examples():
    a, b = SH.parse("[a]"), SH.parse("[b]")
    assert SH.product_basis(a, b) == lc(SH, {"[a|b]": 1, "[b|a]": 1})
    assert SH.product_basis(SH.parse("[a|b]"), b) == lc(SH, {"[a|b|b]": 2, "[b|a|b]": 1})
    assert SH.product_basis(SH.parse("[]"), b) == LinComb.basis(b)


def _brute_shuffle(u: Word, v: Word) -> Counter:
    n = len(u.letters) + len(v.letters)
    out = Counter()
    for pos in itertools.combinations(range(n), len(u.letters)):
        it_u, it_v = iter(u.letters), iter(v.letters)
        out[Word(tuple(next(it_u) if i in pos else next(it_v) for i in range(n)))] += 1
    return out


def test_shuffle_deshuffle_pairing():
    words = [w for n in range(5) for w in words_of_weight(SYMBOLS, n)]
    for u, v in itertools.product(words, repeat=2):
        if T.degree(u) + T.degree(v) > 4:
            continue
        brute = _brute_shuffle(u, v)
        assert SH.product_basis(u, v) == LinComb(brute)
        for w in brute:
            assert T.coproduct_basis(w).coefficient((u, v)) == brute[w]
    for w in words:
        for (u, v), c in T.coproduct_basis(w).items():
            assert _brute_shuffle(u, v)[w] == c


def test_realized_bases():
    w = GR_SSYM.parse("231")
    assert str(gr_basis_to_word(GR_SSYM, w)) == "[12|1]"
    assert str(gr_basis_to_word(GR_SSYM, GR_SSYM.parse("4231"))) == "[1|12|1]"
    assert word_to_object(GR_SSYM, gr_basis_to_word(GR_SSYM, w)) == w
    assert GR_SSYM.degree(w) == 3 and GR_SSYM.length(w) == 2
    assert str(gr_basis_to_word(GR_SSYM, GR_SSYM.parse("2413"))) == "[2413]"


def test_reducible_letters_are_rejected():
    with pytest.raises(ReducibleLetterError):
        word_to_object(GR_SSYM, Word((parse_perm("21"),)))


def test_counit():
    assert HO.counit(HO.parse("()")) == 1
    assert HHO.counit(phi(parse_perm("21"))) == 0


def test_basis_type_is_checked():
    with pytest.raises(InvalidBasisError):
        HO.product_basis(HHO.parse("0(1())"), HO.parse("()"))


@given(objects("ordered", 4), objects("ordered", 3))
def test_ordered_product_coefficient_sum(x, y):
    k = len(ord_planted_components(x))
    prod = HO.product_basis(x, y)
    assert sum(prod.values()) == y.size ** k
    ly = len(y.children)
    assert all(ly <= len(t.children) <= ly + k for t in prod)
    assert all(t.size == x.size + y.size - 1 for t in prod)


@given(objects("heap", 4), objects("heap", 3))
def test_heap_product_terms_are_distinct(x, y):
    k = len(hot_planted_components(x))
    prod = HHO.product_basis(x, y)
    assert len(prod) == y.size ** k and set(prod.values()) == {Fraction(1)}


@pytest.mark.parametrize("alg", [HO, HHO], ids=str)
def test_tree_algebras_are_cocommutative(alg):
    for n in range(5):
        for x in alg.basis(n):
            cop = alg.coproduct_basis(x)
            assert cop == cop.map_basis(lambda p: (p[1], p[0]))


@pytest.mark.parametrize("alg", [GR_SSYM, GR_YSYM, QSYM], ids=str)
def test_shuffle_algebras_are_commutative(alg):
    for n in range(4):
        for m in range(4 - n):
            for x in alg.basis(n):
                for y in alg.basis(m):
                    assert alg.product_basis(x, y) == alg.product_basis(y, x)


def test_tree_products_are_noncommutative():
    x, y = HO.parse("(())"), HO.parse("(()())")
    assert HO.product_basis(x, y) != HO.product_basis(y, x)


def test_dual_basis_sizes():
    assert [len(GR_SSYM_DUAL.basis(n)) for n in range(6)] == [1, 1, 2, 6, 24, 120]
    assert [len(GR_YSYM.basis(n)) for n in range(6)] == [1, 1, 2, 5, 14, 42]
    assert tensor(HO.one(), HO.one()) == HO.coproduct(HO.one())
    assert len(enumerate_objects("ordered", 4)) == len(HO.basis(4))
