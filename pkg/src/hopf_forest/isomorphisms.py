"""The Hopf isomorphisms PSI: GR_YSYM_DUAL -> HO and PHI: GR_SSYM_DUAL -> HHO.

Both source algebras are tensor algebras on \\-irreducible letters, so each map is
fixed by its values on letters: ``PSI(t) = psi(t)`` and ``PHI(w) = e(phi(w))``.
A general word goes to the product of the images of its letters.
"""

from __future__ import annotations

import dataclasses
import itertools
import math
from collections.abc import Callable, Hashable
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from hopf_forest.algebras import GR_SSYM, GR_SSYM_DUAL, GR_YSYM, GR_YSYM_DUAL, HHO, HO, HopfAlgebra, RealizedWordAlgebra
from hopf_forest.combinatorics import catalan, enumerate_objects, order_pair, phi, psi
from hopf_forest.errors import ReducibleLetterError
from hopf_forest.lincomb import LinComb, format_rational, lc_sum, tensor_map
from hopf_forest.machinery import eulerian
from hopf_forest.words import Word


@dataclass(eq=False)
class Isomorphism:
    name: str
    source: RealizedWordAlgebra
    target: HopfAlgebra
    generator_image: Callable[[Hashable], LinComb]
    leading_tree: Callable[[Hashable], Hashable]
    # rank used for triangularity: higher means higher order
    rank: Callable[[Hashable], tuple]
    rank_description: str
    _cache: dict = field(default_factory=dict, repr=False)

    def __str__(self) -> str:
        return self.name


def _psi_rank(x) -> tuple:
    return (len(x.children),)


def _phi_rank(x) -> tuple:
    return order_pair(x).sort_key()


PSI = Isomorphism(
    "PSI", GR_YSYM_DUAL, HO,
    generator_image=lambda t: LinComb.basis(psi(t)),
    leading_tree=psi,
    rank=_psi_rank,
    rank_description="planted-component count; ties broken by canonical string",
)

PHI = Isomorphism(
    "PHI", GR_SSYM_DUAL, HHO,
    generator_image=lambda w: eulerian(HHO, phi(w)),
    leading_tree=phi,
    rank=_phi_rank,
    rank_description="order pair (k,l): larger k, then smaller l; ties broken by canonical string",
)

ISOMORPHISMS = {"psi": PSI, "phi": PHI, "PSI": PSI, "PHI": PHI}

# the shuffle algebras whose graded duals are the sources
DUAL_OF = {"PSI": GR_YSYM, "PHI": GR_SSYM}


def get_iso(name: str) -> Isomorphism:
    try:
        return ISOMORPHISMS[name]
    except KeyError:
        raise ValueError(f"unknown isomorphism {name!r}; expected psi or phi") from None


def _letters(iso: Isomorphism, w: Word | Hashable) -> tuple:
    if isinstance(w, Word):
        for a in w.letters:
            if not iso.source.alphabet.is_letter(a):
                raise ReducibleLetterError(f"letter {a} of {w} is not \\-irreducible")
        return w.letters
    iso.source.check(w)
    return iso.source.to_word(w).letters


def iso_apply(iso: Isomorphism, w: Word | Hashable) -> LinComb:
    """Image of a source basis element, given as a word of letters or as the object itself."""
    letters = _letters(iso, w)
    if letters in iso._cache:
        return iso._cache[letters]
    out = iso.target.one()
    for a in letters:
        out = iso.target.multiply(out, iso.generator_image(a))
    iso._cache[letters] = out
    return out


def iso_apply_lc(iso: Isomorphism, a: LinComb) -> LinComb:
    return lc_sum(c * iso_apply(iso, b) for b, c in a.items())


@dataclass
class MorphismReport:
    iso: str
    max_degree: int
    checked: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


def verify_hopf_morphism(iso: Isomorphism, max_degree: int) -> MorphismReport:
    """Check multiplicativity on all basis pairs and compatibility with coproducts
    on all basis elements, up to total degree ``max_degree``."""
    src, tgt = iso.source, iso.target
    report = MorphismReport(iso.name, max_degree)
    by_degree = [src.basis(d) for d in range(max_degree + 1)]
    for da in range(max_degree + 1):
        for a in by_degree[da]:
            for db in range(max_degree + 1 - da):
                for b in by_degree[db]:
                    lhs = iso_apply_lc(iso, src.product_basis(a, b))
                    rhs = tgt.multiply(iso_apply(iso, a), iso_apply(iso, b))
                    report.checked += 1
                    if lhs != rhs:
                        report.failures.append(f"product: {iso.name}({a}·{b}) != {iso.name}({a})·{iso.name}({b})")
            lhs = tgt.coproduct(iso_apply(iso, a))
            image = lambda b: iso_apply(iso, b)
            rhs = tensor_map((image, image), src.coproduct_basis(a))
            report.checked += 1
            if lhs != rhs:
                report.failures.append(f"coproduct: Δ({iso.name}({a})) != ({iso.name}⊗{iso.name})Δ({a})")
    return report


@dataclass
class TriangularityCertificate:
    """Matrix of ``iso`` in one degree, rows and columns sorted by order.

    ``matrix[i][j]`` is the coefficient of ``target_basis[i]`` in the image of
    ``source_basis[j]``; column ``j`` has its leading tree in row ``j``.
    """

    iso: str
    degree: int
    source_basis: list
    target_basis: list
    matrix: list[list[Fraction]]
    leading_rows: list[int]
    leading_flags: list[bool]
    unitriangular: bool
    ordering: str

    @property
    def dimension(self) -> int:
        return len(self.source_basis)

    def to_json(self) -> dict[str, Any]:
        return {
            "iso": self.iso,
            "degree": self.degree,
            "ordering": self.ordering,
            "source_basis": [str(b) for b in self.source_basis],
            "target_basis": [str(b) for b in self.target_basis],
            "matrix": [[format_rational(c) for c in row] for row in self.matrix],
            "leading_rows": self.leading_rows,
            "leading_flags": self.leading_flags,
            "unitriangular": self.unitriangular,
        }


def _row_key(iso: Isomorphism) -> Callable[[Hashable], tuple]:
    return lambda x: (iso.rank(x), str(x))


def triangularity_certificate(iso: Isomorphism, degree: int) -> TriangularityCertificate:
    key = _row_key(iso)
    rows = sorted(iso.target.basis(degree), key=key)
    cols = sorted(iso.source.basis(degree), key=lambda s: key(iso.leading_tree(s)))
    row_index = {x: i for i, x in enumerate(rows)}
    matrix = [[Fraction(0)] * len(cols) for _ in rows]
    leading_rows, flags = [], []
    for j, s in enumerate(cols):
        image = iso_apply(iso, s)
        for x, c in image.items():
            matrix[row_index[x]][j] = c
        lead = iso.leading_tree(s)
        leading_rows.append(row_index[lead])
        top = iso.rank(lead)
        flags.append(image.coefficient(lead) == 1
                     and all(iso.rank(x) < top for x in image if x != lead))
    square = len(rows) == len(cols)
    unitri = square and all(
        leading_rows[j] == j and matrix[j][j] == 1 and all(matrix[i][j] == 0 for i in range(j + 1, len(rows)))
        for j in range(len(cols)))
    return TriangularityCertificate(iso.name, degree, cols, rows, matrix, leading_rows, flags,
                                    unitri, iso.rank_description)


def iso_inverse(iso: Isomorphism, element: LinComb) -> LinComb:
    """Preimage of a target element, by back-substitution along the order."""
    key = _row_key(iso)
    preimage = {}
    remaining = element
    inverse_leading: dict[Hashable, Hashable] = {}
    while remaining:
        top = max(remaining, key=lambda x: (iso.target.degree(x),) + key(x))
        if top not in inverse_leading:
            for s in iso.source.basis(iso.target.degree(top)):
                inverse_leading[iso.leading_tree(s)] = s
        s = inverse_leading[top]
        image = iso_apply(iso, s)
        c = remaining[top] / image[top]
        preimage[s] = preimage.get(s, 0) + c
        remaining = remaining - c * image
    return LinComb(preimage)


@dataclass
class FreenessRow:
    degree: int
    target_dim: int
    generator_dims: list[int]
    word_count: int
    reference_dim: int

    @property
    def ok(self) -> bool:
        return self.target_dim == self.word_count == self.reference_dim


@dataclass
class FreenessReport:
    target: str
    rows: list[FreenessRow]
    generator_check: list[tuple[int, int, int]]

    @property
    def passed(self) -> bool:
        return all(r.ok for r in self.rows) and all(a == b for _, a, b in self.generator_check)

    def to_json(self) -> dict[str, Any]:
        return {
            "target": self.target,
            "passed": self.passed,
            "rows": [dataclasses.asdict(r) for r in self.rows],
            "generator_check": self.generator_check,
        }


def word_counts(generator_dims: list[int], max_degree: int) -> list[int]:
    """Number of words of each total weight; ``generator_dims[i]`` letters have weight ``i``."""
    counts = [1] + [0] * max_degree
    for n in range(1, max_degree + 1):
        counts[n] = sum(generator_dims[i] * counts[n - i] for i in range(1, n + 1))
    return counts


def freeness_report(target: str, max_degree: int) -> FreenessReport:
    """Compare target dimensions with word counts over the free generators.

    HO is generated by planted trees, HHO by \\-irreducible heap-ordered trees.
    The generator counts are cross-checked against Catalan numbers (HO) or a
    brute-force global-descent filter over all permutations (HHO).
    """
    if target == "HO":
        gen_kind, alg = "planted", HO
        reference = [catalan(n) for n in range(max_degree + 1)]
        independent = [0] + [catalan(n - 1) for n in range(1, max_degree + 1)]
    elif target == "HHO":
        gen_kind, alg = "irreducible-heap", HHO
        reference = [math.factorial(n) for n in range(max_degree + 1)]
        independent = [0]
        for n in range(1, max_degree + 1):
            independent.append(sum(
                1 for p in itertools.permutations(range(1, n + 1))
                if all(min(p[:q]) <= max(p[q:]) for q in range(1, n))))
    else:
        raise ValueError(f"freeness is reported for HO or HHO, not {target!r}")
    gens = [0] + [len(enumerate_objects(gen_kind, n)) for n in range(1, max_degree + 1)]
    counts = word_counts(gens, max_degree)
    rows = [FreenessRow(n, len(alg.basis(n)), gens[1:n + 1], counts[n], reference[n])
            for n in range(max_degree + 1)]
    check = [(n, gens[n], independent[n]) for n in range(1, max_degree + 1)]
    return FreenessReport(target, rows, check)
