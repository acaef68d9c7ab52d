"""Exhaustive bialgebra axiom checks on all basis elements up to a total degree."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from hopf_forest.algebras import HopfAlgebra
from hopf_forest.lincomb import LinComb, lc_sum, tensor
from hopf_forest.machinery import iterated_coproduct

MAX_FAILURES_KEPT = 20


@dataclass
class AxiomReport:
    algebra: str
    max_degree: int
    counts: Counter = field(default_factory=Counter)
    failures: list[str] = field(default_factory=list)
    n_failures: int = 0

    @property
    def checked(self) -> int:
        return sum(self.counts.values())

    @property
    def passed(self) -> bool:
        return self.n_failures == 0

    def record(self, name: str, ok: bool, detail: str) -> None:
        self.counts[name] += 1
        if not ok:
            self.n_failures += 1
            if len(self.failures) < MAX_FAILURES_KEPT:
                self.failures.append(f"{name}: {detail}")


def multiply_tensor_squares(alg: HopfAlgebra, x: LinComb, y: LinComb) -> LinComb:
    """``(a1⊗a2)(b1⊗b2) = a1b1 ⊗ a2b2`` extended bilinearly."""
    out = []
    for (a1, a2), c in x.items():
        for (b1, b2), d in y.items():
            out.append(c * d * tensor(alg.product_basis(a1, b1), alg.product_basis(a2, b2)))
    return lc_sum(out)


def _by_degree(alg: HopfAlgebra, n: int) -> list[list]:
    return [alg.basis(d) for d in range(n + 1)]


def check_unit_counit(alg: HopfAlgebra, n: int, report: AxiomReport) -> None:
    one = alg.unit()
    for d, layer in enumerate(_by_degree(alg, n)):
        for a in layer:
            x = LinComb.basis(a)
            report.record("unit", alg.product_basis(one, a) == x == alg.product_basis(a, one), f"1·{a}")
            cop = alg.coproduct_basis(a)
            left = LinComb((q, c * alg.counit(p)) for (p, q), c in cop.items())
            right = LinComb((p, c * alg.counit(q)) for (p, q), c in cop.items())
            report.record("counit", left == x == right, f"(ε⊗id)Δ({a})")
            degrees_ok = all(alg.degree(p) + alg.degree(q) == d for p, q in cop)
            report.record("coproduct-graded", degrees_ok, f"Δ({a})")


def check_associativity(alg: HopfAlgebra, n: int, report: AxiomReport) -> None:
    layers = _by_degree(alg, n)
    for da in range(n + 1):
        for db in range(n + 1 - da):
            for dc in range(n + 1 - da - db):
                for a in layers[da]:
                    for b in layers[db]:
                        ab = alg.product_basis(a, b)
                        for c in layers[dc]:
                            lhs = alg.multiply(ab, LinComb.basis(c))
                            rhs = alg.multiply(LinComb.basis(a), alg.product_basis(b, c))
                            report.record("associativity", lhs == rhs, f"({a}·{b})·{c}")


def check_coassociativity(alg: HopfAlgebra, n: int, report: AxiomReport) -> None:
    for layer in _by_degree(alg, n):
        for a in layer:
            ok = iterated_coproduct(alg, a, 2, "left") == iterated_coproduct(alg, a, 2, "right")
            report.record("coassociativity", ok, f"Δ^(2)({a})")


def check_compatibility(alg: HopfAlgebra, n: int, report: AxiomReport) -> None:
    layers = _by_degree(alg, n)
    for da in range(n + 1):
        for db in range(n + 1 - da):
            for a in layers[da]:
                for b in layers[db]:
                    ab = alg.product_basis(a, b)
                    graded = all(alg.degree(x) == da + db for x in ab)
                    report.record("product-graded", graded, f"{a}·{b}")
                    lhs = alg.coproduct(ab)
                    rhs = multiply_tensor_squares(alg, alg.coproduct_basis(a), alg.coproduct_basis(b))
                    report.record("compatibility", lhs == rhs, f"Δ({a}·{b})")
                    eps = alg.counit_of(ab) == alg.counit(a) * alg.counit(b)
                    report.record("counit-multiplicative", eps, f"ε({a}·{b})")


def verify_axioms(alg: HopfAlgebra, max_degree: int) -> AxiomReport:
    report = AxiomReport(alg.name, max_degree)
    check_unit_counit(alg, max_degree, report)
    check_associativity(alg, max_degree, report)
    check_coassociativity(alg, max_degree, report)
    check_compatibility(alg, max_degree, report)
    return report


def check_cocommutative(alg: HopfAlgebra, max_degree: int) -> AxiomReport:
    report = AxiomReport(alg.name, max_degree)
    for layer in _by_degree(alg, max_degree):
        for a in layer:
            cop = alg.coproduct_basis(a)
            report.record("cocommutativity", cop == cop.map_basis(lambda p: (p[1], p[0])), f"Δ({a})")
    return report


def check_commutative(alg: HopfAlgebra, max_degree: int) -> AxiomReport:
    report = AxiomReport(alg.name, max_degree)
    layers = _by_degree(alg, max_degree)
    for da in range(max_degree + 1):
        for db in range(da, max_degree + 1 - da):
            for a in layers[da]:
                for b in layers[db]:
                    ok = alg.product_basis(a, b) == alg.product_basis(b, a)
                    report.record("commutativity", ok, f"{a}·{b}")
    return report
