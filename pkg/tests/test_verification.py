from hopf_forest.algebras import GR_SSYM, HO, QSYM, OrderedTreeAlgebra
from hopf_forest.lincomb import LinComb
from hopf_forest.verification import check_commutative, check_cocommutative, verify_axioms


class DroppedTerm(OrderedTreeAlgebra):
    """HO with one coproduct term removed, to show the checks can fail."""

    name = "HO-broken"

    def _coproduct(self, x):
        cop = super()._coproduct(x)
        if x.degree == 2 and len(x.children) == 2:
            e = self.unit()
            cop = cop - LinComb({(e, x): 1})
        return cop


class LopsidedProduct(OrderedTreeAlgebra):
    name = "HO-lopsided"

    def _product(self, x, y):
        out = super()._product(x, y)
        return out + out if x.degree == 1 and y.degree == 1 else out


def test_axioms_pass_on_small_degrees():
    for alg in (HO, GR_SSYM, QSYM):
        report = verify_axioms(alg, 3)
        assert report.passed, report.failures
        assert report.counts["associativity"] > 0 and report.counts["compatibility"] > 0


def test_broken_coproduct_is_caught():
    report = verify_axioms(DroppedTerm(), 3)
    assert not report.passed
    assert any(f.startswith("counit") for f in report.failures)


def test_broken_product_is_caught():
    report = verify_axioms(LopsidedProduct(), 3)
    assert not report.passed
    assert report.n_failures >= len(report.failures) > 0


def test_commutativity_checks():
    assert check_cocommutative(HO, 4).passed
    assert not check_commutative(HO, 3).passed
    assert check_commutative(QSYM, 4).passed
