import json
import math

import pytest

from hopf_forest.algebras import GR_SSYM_DUAL, GR_YSYM, GR_YSYM_DUAL, HHO, HO
from hopf_forest.combinatorics import catalan, enumerate_objects, parse_pbt, parse_perm, phi, psi
from hopf_forest.errors import ReducibleLetterError
from hopf_forest.isomorphisms import (
    DUAL_OF,
    PHI,
    PSI,
    freeness_report,
    get_iso,
    iso_apply,
    iso_apply_lc,
    iso_inverse,
    triangularity_certificate,
    verify_hopf_morphism,
    word_counts,
)
from hopf_forest.lincomb import LinComb
from hopf_forest.machinery import eulerian, is_primitive
from hopf_forest.words import Word


def test_psi_on_generators():
    for n in range(1, 6):
        for t in enumerate_objects("irreducible-pbt", n):
            assert iso_apply(PSI, Word((t,))) == LinComb.basis(psi(t))


def test_psi_on_two_letters():
    t = parse_pbt("(L L)")
    expected = LinComb({HO.parse("((()))"): 1, HO.parse("(()())"): 1})
    assert iso_apply(PSI, Word((t, t))) == expected


def test_phi_on_generators():
    assert iso_apply(PHI, Word((parse_perm("1"),))) == LinComb.basis(phi(parse_perm("1")))
    w = parse_perm("213")
    assert iso_apply(PHI, w) == eulerian(HHO, phi(w))


def test_empty_word_goes_to_unit():
    assert iso_apply(PSI, Word()) == HO.one()
    assert iso_apply(PHI, GR_SSYM_DUAL.unit()) == HHO.one()


def test_reducible_letter_is_rejected():
    with pytest.raises(ReducibleLetterError):
        iso_apply(PHI, Word((parse_perm("21"),)))


def test_generator_images_are_primitive():
    for n in range(1, 6):
        for t in enumerate_objects("irreducible-pbt", n):
            assert is_primitive(HO, iso_apply(PSI, Word((t,))))
    for n in range(1, 5):
        for w in enumerate_objects("irreducible-perm", n):
            assert is_primitive(HHO, iso_apply(PHI, Word((w,))))


def test_phi_image_of_single_letter_coproduct():
    w = GR_SSYM_DUAL.parse("12")
    image = iso_apply(PHI, w)
    e = HHO.unit()
    expected = LinComb({(e, x): c for x, c in image.items()}) + LinComb({(x, e): c for x, c in image.items()})
    assert HHO.coproduct(image) == expected


@pytest.mark.parametrize("iso,n", [(PSI, 4), (PHI, 3)], ids=["PSI", "PHI"])
def test_morphism_small(iso, n):
    report = verify_hopf_morphism(iso, n)
    assert report.passed, report.failures
    assert report.checked > 0


def test_certificate_small_degrees():
    for iso in (PSI, PHI):
        cert = triangularity_certificate(iso, 1)
        assert cert.matrix == [[1]] and cert.unitriangular
    cert = triangularity_certificate(PSI, 2)
    assert cert.dimension == 2 and cert.unitriangular
    # columns: [((L L) L)] -> ((())), [(L L)|(L L)] -> ((())) + (()())
    assert cert.matrix == [[1, 1], [0, 1]]
    cert = triangularity_certificate(PHI, 3)
    assert cert.dimension == 6 and cert.unitriangular and all(cert.leading_flags)
    # leading row j holds phi of the j-th source word
    assert [str(t) for t in cert.target_basis] == [str(phi(w)) for w in cert.source_basis]


def test_certificate_json():
    data = triangularity_certificate(PHI, 3).to_json()
    assert data["unitriangular"] is True
    assert all(isinstance(c, str) for row in data["matrix"] for c in row)
    assert "-1/2" in {c for row in data["matrix"] for c in row}
    json.dumps(data)


@pytest.mark.parametrize("n", range(1, 5))
def test_certificate_dimensions(n):
    assert triangularity_certificate(PSI, n).dimension == catalan(n)
    assert triangularity_certificate(PHI, n).dimension == math.factorial(n)


@pytest.mark.parametrize("iso,n", [(PSI, 4), (PHI, 3)], ids=["PSI", "PHI"])
def test_inverse(iso, n):
    for x in iso.target.basis(n):
        pre = iso_inverse(iso, LinComb.basis(x))
        assert iso_apply_lc(iso, pre) == LinComb.basis(x)


def test_duality_with_shuffle_algebra():
    """Product constants of HO, pulled back through PSI, are the coproduct
    constants of GR_YSYM; coproduct constants of HO are its product constants."""
    assert DUAL_OF["PSI"] is GR_YSYM
    words = [w for n in range(5) for w in GR_YSYM_DUAL.basis(n)]
    for u in words:
        for v in words:
            du, dv = GR_YSYM_DUAL.degree(u), GR_YSYM_DUAL.degree(v)
            if du + dv > 4:
                continue
            pulled = iso_inverse(PSI, HO.multiply(iso_apply(PSI, u), iso_apply(PSI, v)))
            for w in GR_YSYM.basis(du + dv):
                assert pulled.coefficient(w) == GR_YSYM.coproduct_basis(w).coefficient((u, v))
    for t in (x for n in range(5) for x in HO.basis(n)):
        pre = iso_inverse(PSI, LinComb.basis(t))
        cop = HO.coproduct_basis(t)
        for s in pre:
            for (u, v), d in GR_YSYM_DUAL.coproduct_basis(s).items():
                assert d == GR_YSYM.product_basis(u, v).coefficient(s)
        back = LinComb()
        for s, c in pre.items():
            for (u, v), d in GR_YSYM_DUAL.coproduct_basis(s).items():
                for (a, ca) in iso_apply(PSI, u).items():
                    for (b, cb) in iso_apply(PSI, v).items():
                        back = back + LinComb({(a, b): c * d * ca * cb})
        assert back == cop


def test_freeness():
    for target in ("HO", "HHO"):
        report = freeness_report(target, 5)
        assert report.passed
    rows = freeness_report("HHO", 5).rows
    assert [r.target_dim for r in rows] == [1, 1, 2, 6, 24, 120]
    assert rows[5].generator_dims == [1, 1, 3, 13, 71]
    assert word_counts([0, 1, 1, 2, 5, 14], 5) == [catalan(n) for n in range(6)]


def test_freeness_rejects_unknown_target():
    with pytest.raises(ValueError):
        freeness_report("QSYM", 3)


def test_get_iso():
    assert get_iso("psi") is PSI and get_iso("PHI") is PHI
    with pytest.raises(ValueError):
        get_iso("chi")
