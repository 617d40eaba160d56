
import pytest
from hypothesis import given, settings, strategies as st

from pinko import obstruction as ob
from pinko.catalog import builtin_catalog
from pinko.obstruction import ALLOWED, EXCLUDED, NOT_APPLICABLE, FormSpec

CAT = builtin_catalog()
R = CAT.resolve
ENTRIES = list(CAT)


def test_formspec_validation():
    with pytest.raises(ob.InputError):
        FormSpec(-1, 0)
    with pytest.raises(ob.InputError):
        FormSpec(0, True)


@pytest.mark.parametrize("Y", ENTRIES, ids=lambda e: e.name)
def test_product_cobordism_allowed(Y):
    assert ob.check_thm_1_6(Y, Y, FormSpec(0, 0)).status == ALLOWED


def test_cobordism_examples():
    neg = R("-Sigma(2,3,11)")
    v = ob.check_thm_1_6(R("S3"), neg, FormSpec(10, 11))
    assert v.excluded
    assert any(c.lhs == c.rhs + 1 for c in v.certificates)
    lhs, rhs, _ = ob._cobordism_sides(R("S3"), neg, FormSpec(0, 1), 2)
    assert lhs == 0 and rhs == 0
    assert neg.kappa[3] >= -1


def test_cobordism_parity_is_input_error():
    with pytest.raises(ob.InputError):
        ob.check_thm_1_6(R("S3"), R("Sigma(2,3,7)"), FormSpec(0, 1))


@settings(deadline=None)
@given(st.sampled_from(ENTRIES), st.sampled_from(ENTRIES), st.integers(0, 20), st.integers(0, 20),
       st.randoms(use_true_random=False))
def test_scan_order_irrelevant(Y0, Y1, p, q, rnd):
    if (p - Y0.mu - Y1.mu) % 2:
        return
    ks = list(range(8))
    rnd.shuffle(ks)
    assert ob.check_thm_1_6(Y0, Y1, FormSpec(p, q), ks) == ob.check_thm_1_6(Y0, Y1, FormSpec(p, q))


def test_split_refinement_applicability():
    assert ob.check_thm_1_11(R("Sigma(2,3,17)"), R("S3"), FormSpec(1, 1)).status == NOT_APPLICABLE
    assert ob.check_thm_1_11(R("Sigma(2,3,11)"), R("S3"), FormSpec(0, 1)).status == NOT_APPLICABLE
    v = ob.check_thm_1_11(R("-Sigma(2,3,17)"), R("S3"), FormSpec(1, 1))
    assert v.status == ALLOWED
    with pytest.raises(ob.InputError):
        ob.check_thm_1_11(R("-Sigma(2,3,17)"), R("S3"), FormSpec(0, 1))
    with pytest.raises(ob.InputError):
        ob.check_thm_1_11(R("S3"), R("S3"), FormSpec(0, 0))


@pytest.mark.parametrize("Y", ENTRIES, ids=lambda e: e.name)
def test_bounding_is_the_split_refinement_from_s3(Y):
    s3 = R("S3")
    for p in range(Y.mu, 20, 2):
        for q in range(1, 25):
            form = FormSpec(p, q)
            assert ob.check_bounding(Y, form).status == ob.check_thm_1_11(s3, Y, form).status


def test_bounding_examples():
    s3 = R("S3")
    assert ob.check_bounding(s3, FormSpec(4, 5)).excluded
    assert not ob.check_bounding(s3, FormSpec(4, 6)).excluded
    Y = R("-Sigma(2,3,17)")
    for l in range(3):
        assert ob.check_bounding(Y, FormSpec(8 * l + 5, 8 * l + 8)).excluded
        assert not ob.check_bounding(Y, FormSpec(8 * l + 5, 8 * l + 9)).excluded
        assert ob.check_bounding(R("-Sigma(2,3,7)"), FormSpec(8 * l + 3, 8 * l + 3)).excluded
    with pytest.raises(ob.InputError):
        ob.check_bounding(s3, FormSpec(1, 3))
    with pytest.raises(ob.InputError):
        ob.check_bounding(s3, FormSpec(2, 0))


def test_certificate_sides_recompute():
    v = ob.check_bounding(R("S3"), FormSpec(4, 5))
    c = v.certificates[0]
    i, lhs, rhs = ob.bounding_sides(R("S3"), FormSpec(4, 5))
    assert (c.k, c.lhs, c.rhs) == (i, lhs, rhs)


def test_sphere_route_examples():
    assert ob.route_sphere_prop31(R("Sigma(2,3,13)"), FormSpec(8, 10)).excluded
    assert ob.route_sphere_prop31(R("Sigma(2,3,17)"), FormSpec(9, 10)).excluded
    assert ob.route_sphere_prop31(R("Sigma(2,3,13)"), FormSpec(8, 11)).status == ALLOWED
    assert ob.route_sphere_prop31(R("Sigma(2,3,13)"), FormSpec(4, 1)).status == NOT_APPLICABLE
    assert ob.route_sphere_prop31(R("Sigma(2,3,11)"), FormSpec(8, 1)).status == NOT_APPLICABLE
    assert ob.route_sphere_prop31(R("S3"), FormSpec(0, 1)).status == NOT_APPLICABLE


def test_prop31_examples():
    c = ob.prop31_certify(0, 0, 1, 0, 12)
    assert c.details["p_solutions"] == [1, -1]
    assert c.details["rank"] == c.details["unknowns"]
    c = ob.prop31_certify(1, 2, 1, 1, 12)
    assert c.details["p_solutions"] == [1, -1]
    with pytest.raises(ob.NotApplicableError):
        ob.prop31_certify(0, 0, 0, 0)


def test_fukumoto_furuta_examples():
    assert ob.route_fukumoto_furuta(R("-Sigma(2,3,11)"), FormSpec(8, 10)).excluded
    assert not ob.route_fukumoto_furuta(R("-Sigma(2,3,11)"), FormSpec(8, 11)).excluded
    assert ob.route_fukumoto_furuta(R("-Sigma(2,3,7)"), FormSpec(9, 10)).excluded
    assert ob.route_fukumoto_furuta(R("-Sigma(2,3,11)"), FormSpec(6, 10)).status == NOT_APPLICABLE
    assert ob.route_fukumoto_furuta(R("S3"), FormSpec(8, 10)).status == NOT_APPLICABLE


def test_closed_examples():
    assert ob.closed_check(FormSpec(8, 9)).excluded
    assert ob.closed_check(FormSpec(8, 10)).excluded
    assert not ob.closed_check(FormSpec(8, 11)).excluded
    assert ob.closed_check(FormSpec(2, 2)).excluded
    assert not ob.closed_check(FormSpec(2, 3)).excluded
    assert ob.closed_check(FormSpec(6, 8)).excluded
    assert not ob.closed_check(FormSpec(6, 9)).excluded
    assert ob.closed_check(FormSpec(8, 10)).certificates[0].details["via"] == ob.SPHERE
    with pytest.raises(ob.InputError):
        ob.closed_check(FormSpec(3, 5))


@pytest.mark.parametrize("Y", [e for e in ENTRIES if e.is_brieskorn], ids=lambda e: e.name)
def test_monotone_in_q(Y):
    for p in range(Y.mu, 34, 2):
        seen_allowed = False
        for q in range(1, p + 8):
            excl = ob.bounding_report(Y, FormSpec(p, q), CAT).status == EXCLUDED
            assert not (seen_allowed and excl), (p, q)
            seen_allowed |= not excl


def test_best_bound_examples():
    assert ob.best_bound(R("Sigma(2,3,11)"), 2) == 0
    assert ob.best_bound(R("-Sigma(2,3,17)"), 5) == 4
    assert ob.best_bound(R("Sigma(2,3,13)"), 0) == 3
    with pytest.raises(ob.InputError):
        ob.best_bound(R("Sigma(2,3,13)"), 1)


def test_excluded_verdict_needs_certificate():
    with pytest.raises(ob.ConsistencyError):
        ob.Verdict(EXCLUDED)


def test_all_excluding_routes_reported():
    rep = ob.bounding_report(R("-Sigma(2,3,11)"), FormSpec(8, 8), CAT)
    assert {c.route for c in rep.certificates} == {ob.COR_1_12, ob.FF}
