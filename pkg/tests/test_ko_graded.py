import pytest
from hypothesis import given, strategies as st

from pinko import ko_graded as ko
from pinko.kappa import beta
from pinko.ko_graded import (KOClass, Lam4, Torsion, ZERO_IMAGE, act, basis, bott_shift, c_class,
                             eta, gamma, lam, mul_eta, mul_gamma, nu2, phi, submodule_phi_image)
from pinko.rep_ring import A, B, D, H, K, ONE, phi0
from strategies import ko_classes, rep_elems


def times(x, step, n):
    for _ in range(n):
        x = step(x)
    return x


def test_lambda_c_relations():
    assert act(H, lam()) == c_class().scale(4)
    assert act(H, c_class()) == act(A + 2 + 2 * D, lam())
    assert act(D, c_class()) == c_class()
    assert act(B, lam()) == KOClass(4, Lam4(-2, (-2,), (4,)))


def test_gamma_eta_annihilators():
    for r in (D + 1, 2 * A, B):
        assert act(r, gamma()).is_zero()
    for r in (D + 1, A, B):
        assert act(r, eta()).is_zero()
    # A*gamma is a nonzero 2-torsion class
    assert not act(A, gamma()).is_zero()


def test_products():
    assert mul_gamma(eta()) == KOClass(0, ONE - D)
    assert mul_gamma(lam()) == times(eta(), mul_eta, 2)
    assert bott_shift(times(ko.unit(0), mul_gamma, 8), 8) == KOClass(0, 8 * (ONE - D))
    assert mul_eta(lam()) == times(ko.unit(8), mul_gamma, 3)
    assert mul_eta(c_class()).is_zero()
    assert mul_eta(mul_eta(lam())) == KOClass(6, Torsion(2))


def test_payload_validation():
    with pytest.raises(TypeError):
        KOClass(4, 3)
    with pytest.raises(ValueError):
        KOClass(6, Torsion(1, (1,)))
    assert KOClass(2, 5).payload == Torsion(5)
    with pytest.raises(ValueError):
        bott_shift(eta(), 4)
    with pytest.raises(ValueError):
        eta() + lam()


@pytest.mark.parametrize("k", range(1, 17))
def test_gamma_ladder(k):
    for x in basis(k, 4):
        y = x
        for j in range(9):
            assert phi(y) == 2 ** beta(k, j) * phi(x), (k, j, str(x))
            y = mul_gamma(y)


@given(ko_classes(), rep_elems)
def test_phi_is_multiplicative(x, r):
    assert phi(act(r, x)) == phi0(r) * phi(x)


@given(st.integers(-12, 12).flatmap(lambda g: st.tuples(ko_classes(g), ko_classes(g))), rep_elems, rep_elems)
def test_action_is_a_module_structure(pair, r, s):
    x, y = pair
    assert act(r, x + y) == act(r, x) + act(r, y)
    assert act(r * s, x) == act(r, act(s, x))
    assert act(r + s, x) == act(r, x) + act(s, x)


@given(ko_classes(), rep_elems)
def test_gamma_and_eta_are_module_maps(x, r):
    assert mul_gamma(act(r, x)) == act(r, mul_gamma(x))
    assert mul_eta(act(r, x)) == act(r, mul_eta(x))


def test_submodule_phi_image():
    assert submodule_phi_image([KOClass(0, K - 2 * H + D + 5)]) == 2
    assert submodule_phi_image([c_class()]) == ZERO_IMAGE
    assert submodule_phi_image([]) == ZERO_IMAGE
    with pytest.raises(ValueError):
        submodule_phi_image([lam(), eta()])
    assert nu2(-48) == 4
