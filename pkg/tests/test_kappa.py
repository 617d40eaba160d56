from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from pinko.catalog import builtin_catalog
from pinko.kappa import (HalfInt, ModelSpace, SpectrumClass, alpha, beta, h_value, half_H_suspend_kappa,
                         kappa_of_class, kappa_table, model_kappa)

half_ints = st.integers(-40, 40).map(HalfInt)
models = st.sampled_from(list(ModelSpace))
classes = st.builds(SpectrumClass, models, st.integers(-20, 20), half_ints)


def test_halfint_basics():
    assert HalfInt.of("3/2") == HalfInt(3)
    assert str(HalfInt(-1)) == "-1/2"
    assert HalfInt.of(2) + HalfInt(1) == HalfInt.of(Fraction(5, 2))
    assert HalfInt(3) > 1
    with pytest.raises(ValueError):
        HalfInt.of(Fraction(1, 3))


def test_alpha_beta():
    assert [alpha(i) for i in range(8)] == [0, 1, 1, 1, 0, 1, 0, 0]
    assert beta(5, 1) == 1 and beta(0, 1) == 0
    with pytest.raises(ValueError):
        beta(0, -1)


@given(st.integers(-50, 50))
def test_beta_period(k):
    assert beta(k, 8) == 4
    assert beta(k, 0) == 0


@given(st.integers(-50, 50), st.integers(0, 20), st.integers(0, 20))
def test_beta_telescopes(k, i, j):
    assert beta(k, i + j) == beta(k, i) + beta(k - i, j)


def test_h_table():
    assert [h_value(0, m) for m in range(4)] == [0, HalfInt(5), 3, HalfInt(3)]
    assert [h_value(1, m) for m in range(4)] == [0, HalfInt(1), 3, HalfInt(7)]


def test_model_kappa():
    assert [model_kappa(ModelSpace.GTilde, k) for k in range(8)] == [1, 1, 1, 0, 0, 0, 0, 0]
    assert [model_kappa(ModelSpace.TTilde, k) for k in range(8)] == [2, 2, 1, 0, 0, 0, 0, 1]
    with pytest.raises(ValueError):
        model_kappa(ModelSpace.S0, 8)


@given(classes, st.integers(0, 3), st.integers(0, 3))
def test_representative_independence(s, dm, dn):
    base = kappa_of_class(s)
    M = max(1, -(-(s.a + 8) // 8)) + dm
    N = max(0, -(-(s.b.doubled // 2) // 2)) + dn
    assert kappa_of_class(s, M, N) == base


@given(classes)
def test_bott_periodicity_and_2H_suspension(s):
    assert kappa_of_class(s.suspend(d=8)) == kappa_of_class(s)
    assert kappa_of_class(s.suspend(h=2)) == kappa_of_class(s) + 2


@given(classes)
def test_D_suspension_drops_by_at_most_alpha(s):
    assert kappa_of_class(s) <= kappa_of_class(s.suspend(d=1)) + alpha(s.level + 1)


def test_negative_representative_rejected():
    with pytest.raises(ValueError):
        kappa_of_class(SpectrumClass(ModelSpace.S0, 0, HalfInt(0)), M=0)


@pytest.mark.parametrize("entry", list(builtin_catalog()), ids=lambda e: e.name)
def test_half_H_closed_forms(entry):
    for p in range(18):
        for k in range(8):
            want = kappa_of_class(entry.spectrum.suspend(d=k, h=HalfInt(p)))
            assert half_H_suspend_kappa(entry.kappa, entry.mu, p, k) == want


def test_kappa_table_s3():
    assert kappa_table(SpectrumClass(ModelSpace.S0, 0, 0)) == tuple(HalfInt(0) for _ in range(8))
