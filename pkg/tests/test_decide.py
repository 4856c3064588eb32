from fractions import Fraction

import pytest

from symcontain import (alpha, contains, default_config, nci_normal_form, nci_split,
                        resurgence, resurgence_estimate, threshold)
from symcontain.combinat import AcElem, NciElem
from symcontain.decide import ac_branch_not_contained, ac_power_split_exponent


@pytest.mark.parametrize("n,expected", [(3, Fraction(9, 7)), (4, Fraction(16, 13)), (5, Fraction(25, 21))])
def test_ac_resurgence(n, expected):
    assert resurgence(default_config("ac", n)) == expected


def test_nci_resurgence(nci2):
    assert resurgence(nci2) == Fraction(4, 3)


def test_thresholds(ac3, nci2):
    assert threshold(ac3, 2) == Fraction(15, 7)
    assert threshold(nci2, 2) == 2


def test_contains_examples(ac3, nci1):
    v = contains(ac3, 2, 2)
    assert not v.contained and v.witness == AcElem(3, 0, 1)
    assert contains(ac3, 3, 2).contained
    v = contains(nci1, 2, 2)
    assert not v.contained and v.witness == NciElem(1, 1, 0, 1)
    assert contains(nci1, 3, 2).contained


@pytest.mark.parametrize("method", ["closed_form", "lattice_witness", "oracle"])
def test_methods_agree(ac3, nci2, method):
    for cfg in (ac3, nci2):
        for m in range(1, 4):
            for r in range(1, 4):
                expect = contains(cfg, m, r).contained
                v = contains(cfg, m, r, method=method, max_degree=12)
                assert v.contained == expect, (cfg.label, m, r, method)


def test_m_below_r_has_witness(ac3, nci2):
    for cfg in (ac3, nci2):
        v = contains(cfg, 1, 3)
        assert not v.contained and v.witness is not None


def test_branch_form_matches_closed_form():
    for n in range(3, 9):
        cfg = default_config("ac", n)
        for m in range(1, 31):
            for r in range(1, 31):
                assert ac_branch_not_contained(n, m, r) == (not contains(cfg, m, r).contained)


def test_bad_method(ac3):
    with pytest.raises(ValueError):
        contains(ac3, 1, 1, method="guess")
    with pytest.raises(ValueError):
        contains(ac3, 0, 1)


# box maxima computed by scanning every pair; see the ledger for the stated values
NCI_EST = ["1", "1", "1", "1", "6/5", "6/5", "6/5", "6/5", "5/4", "5/4", "5/4", "5/4",
           "14/11", "14/11", "14/11", "14/11", "9/7", "9/7", "9/7"]
AC3_EST = ["1", "1", "1", "1", "6/5", "6/5", "6/5", "6/5", "6/5", "11/9", "11/9", "11/9", "11/9",
           "5/4", "5/4", "5/4", "5/4", "5/4", "5/4"]


def test_estimates_scanned_values(nci2, ac3):
    assert [resurgence_estimate(nci2, N) for N in range(2, 21)] == [Fraction(s) for s in NCI_EST]
    assert [resurgence_estimate(ac3, N) for N in range(2, 21)] == [Fraction(s) for s in AC3_EST]
    assert resurgence_estimate(nci2, 16, with_pair=True) == (Fraction(14, 11), 14, 11)


def test_estimates_below_resurgence():
    for cfg in (default_config("ac", 3), default_config("ac", 5), default_config("nci", 2)):
        rho = resurgence(cfg)
        assert all(resurgence_estimate(cfg, N) < rho for N in range(2, 40))
    with pytest.raises(ValueError):
        resurgence_estimate(cfg, 1)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_ac_alpha(n):
    cfg = default_config("ac", n)
    assert [alpha(cfg, ("symbolic", m)) for m in (1, 2, 3)] == [
        -(-m * (2 * n - 1) // n) for m in (1, 2, 3)]
    assert alpha(cfg, ("power", 4)) == 8


def test_nci_alpha(nci1, nci2):
    assert [alpha(nci1, ("symbolic", m)) for m in range(1, 6)] == [2, 3, 5, 6, 8]
    assert [alpha(nci2, ("symbolic", m)) for m in range(1, 6)] == [2, 4, 6, 8, 10]
    with pytest.raises(ValueError):
        alpha(nci2, ("symbolic", 0))


def test_splits(ac3, nci2):
    assert ac_power_split_exponent(ac3) == 3
    with pytest.raises(ValueError):
        ac_power_split_exponent(nci2)
    assert nci_split(nci2, 2, 3).relation == "Equal"
    res = nci_split(nci2, 1, 3)
    assert res.relation == "StrictSuperset" and res.witness == NciElem(2, 2, 0, 2)
    assert nci_normal_form(5) == {"power_of_I2": 2, "extra_factor_I": True}
    assert nci_normal_form(4) == {"power_of_I2": 2, "extra_factor_I": False}


@pytest.mark.parametrize("kind,n", [("ac", 3), ("ac", 4), ("ac", 5), ("nci", 1), ("nci", 2), ("nci", 3)])
def test_alpha_matches_hilbert_dims(kind, n):
    from symcontain.combinat import hilbert_dim
    cfg = default_config(kind, n)
    for k in range(1, 7):
        for ideal in (("symbolic", k), ("power", k)):
            a = alpha(cfg, ideal)
            assert all(hilbert_dim(cfg, ideal, d) == 0 for d in range(a))
            assert hilbert_dim(cfg, ideal, a) > 0


def test_m_below_r_never_contained():
    for cfg in (default_config("ac", 3), default_config("ac", 6), default_config("nci", 2)):
        for r in range(2, 25):
            for m in range(1, r):
                assert not contains(cfg, m, r).contained
