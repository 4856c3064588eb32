import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from symcontain import combinat
from symcontain.combinat import AcElem, NciElem


def test_ac_symbolic_membership():
    # F z = H_3 z lies in I^(2) for n = 3
    assert combinat.ac_in_symbolic(3, AcElem(3, 0, 1), 2)
    assert not combinat.ac_in_power(3, AcElem(3, 0, 1), 2)
    assert combinat.ac_in_symbolic(3, AcElem(1, 0, 1), 1)
    assert not combinat.ac_in_symbolic(3, AcElem(2, 0, 0), 1)


def test_ac_witness_values():
    assert combinat.ac_witness(3, 2, 2) == (3, 1)
    assert combinat.ac_witness(3, 9, 8) == (9, 6)
    assert combinat.ac_witness(3, 3, 2) is None
    with pytest.raises(ValueError):
        combinat.ac_witness(3, 1, 2)


def test_nci_witness_values():
    assert combinat.nci_witness(2, 2) == NciElem(1, 1, 0, 1)
    assert combinat.nci_witness(3, 3) == NciElem(2, 1, 0, 2)
    assert combinat.nci_witness(4, 3) is None
    with pytest.raises(ValueError):
        combinat.nci_witness(1, 2)


@pytest.mark.parametrize("r", range(1, 7))
def test_power_forms_agree(r):
    for a, b, d in itertools.product(range(3 * r), repeat=3):
        e = NciElem(a, b, 0, d)
        assert combinat.nci_in_power(e, r) == combinat.nci_in_power_cases(e, r)


exps = st.integers(0, 14)


@settings(max_examples=300, deadline=None)
@given(st.integers(3, 6), exps, exps, exps, st.integers(1, 6))
def test_ac_inclusion_chain(n, i, j, l, r):
    e = AcElem(i, j, l)
    # I^r <= I^(r), and both families decrease in the exponent
    if combinat.ac_in_power(n, e, r):
        assert combinat.ac_in_symbolic(n, e, r)
    if combinat.ac_in_power(n, e, r + 1):
        assert combinat.ac_in_power(n, e, r)
    if combinat.ac_in_symbolic(n, e, r + 1):
        assert combinat.ac_in_symbolic(n, e, r)
    # membership is stable under multiplying by y or z
    if combinat.ac_in_symbolic(n, e, r):
        assert combinat.ac_in_symbolic(n, AcElem(i, j, l + 1), r)


@settings(max_examples=300, deadline=None)
@given(exps, exps, exps, st.integers(1, 6))
def test_nci_inclusion_chain(a, b, d, r):
    e = NciElem(a, b, 0, d)
    if combinat.nci_in_power(e, r):
        assert combinat.nci_in_symbolic(e, r)
    if combinat.nci_in_power(e, r + 1):
        assert combinat.nci_in_power(e, r)
    if combinat.nci_in_symbolic(e, r + 1):
        assert combinat.nci_in_symbolic(e, r)


def test_basis_order_and_counts(ac3, nci2):
    elems = combinat.enumerate_basis(ac3, 2)
    assert elems[0] == AcElem(2, 0, 0) and elems[-1] == AcElem(0, 0, 2)
    for d in range(8):
        assert len(combinat.enumerate_basis(ac3, d)) == (d + 1) * (d + 2) // 2
        assert len(combinat.enumerate_basis(nci2, d)) == (d + 1) * (d + 2) // 2
    assert combinat.enumerate_basis(ac3, -1) == []


def test_symbolic_dims_ac3(ac3):
    # independent count: I^(1) of 4 points has codim 4 from degree 2 on
    assert [combinat.hilbert_dim(ac3, ("symbolic", 1), d) for d in range(5)] == [0, 0, 2, 6, 11]


def test_filter_validation(ac3):
    with pytest.raises(ValueError):
        combinat.enumerate_basis(ac3, 2, ("nope", 1))


def test_nci_lattice_search_matches_canonical():
    for m in range(1, 16):
        for r in range(1, m + 1):
            assert (combinat.nci_lattice_search(m, r) is None) == (combinat.nci_witness(m, r) is None)
