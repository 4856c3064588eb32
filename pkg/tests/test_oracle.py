import pytest

from symcontain import (Bounds, CIComponent, Intersection, MPower, Power, Product, Symbolic,
                        graded_contains, graded_ideal, graded_symbolic, verify_claim)
from symcontain.oracle import CLAIMS, GradedSpace, alpha_oracle, describe, ideal_generators
from symcontain.polyring import X, Y, Z, render


def test_symbolic_degree_two(ac3):
    assert [render(f) for f in graded_symbolic(ac3, 1, 2).polys()] == ["x*z", "y*z"]


def test_full_and_empty():
    assert GradedSpace.full(3).rank == 10
    assert GradedSpace(3).rank == 0
    assert graded_contains(GradedSpace.full(2), GradedSpace(2))
    with pytest.raises(ValueError):
        graded_contains(GradedSpace(2), GradedSpace(3))


def test_power_one_is_symbolic_one(ac3, nci2):
    for cfg in (ac3, nci2):
        for d in range(7):
            assert graded_ideal(cfg, Power(1), d) == graded_symbolic(cfg, 1, d)


def test_mpower_is_everything():
    cfg = None
    assert graded_ideal(cfg, MPower(2), 3).rank == 10
    assert graded_ideal(cfg, MPower(4), 3).rank == 0


def test_ci_components_intersect_to_I(nci2):
    # I as an intersection of two complete-intersection pieces
    spec = Intersection([CIComponent("xy", 1), CIComponent("xyF", 1)])
    for d in range(6):
        assert graded_ideal(nci2, spec, d) == graded_symbolic(nci2, 1, d)


def test_product_commutes(nci2):
    a = Product([Symbolic(1), Symbolic(2)])
    b = Product([Symbolic(2), Symbolic(1)])
    for d in range(9):
        assert graded_ideal(nci2, a, d) == graded_ideal(nci2, b, d)


def test_generators(ac3):
    gens = ideal_generators(ac3, Symbolic(1), 4)
    assert sorted(g.degree() for g in gens) == [2, 2, 3]


def test_alpha_oracle(nci1):
    assert alpha_oracle(nci1, Symbolic(3)) == 5
    assert alpha_oracle(nci1, Power(2)) == 4


def test_describe():
    assert describe(Product([Symbolic(2), MPower(1)])) == describe(Product([Symbolic(2), MPower(1)]))
    with pytest.raises(TypeError):
        describe(3)


def test_fz_witness(ac3):
    f = ac3.F * Z
    assert graded_symbolic(ac3, 2, 4).contains_poly(f)
    assert not graded_ideal(ac3, Power(2), 4).contains_poly(f)


def test_unknown_claim(ac3, nci2):
    with pytest.raises(ValueError):
        verify_claim(ac3, "nope")
    with pytest.raises(ValueError):
        verify_claim(nci2, "ac_sympow_split")


@pytest.mark.parametrize("claim", ["basis_sym", "basis_pow", "containment", "madic_1", "madic_2", "alpha"])
def test_shared_claims_small(claim, ac3, nci2):
    for cfg in (ac3, nci2):
        rep = verify_claim(cfg, claim, Bounds(max_degree=8, m_max=2, r_max=2, t_max=2))
        assert rep.all_pass, rep.failures()


def test_report_json(nci1):
    rep = verify_claim(nci1, "nci_split_odd", Bounds(max_degree=6, pairs=((1, 1),)))
    doc = rep.to_json()
    assert doc["all_pass"] and doc["claim"] == "nci_split_odd"
    assert {"params", "d", "pass", "detail"} <= set(doc["cells"][0])


def test_parallel_matches_serial(ac3):
    b = Bounds(max_degree=6, m_max=2, r_max=2)
    one = verify_claim(ac3, "containment", b).to_json()
    two = verify_claim(ac3, "containment", b, jobs=2).to_json()
    assert one == two


def test_failure_is_reported(monkeypatch, ac3):
    # break the membership rule and make sure the oracle notices
    from symcontain import combinat
    monkeypatch.setattr(combinat, "ac_in_symbolic", lambda n, e, m: True)
    rep = verify_claim(ac3, "basis_sym", Bounds(max_degree=3, m_max=1))
    assert not rep.all_pass
    assert rep.failures()[0].detail


def test_claim_catalogue():
    assert len(CLAIMS) == 10
