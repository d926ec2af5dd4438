import pytest

import oracles
from picardck import lattice as lt
from picardck.lattice import Ambient


def test_product_gram():
    assert lt.product_basis().gram == ((0, 3, 1, 1), (3, 0, 1, 1), (1, 1, 0, 1), (1, 1, 1, 0))
    assert lt.product_basis().determinant() == -3


def test_blowup_gram_adds_exceptional_curves():
    g = lt.blowup_basis().gram
    assert [g[i][i] for i in range(4, 7)] == [-1, -1, -1]
    assert lt.blowup_basis().determinant() == 3


def test_graph_of_omega_squared_matches_oracle():
    basis = lt.product_basis()
    phi = lt.OMEGA2
    target = [(phi - lt.ONE).norm(), (phi - lt.OMEGA).norm(), 1, phi.norm()]
    expected = oracles.solve(basis.gram, target)
    assert expected == [-1, -1, 3, 3]
    assert lt.graph_class(phi).coeffs == tuple(expected)


def test_graph_relation():
    cat = lt.catalog()
    lhs = cat["T1"] + cat["Tw"] + cat["Tw2"]
    assert lt.verify_relation(lhs, 3 * cat["A"] + 3 * cat["B"])
    assert not lt.verify_relation(lhs, 3 * cat["A"] + 2 * cat["B"])


def test_divisibility_and_l():
    kd = lt.canonical_plus_boundary()
    assert kd.as_dict() == {"T1": 0, "Tw": 0, "A": 3, "B": 6, "Z1": -3, "Z2": -3, "Z3": -3}
    assert lt.divide(kd, 3) == lt.l_class()
    assert lt.divide(kd, 2) is None
    with pytest.raises(lt.ZeroDivisor):
        lt.divide(kd, 0)


def test_l_equals_d0_d5_d6():
    cat = lt.catalog()
    assert (cat["L"] - (cat["D0"] + cat["D5"] + cat["D6"])).is_zero()


def test_positivity_report():
    rep = lt.positivity_report(lt.l_class())
    assert rep.self_int == 1
    assert rep.degrees == {"D0": 1, "D1": 0, "D2": 0, "D3": 0, "D4": 0, "D5": 0, "D6": 0,
                           "Z1": 1, "Z2": 1, "Z3": 1}
    assert rep.nonnegative_on_catalog()


def test_boundary_curves_disjoint_and_rational():
    cat = lt.catalog()
    k = lt.canonical()
    for i in range(1, 7):
        d = cat[f"D{i}"]
        for j in range(i + 1, 7):
            assert lt.intersect(d, cat[f"D{j}"]) == 0
        # adjunction: D^2 + K.D = 2g - 2 = 0 for elliptic boundary curves
        assert lt.intersect(d, d) + lt.intersect(k, d) == 0


def test_ambient_mismatch():
    with pytest.raises(lt.AmbientMismatch):
        lt.basis_class("A") + lt.l_class()
    with pytest.raises(lt.AmbientMismatch):
        lt.positivity_report(lt.basis_class("A"))
