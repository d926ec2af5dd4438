import dataclasses

import pytest

from picardck import curves, higgs
from picardck.higgs import ISO, HComplex, Monomial, Summand


@pytest.fixture(scope="module")
def e():
    return higgs.uniformizing()


def test_monomial_normal_form():
    assert Monomial(1, 1, -1) == Monomial(1, 0, 2)
    assert str(Monomial(2, 0, -2)) == "S2W*L^-2"
    assert Monomial(1, 1, -1).expanded() == "W*Λ2W*L^-1"
    assert Monomial(1, 0, 2).expanded() == "W*L^2"
    assert Monomial(0, 0, 0).rank == 1


def test_uniformizing_fiber(e):
    assert e.fiber.commutator_zero() and e.fiber.is_equivariant()
    assert e.graded_ranks() == (2, 1)
    assert e.strict_hodge()
    assert [str(p.monomial) for p in e.pieces] == ["W*L^-1", "L^-1"]


def test_end0_pieces(e):
    h = higgs.end0(e)
    assert h.rank == 8
    # W, then End0(W) + O in Hodge degree 0, then W^dual
    assert h.graded_ranks() == (2, 3, 1, 2)
    assert h.fiber.is_equivariant() and h.strict_hodge()


def test_full_complex_of_e(e):
    cx = higgs.build_complex(e)
    assert cx.serialize_expanded() == [["W*L^-1", "L^-1"], ["S2W*L^-1", "Λ2W*L^-1", "W*L^-1"],
                                       ["W*Λ2W*L^-1", "Λ2W*L^-1"]]
    assert sorted(cx.entries.values()) == [ISO, ISO]
    assert cx.euler() == 0 and cx.ranks() == (3, 6, 3)


def test_noncommuting_theta_rejected(e):
    bad = dataclasses.replace(e.fiber, theta_y=e.fiber.theta_x.transpose())
    assert not bad.commutator_zero()
    with pytest.raises(higgs.SquareNotZero):
        higgs.build_complex(higgs.HiggsBundle("bad", bad, 1))


def _toy(entries):
    m = Monomial(0)
    summands = tuple(Summand(i, d, m, 0, (0, 0)) for i, d in enumerate([0, 0, 1, 1]))
    return HComplex(summands, entries, "toy")


def test_correction_blocks_contraction():
    # X=0, A=1 in degree 0; B=2, Y=3 in degree 1
    cx = _toy({(1, 2): ISO, (0, 2): ISO, (1, 3): ISO})
    with pytest.raises(higgs.NonzeroCorrection):
        higgs.contract(cx, 1, 2)
    assert higgs.legal_contractions(cx) == [(0, 2), (1, 3)]
    assert higgs.reduce(cx).is_minimal()


def test_full_block_cannot_be_decided_by_labels():
    cx = _toy({(0, 2): ISO, (0, 3): ISO, (1, 2): ISO, (1, 3): ISO})
    with pytest.raises(higgs.NonzeroCorrection):
        higgs.reduce(cx)


def test_contract_needs_iso():
    cx = _toy({(0, 2): higgs.CANONICAL})
    with pytest.raises(higgs.HiggsError):
        higgs.contract(cx, 0, 2)


def test_reduction_is_order_independent(e):
    for h in (e, higgs.sym_power(e, 2), higgs.end0(e)):
        assert len(higgs.reduction_outcomes(higgs.build_complex(h))) == 1


def test_hypercohomology_of_e(e):
    red = higgs.reduce(higgs.build_complex(e))
    res = higgs.hypercoh(red, curves.default_axioms())
    assert res[0].vanishes and res[0].axioms_used == ["nef_big_dual"]
    assert [str(t) for t in res[1].residue] == ["h^0(S2W*L^-1)"]
    with pytest.raises(higgs.HiggsError):
        higgs.hypercoh(higgs.build_complex(e), curves.default_axioms())


def test_refine_without_certificate_is_unknown(e):
    red = higgs.reduce(higgs.build_complex(e))
    assert higgs.l2_refine(red, None, curves.default_axioms()).kind == "Unknown"
    red2 = higgs.reduce(higgs.build_complex(higgs.sym_power(e, 2)))
    wrong = curves.z_restriction_chase(1, -1, curves.default_axioms(), "W*L^-1")
    assert higgs.l2_refine(red2, wrong, curves.default_axioms()).kind == "Unknown"


def test_end0_needs_li_schwermer(e):
    red = higgs.reduce(higgs.build_complex(higgs.end0(e)))
    ax = curves.default_axioms().subset(["nef_big_dual"])
    assert higgs.l2_refine(red, "li_schwermer", ax, "End0V1").kind == "Unknown"


def test_sym_power_validation(e):
    with pytest.raises(ValueError):
        higgs.sym_power(e, 0)
    assert higgs.sym_power(e, 1) is e
