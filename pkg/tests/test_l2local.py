import pytest

import oracles
from picardck import l2local, linalg
from picardck.l2local import Divisor

NC = Divisor.NORMAL_CROSSING


def _vec(model, *terms):
    out = [0] * model.dim
    for coeff, name in terms:
        out[model.index_of(name)] += coeff
    return out


def test_not_nilpotent():
    with pytest.raises(l2local.NotNilpotent):
        l2local.NilpotentOp(linalg.identity(2))


def test_index_and_strings():
    model = l2local.sym_local(2)
    assert model.n1.index() == 3
    wf = l2local.weight_filtration(model.n1)
    assert sorted(l for l, _ in wf.strings) == [1, 2, 3]


def test_s3_weight_zero_against_oracle():
    n1 = l2local.sym_local(3).n1
    wf = l2local.weight_filtration(n1)
    rows = [[int(x) for x in row] for row in n1.matrix.to_list()]
    counts = oracles.jordan_string_counts(rows)
    # odd strings meet weight 0 once each
    assert len(wf.gr(0)) == sum(c for l, c in counts.items() if l % 2) == 2
    assert wf.gr_dims() == {3: 1, 2: 1, 1: 2, 0: 2, -1: 2, -2: 1, -3: 1}


def test_normal_crossing_gradings():
    model = l2local.sym_local(1, NC)
    v1, v2, v = (_vec(model, (1, n)) for n in ("v1", "v2", "v"))
    w1 = l2local.weight_filtration(model.n1)
    w2 = l2local.weight_filtration(model.n2)
    both = l2local.weight_filtration(l2local.NilpotentOp(model.n1.matrix + model.n2.matrix))
    assert w1.gr_matches(1, [v1]) and w1.gr_matches(0, [v2]) and w1.gr_matches(-1, [v])
    assert w2.gr_matches(1, [v2]) and w2.gr_matches(0, [v1]) and w2.gr_matches(-1, [v])
    plus = _vec(model, (1, "v1"), (1, "v2"))
    minus = _vec(model, (1, "v1"), (-1, "v2"))
    assert both.gr_matches(1, [plus]) and both.gr_matches(0, [minus]) and both.gr_matches(-1, [v])
    assert not both.gr_matches(0, [v])


def test_enlarged_omega0_is_not_stable():
    for divisor in Divisor:
        model = l2local.sym_local(1, divisor)
        mods = l2local.l2_subcomplex(model)
        assert l2local.theta_stable(mods, model)
        mods[0].parts[(0, 0)] = l2local.Coefficients.from_generators(3, [((0, 0), linalg.full(3))])
        assert not l2local.theta_stable(mods, model)


def test_modules_are_z_stable_and_serialize():
    mods = l2local.l2_subcomplex(l2local.sym_local(1))
    assert all(c.z_stable() for m in mods for c in m.parts.values())
    # ker N1 = <v2, v> at the origin, everything once z1 divides
    assert mods[0].serialize() == [[0, 0, "z1^0*z2^0", [[0, 1, 0], [0, 0, 1]]],
                                   [0, 0, "z1^1*z2^0", [[1, 0, 0], [0, 1, 0], [0, 0, 1]]]]


def test_truncation_too_small():
    model = l2local.sym_local(1)
    mods = l2local.l2_subcomplex(model, 1)
    with pytest.raises(l2local.TruncationTooSmall):
        l2local.theta_stable(mods, model, 1)
    with pytest.raises(l2local.TruncationTooSmall):
        l2local.module_equal(mods[0], mods[0], 1)


def test_no_closed_form_for_unpublished_models():
    with pytest.raises(l2local.L2Error):
        l2local.published_closed_forms(l2local.sym_local(2, NC))


def test_noncommuting_model_rejected():
    model = l2local.sym_local(1)
    n2 = l2local.NilpotentOp(linalg.matrix([[0, 0, 0], [0, 0, 1], [0, 0, 0]]))
    bad = l2local.LocalModel(model.names, model.n1, n2, NC)
    assert not bad.commuting()
    with pytest.raises(l2local.L2Error):
        l2local.l2_subcomplex(bad)
