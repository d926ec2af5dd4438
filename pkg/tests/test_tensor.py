import pytest

import oracles
from picardck import tensor


def test_schur_dims():
    assert tensor.schur_dim((2, 1), 3) == 8
    assert tensor.schur_dim((3,), 2) == 4
    assert tensor.schur_dim((), 3) == 1


def test_littlewood_richardson_square_of_adjoint():
    d = tensor.decompose_product((2, 1), (2, 1), 3)
    assert d.as_dict() == {(4, 2): 1, (4, 1, 1): 1, (3, 3): 1, (3, 2, 1): 2, (2, 2, 2): 1}
    assert d.dim() == 64


def test_schur_poly_against_bialternant():
    poly = tensor.schur_poly((2, 1), 3)
    xs = [2, 3, 5]
    value = sum(c * xs[0] ** e[0] * xs[1] ** e[1] * xs[2] ** e[2] for e, c in poly.items())
    assert value == oracles.bialternant((2, 1), xs)


def test_plethysm_string():
    assert str(tensor.decompose_product((2,), (1,), 2)) == "(3) + (2,1)"


def test_lambda_k_blocks():
    assert str(tensor.decompose_lambda_k(2)) == "End0V1 + L2V1 + L2V2 + triv"
    assert tensor.decompose_lambda_k(3).multiplicity("triv") == 2
    assert tensor.lambda_dims() == tensor.binomial_dims()


def test_errors():
    with pytest.raises(tensor.LengthExceedsRank):
        tensor.schur_dim((1, 1, 1), 2)
    with pytest.raises(ValueError):
        tensor.partition((1, 2))
    with pytest.raises(tensor.OutOfRange):
        tensor.lambda_k_blocks(7)
