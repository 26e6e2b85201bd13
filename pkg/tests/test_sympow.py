"""Tensor-power functors and the identities they derive."""

import random

import pytest

from krawtchouk import core, spectral, sympow
from krawtchouk.matrix import Matrix
from krawtchouk.rings import ZZ


def rand2(rng, lo=-4, hi=4):
    return Matrix(ZZ, [[rng.randint(lo, hi) for _ in range(2)]
                       for _ in range(2)])


@pytest.mark.parametrize("n", range(13))
def test_hadamard_group_power_is_krawtchouk(n):
    assert sympow.sym_group_power(sympow.MAT_H, n) == core.k_genfunc(n).mat


def test_group_power_of_special_elements():
    assert sympow.sym_group_power(Matrix.identity(2), 4) == Matrix.identity(5)
    assert sympow.sym_group_power(sympow.MAT_F, 3) == \
        Matrix.skewdiag([1, 1, 1, 1])
    assert sympow.sym_group_power(sympow.MAT_G, 3) == \
        Matrix.diag([1, -1, 1, -1])


def test_algebra_power_of_special_elements():
    assert sympow.sym_algebra_power(sympow.MAT_F, 3) == core.kac_matrix(3)
    assert sympow.sym_algebra_power(sympow.MAT_G, 3) == core.lambda_matrix(3)
    assert sympow.sym_algebra_power(sympow.MAT_B, 3) == Matrix(ZZ, [
        [0, 1, 0, 0], [-3, 0, 2, 0], [0, -2, 0, 3], [0, 0, -1, 0]])
    assert sympow.sym_algebra_power(Matrix.zeros(2, 2), 5) == \
        Matrix.zeros(6, 6)
    for n in range(1, 9):
        assert sympow.sym_algebra_power(sympow.MAT_F, n) == core.kac_matrix(n)
        assert sympow.sym_algebra_power(sympow.MAT_G, n) == \
            core.lambda_matrix(n)


def test_functoriality_random():
    rng = random.Random(17)
    for n in range(1, 7):
        for _ in range(8):
            a, b = rand2(rng), rand2(rng)
            assert sympow.sym_group_power(a @ b, n) == \
                sympow.sym_group_power(a, n) @ sympow.sym_group_power(b, n)


def test_additivity_and_bracket_random():
    rng = random.Random(19)
    for n in range(1, 7):
        for _ in range(8):
            a, b = rand2(rng), rand2(rng)
            assert sympow.sym_algebra_power(a + b, n) == \
                sympow.sym_algebra_power(a, n) + sympow.sym_algebra_power(b, n)
            lhs = sympow.sym_algebra_power(a @ b - b @ a, n)
            am = sympow.sym_algebra_power(a, n)
            bm = sympow.sym_algebra_power(b, n)
            assert lhs == am @ bm - bm @ am


def test_derivative_route_agrees_with_dictionary():
    rng = random.Random(23)
    for n in range(7):
        for _ in range(6):
            a = rand2(rng)
            assert sympow.sym_algebra_power_by_derivative(a, n) == \
                sympow.sym_algebra_power(a, n)


def test_sl2_operator_dictionary():
    op = sympow.sl2_operator(sympow.MAT_G)
    assert (op.c_xx, op.c_xy, op.c_yx, op.c_yy) == (1, 0, 0, -1)
    assert sympow.sl2_operator(Matrix.zeros(2, 2)).matrix(3) == \
        Matrix.zeros(4, 4)
    lop = sympow.sl2_operator(sympow.MAT_L)
    assert (lop.c_xx, lop.c_xy, lop.c_yx, lop.c_yy) == (0, 1, 0, 0)
    rop = sympow.sl2_operator(sympow.MAT_R)
    assert (rop.c_xx, rop.c_xy, rop.c_yx, rop.c_yy) == (0, 0, 1, 0)
    fop = sympow.sl2_operator(sympow.MAT_F)
    assert (fop.c_xx, fop.c_xy, fop.c_yx, fop.c_yy) == (0, 1, 1, 0)
    # the image of i: the dictionary and the displayed matrix force
    # x dy - y dx (the sign printed next to the dictionary is a known slip)
    bop = sympow.sl2_operator(sympow.MAT_B)
    assert (bop.c_xx, bop.c_xy, bop.c_yx, bop.c_yy) == (0, 1, -1, 0)
    assert bop.matrix(3) == sympow.sym_algebra_power(sympow.MAT_B, 3)


def test_ladder_factors():
    raising, lowering = sympow.ladder_factors(3)
    assert raising == [3, 2, 1]
    assert lowering == [1, 2, 3]
    lm = sympow.sym_algebra_power(sympow.MAT_L, 3)
    nm = sympow.sym_algebra_power(sympow.MAT_G, 3)
    assert [lm[q - 1, q] for q in range(1, 4)] == [1, 2, 3]
    assert [nm[q, q] for q in range(4)] == [3, 1, -1, -3]


@pytest.mark.parametrize("n", range(1, 9))
def test_lrn_relations(n):
    assert sympow.lrn_relations_check(n)


def test_halved_bracket_convention():
    # under [X,Y] = (XY - YX)/2 the ladder relations normalize to
    # [N,L] = L, [N,R] = -R, at the price of [L,R] = N/2
    n = 4
    lm = sympow.sym_algebra_power(sympow.MAT_L, n)
    rm = sympow.sym_algebra_power(sympow.MAT_R, n)
    nm = sympow.sym_algebra_power(sympow.MAT_G, n)
    half = lambda x, y: (x @ y - y @ x).map(lambda v: v // 2)
    assert half(nm, lm) == lm
    assert half(nm, rm) == rm.scale(-1)
    assert (nm @ lm - lm @ nm) == lm.scale(2)


@pytest.mark.parametrize("n", range(1, 11))
def test_symmetry_check(n):
    assert sympow.symmetry_check(n)


@pytest.mark.parametrize("n", range(1, 11))
def test_master_from_tensor(n):
    assert sympow.master_from_tensor_check(n)


@pytest.mark.parametrize("n", range(1, 9))
def test_skew_factorization(n):
    assert sympow.skew_factorization_check(n)
    assert sympow.sym_group_power(Matrix(ZZ, [[1, 1], [0, 1]]), n) == \
        spectral.binomial_matrix(n)


def test_kron_power():
    h2 = sympow.kron_power(sympow.MAT_H, 2)
    assert h2 == Matrix(ZZ, [[1, 1, 1, 1], [1, -1, 1, -1],
                             [1, 1, -1, -1], [1, -1, -1, 1]])
    assert sympow.kron_power(sympow.MAT_H, 0) == Matrix(ZZ, [[1]])
    h3 = sympow.kron_power(sympow.MAT_H, 3)
    assert h3.shape == (8, 8)
    assert h3 @ h3 == Matrix.identity(8).scale(8)
    with pytest.raises(ValueError):
        sympow.kron_power(sympow.MAT_H, 15)


def test_box_power():
    assert sympow.box_power(sympow.MAT_G, 2) == Matrix.diag([2, 0, 0, -2])
    assert sympow.box_power(Matrix.zeros(2, 2), 3) == Matrix.zeros(8, 8)
    rng = random.Random(29)
    for n in (2, 3):
        for _ in range(5):
            a, b = rand2(rng), rand2(rng)
            lhs = sympow.box_power(a @ b - b @ a, n)
            am, bm = sympow.box_power(a, n), sympow.box_power(b, n)
            assert lhs == am @ bm - bm @ am


@pytest.mark.parametrize("n", range(1, 7))
def test_kron_remark(n):
    assert sympow.kron_remark_check(n)
