from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from gwcalc.kernel import binomial, det, identity, matmul, rational_row_reduce, smith_normal_form


@pytest.mark.parametrize("p,q,expected", [
    (4, 2, 6), (3, -1, 0), (-2, 1, 0), (0, 0, 1), (5, 6, 0), (-1, -1, 0), (-1, 0, 0),
    (60, 30, 118264581564861424),
])
def test_binomial(p, q, expected):
    assert binomial(p, q) == expected


@given(st.integers(-5, 30), st.integers(-5, 30))
def test_binomial_pascal(p, q):
    if p >= 1:
        assert binomial(p, q) == binomial(p - 1, q) + binomial(p - 1, q - 1)


def test_snf_identity_and_zero():
    D, U, V = smith_normal_form(identity(2))
    assert D == identity(2)
    D, U, V = smith_normal_form([[0, 0], [0, 0], [0, 0]])
    assert D == [[0, 0], [0, 0], [0, 0]]


def test_snf_p1_times_p1_cokernel_free_rank_2():
    rays = [[1, 0], [-1, 0], [0, 1], [0, -1]]   # rows: rays, i.e. the map Z^2 -> Z^4
    D, _, _ = smith_normal_form(rays)
    diag = [D[i][i] for i in range(2)]
    assert diag == [1, 1]
    assert len(rays) - sum(1 for x in diag if x) == 2


def _check_snf(m):
    D, U, V = smith_normal_form(m)
    assert matmul(matmul(U, m), V) == D
    assert det(U) in (1, -1) and det(V) in (1, -1)
    r = len(m)
    c = len(m[0])
    diag = [D[i][i] for i in range(min(r, c))]
    for i in range(r):
        for j in range(c):
            if i != j:
                assert D[i][j] == 0
    assert all(x >= 0 for x in diag)
    nz = [x for x in diag if x]
    assert diag[:len(nz)] == nz
    for a, b in zip(nz, nz[1:]):
        assert b % a == 0


matrices = st.integers(1, 5).flatmap(lambda r: st.integers(1, 5).flatmap(
    lambda c: st.lists(st.lists(st.integers(-9, 9), min_size=c, max_size=c),
                       min_size=r, max_size=r)))


@settings(max_examples=200, deadline=None)
@given(matrices)
def test_snf_random(m):
    _check_snf(m)


@pytest.mark.parametrize("m", [
    [[2, 4, 4], [-6, 6, 12], [10, -4, -16]],
    [[6, 0], [0, 4]],      # divisibility needs fixing: 2, 12
    [[0, 3], [0, 0]],
])
def test_snf_fixed(m):
    _check_snf(m)


def test_snf_divisibility_case():
    D, _, _ = smith_normal_form([[6, 0], [0, 4]])
    assert (D[0][0], D[1][1]) == (2, 12)


def test_rref_examples():
    rref, rank, kernel, pivots = rational_row_reduce(identity(3))
    assert rank == 3 and kernel == []
    _, rank, _, _ = rational_row_reduce([[0, 0, 0]])
    assert rank == 0
    rref, rank, kernel, pivots = rational_row_reduce([[1, 2], [2, 4]])
    assert rank == 1
    assert len(kernel) == 1
    k = kernel[0]
    assert k[0] / k[1] == -2


@settings(max_examples=100, deadline=None)
@given(matrices)
def test_rref_kernel_is_kernel(m):
    rref, rank, kernel, pivots = rational_row_reduce(m)
    ncols = len(m[0])
    assert rank + len(kernel) == ncols
    for v in kernel:
        for row in m:
            assert sum(Fraction(a) * b for a, b in zip(row, v)) == 0
    for r, pc in zip(rref, pivots):
        assert r[pc] == 1
