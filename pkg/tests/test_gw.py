from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from gwcalc.gw import METHODS, GWQuery, gw, gw_deg1, gw_deg2


def valid_queries(d, Ns, ks):
    for N in Ns:
        for k in ks(N):
            total = 2 * N - k - 3 if d == 1 else 3 * N - 2 * k - 3
            for a in range(total + 1):
                yield N, k, a, total - a


DEG1 = list(valid_queries(1, (4, 5, 6), lambda N: range(1, N + 1)))
DEG2 = list(valid_queries(2, (4, 5), lambda N: (N - 1, N)))


@pytest.mark.parametrize("N,k,a,b,expected", [
    (5, 5, 1, 1, 2875),
    (5, 5, 0, 2, 0),
    (5, 3, 2, 2, 45),
])
def test_deg1_examples(N, k, a, b, expected):
    res = gw(N, k, 1, a, b)
    assert res.value == expected
    assert res.consistent
    assert set(res.paths) == set(METHODS)


@pytest.mark.parametrize("N,k,a,b", [(5, 5, 1, 1), (5, 4, 2, 2)])
def test_deg2_pinned_by_oracle(N, k, a, b):
    expected = oracles.gw2(N, k, a, b)
    res = gw(N, k, 2, a, b)
    assert res.consistent
    assert all(v == expected for v in res.paths.values())


def test_quintic_conics():
    value = gw(5, 5, 2, 1, 1).value
    assert value == Fraction(4876875, 2)
    assert value == 4 * (609250 + Fraction(2875, 8))


@pytest.mark.parametrize("N,k,a,b", DEG1)
def test_deg1_paths_and_oracle(N, k, a, b):
    res = gw(N, k, 1, a, b)
    assert res.consistent, res.paths
    assert res.value == oracles.gw1(N, k, a, b)
    assert res.value == gw(N, k, 1, b, a).value


@pytest.mark.parametrize("N,k,a,b", DEG2)
def test_deg2_paths_and_oracle(N, k, a, b):
    res = gw(N, k, 2, a, b)
    assert res.consistent, res.paths
    assert res.value == oracles.gw2(N, k, a, b)


@pytest.mark.parametrize("N", [4, 5, 6])
def test_calabi_yau_identity_insertion(N):
    total = N - 3
    assert gw(N, N, 1, 0, total).value == 0
    assert gw(N, N, 1, total, 0).value == 0


@pytest.mark.parametrize("N,k", [(4, 3), (4, 4), (5, 4), (5, 5), (6, 5)])
def test_deg2_b_zero(N, k):
    a = 3 * N - 2 * k - 3
    if a >= 0:
        assert gw(N, k, 2, a, 0).value == 0


def test_invalid_degree_is_zero_with_warning():
    res = gw(5, 5, 1, 2, 2)
    assert res.value == 0 and res.warning and res.consistent
    res = gw(5, 5, 2, 0, 0)
    assert res.value == 0 and res.warning


@pytest.mark.parametrize("args", [
    (2, 5, 1, 1, 1), (5, 0, 1, 1, 1), (5, 5, 3, 1, 1), (5, 5, 1, -1, 3), (5, 5, 1, 1, -2),
])
def test_malformed_queries(args):
    with pytest.raises(ValueError):
        gw(*args)


def test_deg2_needs_k_at_least_n_minus_1():
    with pytest.raises(ValueError):
        gw(5, 3, 2, 1, 2)
    with pytest.raises(ValueError):
        gw_deg2(GWQuery(6, 4, 2, 1, 1))


def test_wrong_degree_dispatch():
    with pytest.raises(ValueError):
        gw_deg1(GWQuery(5, 5, 2, 1, 1))
    with pytest.raises(ValueError):
        gw_deg2(GWQuery(5, 5, 1, 1, 1))
    with pytest.raises(ValueError):
        gw(5, 5, 1, 1, 1, method="guess")


@pytest.mark.parametrize("method", METHODS)
def test_single_method(method):
    res = gw(5, 5, 2, 1, 1, method=method)
    assert list(res.paths) == [method]
    assert res.value == Fraction(4876875, 2)


def test_threads_do_not_change_result():
    assert gw(5, 5, 2, 1, 1, jobs=4).paths == gw(5, 5, 2, 1, 1).paths


@settings(max_examples=40, deadline=None)
@given(st.integers(4, 7), st.data())
def test_deg1_symmetry_random(N, data):
    k = data.draw(st.integers(1, 2 * N - 3))
    total = 2 * N - k - 3
    a = data.draw(st.integers(0, total))
    left, right = gw(N, k, 1, a, total - a), gw(N, k, 1, total - a, a)
    assert left.consistent and right.consistent
    assert left.value == right.value


@settings(max_examples=15, deadline=None)
@given(st.integers(4, 7), st.data())
def test_deg2_paths_random(N, data):
    k = data.draw(st.integers(N - 1, (3 * N - 3) // 2))
    total = 3 * N - 2 * k - 3
    a = data.draw(st.integers(0, total))
    res = gw(N, k, 2, a, total - a)
    assert res.consistent, res.paths
