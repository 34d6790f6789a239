import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from gwcalc.polyring import expand_euler_product
from gwcalc.quasimap import (
    PathDisagreement,
    QuasimapRing,
    qm_intersection,
    qm_intersection_closed_d2,
    three_point_deg1,
    three_point_deg1_paths,
    w_invariant,
)


def test_examples():
    assert qm_intersection(4, 2, (3, 4, 3)) == Fraction(1, 2)
    assert qm_intersection(4, 2, (2, 5, 3)) == Fraction(1, 4)
    assert qm_intersection(4, 2, (4, 4, 2)) == 0
    assert qm_intersection_closed_d2(4, 2, 5, 3) == Fraction(1, 4)


@pytest.mark.parametrize("N", range(3, 7))
def test_closed_volume_and_low_beta(N):
    assert qm_intersection_closed_d2(N, N - 1, N, N - 1) == Fraction(1, 2)
    for beta in range(N):
        for alpha in range(3 * N - 1 - beta):
            assert qm_intersection_closed_d2(N, alpha, beta, 3 * N - 2 - alpha - beta) == 0


@pytest.mark.parametrize("N", range(3, 7))
def test_closed_form_equals_rewrite(N):
    top = 3 * N - 2
    for alpha in range(0, 2 * N + 1):
        for gamma in range(0, 2 * N + 1):
            beta = top - alpha - gamma
            if 0 <= beta <= 3 * N:
                assert (qm_intersection_closed_d2(N, alpha, beta, gamma)
                        == qm_intersection(N, 2, (alpha, beta, gamma)))


def test_rewrite_agrees_with_quotient_engine():
    for N, d in [(3, 2), (3, 3), (2, 4)]:
        q = QuasimapRing(N, d)
        ring = q.presentation.ring
        for exps in ring.monomials(q.top_degree):
            assert q.functional(ring.monomial(exps)) == qm_intersection(N, d, exps)


@settings(max_examples=80, deadline=None)
@given(st.integers(2, 5), st.integers(1, 5), st.data())
def test_order_independence(N, d, data):
    top = N * (d + 1) - 2
    cuts = sorted(data.draw(st.lists(st.integers(0, top), min_size=d, max_size=d)))
    exps = [b - a for a, b in zip([0] + cuts, cuts + [top])]
    assert qm_intersection(N, d, exps, "lowest") == qm_intersection(N, d, exps, "highest")


@pytest.mark.parametrize("N,d", [(2, 3), (3, 3), (3, 4), (4, 5), (2, 6)])
def test_volume_normalization_any_d(N, d):
    q = QuasimapRing(N, d)
    assert d * qm_intersection(N, d, q.volume_exponents) == 1


def test_bad_input():
    with pytest.raises(ValueError):
        qm_intersection(3, 2, (1, 2))
    with pytest.raises(ValueError):
        qm_intersection(3, 2, (1, -2, 8))
    with pytest.raises(ValueError):
        qm_intersection(3, 2, (3, 2, 2), order="sideways")
    assert qm_intersection(3, 2, (1, 1, 1)) == 0


def test_w_examples():
    assert w_invariant(5, 5, 1, 1, 1) == 6725
    assert w_invariant(3, 1, 2, 2, 2) == 0
    assert w_invariant(5, 5, 1, 2, 1) == 0


@pytest.mark.parametrize("N", range(3, 7))
@pytest.mark.parametrize("k", range(1, 7))
def test_w_deg1_closed(N, k):
    ell = expand_euler_product(k)
    for a in range(0, 2 * N - k - 2):
        b = 2 * N - k - 3 - a
        assert w_invariant(N, k, 1, a, b) == ell(N - a - 2)


@pytest.mark.parametrize("N,k,d", [(4, 3, 1), (5, 5, 1), (4, 4, 2), (5, 4, 2), (5, 5, 2), (4, 3, 3)])
def test_w_symmetric(N, k, d):
    total = N * (d + 1) - 2 - (k * d + 1 - (d - 1))
    for a in range(total + 1):
        assert w_invariant(N, k, d, a, total - a) == w_invariant(N, k, d, total - a, a)


def test_three_point_examples():
    assert three_point_deg1(5, 5, 1, 1) == 2875
    for N, k in [(4, 4), (5, 5), (5, 6), (4, 3)]:
        for b in range(4):
            assert three_point_deg1(N, k, 0, b) == 0
        for a in range(4):
            assert three_point_deg1(N, k, a, 0) == 0


@pytest.mark.parametrize("N,k", [(4, 3), (4, 4), (5, 4), (5, 5), (6, 6), (6, 7)])
def test_three_point_paths_agree(N, k):
    for a, b in itertools.product(range(0, N), repeat=2):
        p = three_point_deg1_paths(N, k, a, b)
        assert p["integral"] == p["ell_sum"]


def test_three_point_guard():
    with pytest.raises(ValueError):
        three_point_deg1(5, 3, 1, 1)
    assert issubclass(PathDisagreement, AssertionError)
