"""
Tests for the three composition routes and their identity.
"""

import pytest

from algebra.errors import UsageError
from operations.composition import (
    SYM_A,
    SYM_B,
    SYM_C,
    composition_check,
    composition_ring,
    composition_routes,
)


def test_routes_at_zero():
    """i = j = 0 and all ranks 0: the three routes by hand."""
    R = composition_ring(0, 0, (0, 0, 0))
    A, B, C = R.c(1, SYM_A), R.c(1, SYM_B), R.c(1, SYM_C)
    routes = composition_routes(0, 0, (0, 0, 0), R)
    assert routes["closed"] == [A * B + B * C, A * B + A * C, B * C - A * C]
    assert routes["machinery"] == routes["closed"]


def test_empty_sum():
    """All ranks -1 and i = j = 0: total degree -1, every route vanishes."""
    routes = composition_routes(0, 0, (-1, -1, -1))
    assert all(not p for p in routes["closed"] + routes["machinery"])
    assert composition_check(0, 0, (-1, -1, -1))["pass"]


def test_route_two_is_index_swap_of_route_one():
    """route2(j, i; r2, r1, r3) is route1(i, j; r1, r2, r3) with A and B exchanged."""
    i, j, ranks = 1, 2, (1, -1, 0)
    R = composition_ring(i, j, ranks)
    S = composition_ring(j, i, (ranks[1], ranks[0], ranks[2]))
    assert R.cutoff == S.cutoff
    route1 = composition_routes(i, j, ranks, R)["closed"][0]
    route2 = composition_routes(j, i, (ranks[1], ranks[0], ranks[2]), S)["closed"][1]

    fibers, D = len(R.fibers), R.cutoff

    def swap(monom):
        m = list(monom)
        a, b = m[fibers: fibers + D], m[fibers + D: fibers + 2 * D]
        return tuple(m[:fibers] + b + a + m[fibers + 2 * D:])

    assert route1
    assert {swap(m): c for m, c in route1.items()} == dict(route2.items())


@pytest.mark.parametrize("i,j", [(0, 0), (1, 0), (0, 1), (1, 1), (2, 1)])
@pytest.mark.parametrize("ranks", [(0, 0, 0), (1, -1, 2), (-2, 1, 0), (2, 2, -1)])
def test_identity_holds(i, j, ranks):
    report = composition_check(i, j, ranks)
    assert report["pass"], report
    assert report["routes_agree"] == [True, True, True]
    assert isinstance(report["positive_twist_agrees"], bool)
    assert report["params"] == {"i": i, "j": j, "r": list(ranks)}


def test_bad_arguments():
    with pytest.raises(UsageError):
        composition_routes(-1, 0, (0, 0, 0))
    with pytest.raises(UsageError):
        composition_routes(0, 0, (0, 0))


def test_positive_twist_is_reported_not_judged():
    """With r1 = 1 the weight +1 middle route flips the B1*C2 term; the check still passes."""
    report = composition_check(0, 0, (1, 0, 0))
    assert report["pass"], report
    assert report["positive_twist_agrees"] is False

    # rank-zero ϑ_1: c_1 of a twisted rank-0 class ignores the weight
    assert composition_check(0, 0, (0, 0, 0))["positive_twist_agrees"] is True
    assert composition_check(0, 0, (-1, -1, -1))["positive_twist_agrees"] is True
