"""
Tests for the trivial-bundle Chern ring, the ⋄-action and the identity checks.
"""

import pytest

from algebra.errors import CutoffOverflowError, UsageError
from algebra.polyring import Basis, GradedPoly
from operations.chern import (
    ChernRing,
    OrientationExpr,
    OrientationTerm,
    dual_check,
    linearity_check,
    normalization_check,
    pull_push_check,
)


def ring(rank=2, cutoff=6):
    return ChernRing(["xi"], [("c", rank)], cutoff=cutoff)


TWISTED = OrientationExpr.of(OrientationTerm(0, weight=1, fiber=0))


@pytest.mark.parametrize("r", [-2, -1, 0, 1, 3])
def test_line_twist_low_classes(r):
    """c1 = rξ + c1 and c2 = binom(r,2)ξ² + (r-1)ξc1 + c2 for a weight-1 twist."""
    R = ring(r)
    xi, c1, c2 = R.xi(0), R.c(1, 0), R.c(2, 0)
    assert R.chern_class(TWISTED, 1) == r * xi + c1
    assert R.chern_class(TWISTED, 2) == R.scalar(r * (r - 1) // 2) * xi ** 2 + (r - 1) * xi * c1 + c2


def test_chern_class_edges():
    R = ring()
    assert R.chern_class(TWISTED, 0) == R.one
    assert R.chern_class(TWISTED, -1) == R.zero
    with pytest.raises(CutoffOverflowError):
        R.chern_class(TWISTED, 7)
    with pytest.raises(CutoffOverflowError):
        R.c(7, 0)


def test_whitney_sum():
    """c1 of a sum is the sum of the c1's; c2 picks up the cross term."""
    R = ChernRing(["xi"], [("a", 1), ("b", 2)], cutoff=4)
    ta = OrientationTerm(0, weight=1, fiber=0)
    tb = OrientationTerm(1)
    both = OrientationExpr.of(ta, tb)
    ca = lambda j: R.chern_class(OrientationExpr.of(ta), j)
    cb = lambda j: R.chern_class(OrientationExpr.of(tb), j)
    assert R.chern_class(both, 1) == ca(1) + cb(1)
    assert R.chern_class(both, 2) == ca(2) + ca(1) * cb(1) + cb(2)
    assert R.rank(both) == 3


def test_dual_signs():
    R = ring(2, 4)
    dual = OrientationExpr.of(OrientationTerm(0, dual=True))
    assert R.chern_class(dual, 1) == -R.c(1, 0)
    assert R.chern_class(dual, 2) == R.c(2, 0)


def test_diamond():
    R = ring()
    xi = R.xi(0)
    assert R.diamond(1, xi ** 3, 0) == 3 * xi ** 2
    assert R.diamond(2, xi, 0) == R.zero
    alpha = xi ** 4 + R.c(1, 0) * xi ** 2
    assert R.diamond(0, alpha, 0) == alpha
    assert R.diamond(1, R.diamond(1, alpha, 0), 0) == 2 * R.diamond(2, alpha, 0)
    with pytest.raises(UsageError):
        R.diamond(-1, alpha, 0)


def test_pe_trivial_normalization_and_linearity():
    R = ring(1, 8)
    xi, c1 = R.xi(0), R.c(1, 0)
    o = OrientationExpr.plain(0)
    assert R.pe_trivial(xi ** 2, o, 0) == R.c(4, 0)
    assert R.pe_trivial(c1 * xi ** 2, o, 0) == c1 * R.c(4, 0)
    R_neg = ring(-1, 4)
    assert R_neg.pe_trivial(R_neg.one, OrientationExpr.plain(0), 0) == R_neg.one


def test_pe_trivial_drops_own_twist():
    """Twists along the pushed fiber do not enter the result."""
    R = ring(2, 8)
    xi = R.xi(0)
    assert R.pe_trivial(xi, TWISTED, 0) == R.pe_trivial(xi, OrientationExpr.plain(0), 0)


def test_mul_overflow():
    R = ring(1, 3)
    with pytest.raises(CutoffOverflowError):
        R.mul(R.c(2, 0), R.c(2, 0))


def test_pull_push_examples():
    """k=1, r=0: ξc1 + (c2 - ξc1) = c2; k=0, r=-2: both sides vanish."""
    assert pull_push_check(1, 0)["pass"]
    report = pull_push_check(0, -2)
    assert report["pass"] and report["residual_terms"] == 0


def test_dual_examples():
    assert dual_check(0, -1)["pass"]
    assert dual_check(3, 0)["pass"]
    assert dual_check(3, 1)["pass"]


@pytest.mark.parametrize("r", range(-2, 3))
def test_identity_sweeps(r):
    for k in range(6):
        for check in (dual_check, pull_push_check, linearity_check):
            report = check(k, r)
            assert report["pass"], report
            assert report["params"] == {"k": k, "r": r}


@pytest.mark.parametrize("r", range(-2, 3))
def test_normalization(r):
    report = normalization_check(r, 6)
    assert report["pass"], report
    assert "indices" not in report


def test_from_y_poly():
    R = ring(0, 4)
    y = lambda j: GradedPoly.generator(Basis.Y, j)
    assert R.from_y_poly(y(1) * y(2) * 3, 0) == 3 * R.c(1, 0) * R.c(2, 0)
    with pytest.raises(UsageError):
        R.from_y_poly(GradedPoly.generator(Basis.Z, 1), 0)
