"""
Tests for ∂, γ, ε and the two exactness checks.
"""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from algebra.derivation import (
    DerivationContext,
    check_exactness_F,
    check_exactness_R,
    counit,
    exactness_F_slice,
    exactness_witness,
    gamma,
    gamma_preimage,
    partial,
    partial_power,
    specialize_rank,
)
from algebra.errors import UsageError
from algebra.polyring import Basis, GradedPoly, enumerate_slice, newton_convert
from algebra.slices import slice_matrix

y = lambda j: GradedPoly.generator(Basis.Y, j)
z = lambda j: GradedPoly.generator(Basis.Z, j)


@st.composite
def homogeneous(draw, basis, max_weight=4):
    weight = draw(st.integers(0, max_weight))
    monos = enumerate_slice(basis, 2 * weight)
    coeffs = draw(st.lists(st.integers(-4, 4), min_size=len(monos), max_size=len(monos)))
    return GradedPoly(basis, dict(zip(monos, coeffs)))


ranks = st.integers(-3, 3)


def test_partial_examples():
    ctx = DerivationContext(rank=3, basis=Basis.Y)
    assert partial(ctx, y(1) * y(2)) == y(2) * 3 + y(1) ** 2 * 2
    zc = DerivationContext(rank=2, basis=Basis.Z)
    assert partial(zc, z(1)) == GradedPoly.constant(Basis.Z, 2)
    assert partial(zc, z(3)) == z(2)


def test_partial_on_r():
    """On R, ∂z0 = 0 and ∂z_k = z_{k-1}."""
    ctx = DerivationContext(rank=0, basis=Basis.R)
    z0 = GradedPoly.generator(Basis.R, 0)
    z1 = GradedPoly.generator(Basis.R, 1)
    assert partial(ctx, z0).is_zero()
    assert partial(ctx, z0 * z1) == z0 * z0


@given(ranks, homogeneous(Basis.Y), homogeneous(Basis.Y))
@settings(max_examples=40, deadline=None)
def test_leibniz(r, p, q):
    ctx = DerivationContext(rank=r, basis=Basis.Y)
    assert partial(ctx, p * q) == partial(ctx, p) * q + p * partial(ctx, q)


@given(ranks, homogeneous(Basis.Y, 4))
@settings(max_examples=30, deadline=None)
def test_partial_agrees_across_bases(r, p):
    """∂ commutes with the Newton change of basis."""
    cy = DerivationContext(rank=r, basis=Basis.Y)
    cz = DerivationContext(rank=r, basis=Basis.Z)
    assert newton_convert(partial(cy, p), Basis.Z) == partial(cz, newton_convert(p, Basis.Z))


def test_gamma_examples():
    """γ_0(z2) = -z1^2 and γ_2(z2) = 4z2 - z1^2; γ_r keeps the degree."""
    ctx = DerivationContext(rank=0, basis=Basis.Z)
    assert gamma(ctx, z(2)) == -(z(1) ** 2)
    ctx = DerivationContext(rank=2, basis=Basis.Z)
    assert gamma(ctx, z(2)) == z(2) * 4 - z(1) ** 2
    assert gamma(ctx, z(1)).is_zero()


@given(ranks, homogeneous(Basis.Z))
@settings(max_examples=30, deadline=None)
def test_partial_kills_gamma(r, p):
    ctx = DerivationContext(rank=r, basis=Basis.Z)
    assert partial(ctx, gamma(ctx, p)).is_zero()


def test_partial_power_terminates():
    ctx = DerivationContext(rank=1, basis=Basis.Z)
    assert partial_power(ctx, z(2), 2) == GradedPoly.constant(Basis.Z, 1)
    assert partial_power(ctx, z(2), 5).is_zero()


def test_counit():
    assert counit(GradedPoly.constant(Basis.Z, 3) + z(1)) == Fraction(3)
    assert counit(z(2)) == 0


def test_context_mismatch():
    ctx = DerivationContext(rank=0, basis=Basis.Y)
    with pytest.raises(UsageError):
        partial(ctx, z(1))


def test_exactness_r_small_range():
    report = check_exactness_R(4, 4, total_max=6)
    assert report["pass"], [s for s in report["slices"] if not s["pass"]]
    assert report["range"] == {"dmax": 4, "emax": 4, "total_max": 6}
    assert all(s["d"] + s["e"] <= 6 for s in report["slices"])


@pytest.mark.parametrize("r", [-3, -1, 0, 1, 2, 3])
def test_exactness_f(r):
    report = check_exactness_F(r, 6)
    assert report["pass"], [s for s in report["slices"] if not s["pass"]]


def test_rank_zero_low_degree_defect():
    """At r = 0, ker ∂ exceeds im γ_0 by one dimension in degrees 0 and 2 only."""
    assert [exactness_F_slice(0, e)["gamma_defect"] for e in range(5)] == [1, 1, 0, 0, 0]
    assert [exactness_F_slice(1, e)["gamma_defect"] for e in range(5)] == [0, 0, 0, 0, 0]


def test_exactness_rejects_negative_range():
    with pytest.raises(UsageError):
        check_exactness_R(-1, 2)
    with pytest.raises(UsageError):
        check_exactness_F(0, -1)


@pytest.mark.parametrize("r", [-2, -1, 1, 3])
def test_gamma_preimage_inverts_gamma(r):
    ctx = DerivationContext(rank=r, basis=Basis.Z)
    for degree in (0, 2, 4, 6, 8):
        for mono in enumerate_slice(Basis.Z, degree):
            target = gamma(ctx, GradedPoly.monomial(Basis.Z, mono))
            q = gamma_preimage(r, target)
            assert q is not None
            assert gamma(ctx, q) == target


def test_gamma_preimage_outside_image():
    assert gamma_preimage(1, z(1)) is None
    # r = 0: the constants and y1 = z1 are in ker ∂ but not in im γ_0
    assert gamma_preimage(0, GradedPoly.one(Basis.Z)) is None
    assert gamma_preimage(0, z(1)) is None
    assert gamma_preimage(2, GradedPoly.zero(Basis.Z)).is_zero()
    with pytest.raises(UsageError):
        gamma_preimage(1, y(1))


def test_specialize_rank():
    r0, r1 = GradedPoly.generator(Basis.R, 0), GradedPoly.generator(Basis.R, 1)
    assert specialize_rank(r0 * r0 * r1, 3) == z(1) * 9
    assert specialize_rank(r0, 0).is_zero()
    with pytest.raises(UsageError):
        specialize_rank(z(1), 2)


def test_exactness_witness_for_missing_image():
    """Zero map into R^{2,2}: the kernel of ∂ there is the witness."""
    ctx = DerivationContext(rank=0, basis=Basis.R)
    zero = slice_matrix(lambda p: GradedPoly.zero(Basis.R), Basis.R, (1, 2), (2, 2))
    dm = slice_matrix(lambda p: partial(ctx, p), Basis.R, (2, 2), (2, 1))
    witness = exactness_witness(zero, dm)
    assert witness is not None and not witness.is_zero()
    assert partial(ctx, witness).is_zero()


def test_exactness_witness_for_image_outside_kernel():
    """Identity into R^{2,2} is not killed by ∂; an image column is the witness."""
    ctx = DerivationContext(rank=0, basis=Basis.R)
    identity = slice_matrix(lambda p: p, Basis.R, (2, 2), (2, 2))
    dm = slice_matrix(lambda p: partial(ctx, p), Basis.R, (2, 2), (2, 1))
    witness = exactness_witness(identity, dm)
    assert witness is not None
    assert not partial(ctx, witness).is_zero()


def test_exact_pair_has_no_witness():
    ctx = DerivationContext(rank=0, basis=Basis.R)
    g = slice_matrix(lambda p: gamma(ctx, p), Basis.R, (1, 2), (2, 2))
    dm = slice_matrix(lambda p: partial(ctx, p), Basis.R, (2, 2), (2, 1))
    assert exactness_witness(g, dm) is None
