"""
Tests for the twisted algebra S, its action and decomposition.
"""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from algebra.derivation import DerivationContext, gamma
from algebra.errors import DecompositionError, UsageError
from algebra.polyring import Basis, GradedPoly, enumerate_slice
from operations.pushforward import (
    PushforwardClass,
    monomial_action,
    mult_by,
    t_action,
    xi_gen,
    xi_pe,
    zj_action,
)
from operations.twisted import (
    BaseClass,
    SElement,
    base_class,
    decompose,
    direct_leading_solve,
    leading_image,
    leading_solve,
    roundtrip_check,
    s_act,
    s_multiply,
)
from verification.sweeps import random_kernel_class, random_s_element

z = lambda j: GradedPoly.generator(Basis.Z, j)


def test_commutation_relation():
    """t·z2 = z1 + z2·t, and t·z1 = r + z1·t."""
    t = SElement.t(0)
    assert s_multiply(t, SElement.poly(0, z(2))) == SElement(0, (z(1), z(2)))
    t3 = SElement.t(3)
    assert t3 * SElement.poly(3, z(1)) == SElement(3, (GradedPoly.constant(Basis.Z, 3), z(1)))


@given(st.integers(-2, 2), st.integers(0, 10 ** 6))
@settings(max_examples=25, deadline=None)
def test_product_is_associative(r, seed):
    rng = random.Random(seed)
    u, v, w = (random_s_element(rng, r) for _ in range(3))
    assert (u * v) * w == u * (v * w)


def test_trailing_zeros_and_r_basis_coefficients():
    """Trailing zero coefficients are dropped and z0 becomes the rank."""
    padded = SElement(1, (z(1), GradedPoly.zero(Basis.Z)))
    assert padded.order == 0
    z0 = GradedPoly.generator(Basis.R, 0)
    z1 = GradedPoly.generator(Basis.R, 1)
    assert SElement(2, (z0 * z1,)) == SElement(2, (z(1) * 2,))
    with pytest.raises(UsageError):
        SElement(0, (GradedPoly.generator(Basis.Y, 1),))


def test_degree():
    assert SElement(0, (z(1), z(2))).degree() == 2
    assert SElement.t(0).degree() == -2
    with pytest.raises(UsageError):
        SElement(0, (z(1), z(1))).degree()


def test_action_matches_operators():
    """t and z_j act through s_act as t_action and zj_action do."""
    e = xi_pe(1, 6)
    assert s_act(SElement.t(1), e) == t_action(e)
    assert s_act(SElement.poly(1, z(2)), e) == zj_action(2, e)


def test_action_is_a_module_map():
    """(t·z2)(e) = t(z2(e)) on the common order."""
    r = 1
    e = xi_pe(r, 8)
    t, z2 = SElement.t(r), SElement.poly(r, z(2))
    lhs = s_act(t * z2, e)
    rhs = t_action(zj_action(2, e))
    assert lhs.agrees_with(rhs, min(lhs.order, rhs.order))


@given(st.sampled_from([-1, 0, 1, 2]), st.integers(0, 10 ** 6))
@settings(max_examples=20, deadline=None)
def test_action_respects_the_product(r, seed):
    """(u·v)(e) = u(v(e)) for random homogeneous u, v."""
    rng = random.Random(seed)
    u, v = random_s_element(rng, r), random_s_element(rng, r)
    e = xi_pe(r, 12)
    lhs = s_act(s_multiply(u, v), e)
    rhs = s_act(u, s_act(v, e))
    assert lhs.agrees_with(rhs, min(lhs.order, rhs.order))


def test_action_needs_enough_order():
    with pytest.raises(UsageError, match="order"):
        s_act(SElement.poly(0, z(3)), xi_pe(0, 1))
    with pytest.raises(UsageError):
        s_act(SElement.t(1), xi_pe(0, 3))


def test_decompose_base_itself():
    result = decompose(xi_pe(0, 6), BaseClass.PE)
    assert result.element == SElement.one(0)
    assert result.valid_order == 6
    data = result.to_json()
    assert data["base"] == "PE"
    assert data["element"]["coeffs"][0]["terms"] == [{"coeff": "1", "exps": {}}]


def test_decompose_t_of_base():
    e = t_action(xi_pe(0, 6))
    result = decompose(e, BaseClass.PE)
    assert result.element == SElement.t(0)
    assert roundtrip_check(result, e)


@pytest.mark.parametrize("r", [-1, 0, 1, 2])
def test_roundtrip_random(r):
    rng = random.Random(1000 + r)
    base = BaseClass.PE if r == 0 else BaseClass.GEN
    for _ in range(3):
        e = random_kernel_class(rng, r, 5)
        result = decompose(e, base)
        assert result.valid_order >= 4
        assert roundtrip_check(result, e)


@pytest.mark.parametrize("r", [-1, 1, 2])
def test_leading_term_over_generating_class_is_gamma(r):
    """(m(Ξ_gen))_0 = γ_r(m) for every z-monomial m."""
    B = xi_gen(r, 4)
    ctx = DerivationContext(rank=r, basis=Basis.Z)
    for degree in (0, 2, 4, 6):
        for mono in enumerate_slice(Basis.Z, degree):
            m = GradedPoly.monomial(Basis.Z, mono)
            acted = monomial_action(mono, B).coeffs[0]
            assert leading_image(m, B) == acted
            assert gamma(ctx, m) == acted


@pytest.mark.parametrize("r", [-1, 0, 1, 2])
def test_leading_term_over_pe_matches_the_action(r):
    B = xi_pe(r, 4, Basis.Z)
    for degree in (0, 2, 4, 6):
        for mono in enumerate_slice(Basis.Z, degree):
            m = GradedPoly.monomial(Basis.Z, mono)
            assert leading_image(m, B) == monomial_action(mono, B).coeffs[0]


@pytest.mark.parametrize("r", [-1, 0, 1, 2])
def test_preimage_solve_agrees_with_direct_solve(r):
    """Both solves hit the same leading coefficient through the z-action."""
    base = BaseClass.PE if r == 0 else BaseClass.GEN
    B = base_class(base, r, 6, Basis.Z)
    checked = 0
    for degree in (2, 4, 6):
        for mono in enumerate_slice(Basis.Z, degree):
            target = leading_image(GradedPoly.monomial(Basis.Z, mono), B)
            if target.is_zero():
                continue
            via_preimage = leading_solve(target, base, B)
            via_action = direct_leading_solve(target, B)
            assert via_preimage is not None and via_action is not None
            assert mult_by(via_preimage, B).coeffs[0] == target
            assert mult_by(via_action, B).coeffs[0] == target
            assert leading_image(via_preimage, B) == leading_image(via_action, B)
            checked += 1
    assert checked > 0


def test_gamma_preimage_misses_non_kernel_leading_terms():
    """z1 has ∂z1 = r != 0, so no g over Ξ_gen leads with it."""
    assert leading_solve(z(1), BaseClass.GEN, xi_gen(1, 3)) is None
    assert direct_leading_solve(z(1), xi_gen(1, 3)) is None


def test_decompose_generating_class_over_itself():
    result = decompose(xi_gen(2, 5), BaseClass.GEN)
    assert result.element == SElement.one(2)


def test_decompose_z1_of_generating_class():
    e = zj_action(1, xi_gen(2, 4))
    result = decompose(e, BaseClass.GEN)
    assert result.valid_order >= e.order - 1
    assert roundtrip_check(result, e)


def test_decompose_rejects_bad_input():
    not_kernel = PushforwardClass(2, 0, (GradedPoly.generator(Basis.Y, 1), GradedPoly.generator(Basis.Y, 2) * 3))
    with pytest.raises(UsageError):
        decompose(not_kernel, BaseClass.PE)
    with pytest.raises(UsageError):
        decompose(xi_pe(0, 3), BaseClass.GEN)


def test_decompose_not_generated_raises():
    """Ξ_gen at r = 1 has degree 0 and C_0 = 1, out of reach of S·Ξ_PE."""
    with pytest.raises(DecompositionError):
        decompose(xi_gen(1, 4).to_basis(Basis.Y), BaseClass.PE)


def test_base_class():
    assert base_class(BaseClass.PE, 1, 3) == xi_pe(1, 3)
    assert base_class("GEN", 1, 3, Basis.Z) == xi_gen(1, 3)


def test_json_roundtrip():
    u = SElement(2, (z(1), z(1) * z(2)))
    assert SElement.from_json(u.to_json()) == u
    with pytest.raises(UsageError):
        SElement.from_json({"rank": 1})
