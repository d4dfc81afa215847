"""
Tests for pushforward classes, δ, the distinguished classes, the S-action
operators, even kernels, odd obstructions and δ-solving.
"""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from algebra.derivation import partial
from algebra.errors import UsageError
from algebra.polyring import Basis, GradedPoly
from operations.pushforward import (
    PushforwardClass,
    delta,
    in_span,
    pi_even,
    pi_odd_obstructions,
    solve_delta,
    t_action,
    t_power_action,
    xi_gen,
    xi_pe,
    zj_action,
)

y = lambda j: GradedPoly.generator(Basis.Y, j)
z = lambda j: GradedPoly.generator(Basis.Z, j)
ONE_Y = GradedPoly.one(Basis.Y)


def test_xi_pe_coefficients():
    assert xi_pe(0, 2).coeffs == (y(1), y(2), y(3))
    assert xi_pe(-1, 1).coeffs == (ONE_Y, y(1))
    assert xi_pe(-3, 2).coeffs == (GradedPoly.zero(Basis.Y), GradedPoly.zero(Basis.Y), ONE_Y)
    assert xi_pe(2, 0).degree == 6


def test_xi_gen_coefficients():
    e = xi_gen(2, 2)
    assert e.degree == 0 and e.basis is Basis.Z
    assert e.coeffs == (GradedPoly.constant(Basis.Z, 2), -z(1), z(2) * 2)
    with pytest.raises(UsageError):
        xi_gen(0, 3)


@pytest.mark.parametrize("r", range(-2, 4))
def test_distinguished_classes_are_kernel(r):
    """δ(Ξ_PE) = 0 and δ(Ξ_gen) = 0 on orders 0..N."""
    classes = [xi_pe(r, 8)] + ([xi_gen(r, 8)] if r else [])
    for e in classes:
        assert e.is_kernel()
        assert delta(e).truncate(8).is_zero()


def test_delta_example():
    """δ(1 ⊠ x0) = 1 ⊠ x1."""
    d = delta(PushforwardClass(0, 0, (ONE_Y,)))
    assert d.degree == -2
    assert d.coeffs == (GradedPoly.zero(Basis.Y), ONE_Y)


def test_kernel_witness():
    e = PushforwardClass(2, 0, (y(1), y(2) * 3))
    assert e.kernel_witness() == 1
    assert not e.is_kernel()


def test_class_validation():
    with pytest.raises(UsageError):
        PushforwardClass(2, 0, (y(2),))
    with pytest.raises(UsageError):
        PushforwardClass(2, 0, (z(1),), Basis.Y)
    with pytest.raises(UsageError):
        PushforwardClass(2, 0, ())


def test_solution_sequence_view():
    """∂P_i = P_{i-1} for a kernel class, and t is the shift of P."""
    e = xi_pe(1, 5)
    P = e.to_solution_sequence()
    ctx = e.context()
    for i in range(1, len(P)):
        assert partial(ctx, P[i]) == P[i - 1]
    shifted = t_action(e).to_solution_sequence()
    assert shifted[0].is_zero()
    assert shifted[1:] == P
    rebuilt = PushforwardClass.from_solution_sequence(e.degree, e.rank, P)
    assert rebuilt == e


@pytest.mark.parametrize("r", [-1, 0, 2])
def test_t_action_preserves_kernel(r):
    e = xi_pe(r, 5)
    te = t_action(e)
    assert te.degree == e.degree - 2
    assert te.order == e.order + 1
    assert te.is_kernel()


def test_divided_powers():
    e = xi_pe(1, 4)
    assert t_power_action(1, e) == t_action(e)
    assert t_power_action(2, e) == t_action(t_action(e)).scale(Fraction(1, 2))
    assert t_power_action(0, e) == e


def test_zj_action_example():
    e = zj_action(1, xi_gen(1, 2))
    assert e.degree == 2 and e.order == 1
    assert e.coeffs == (GradedPoly.zero(Basis.Z), z(2) * 2 - z(1) ** 2)
    with pytest.raises(UsageError):
        zj_action(3, xi_gen(1, 2))


@given(st.integers(-2, 2), st.integers(1, 4))
@settings(max_examples=20, deadline=None)
def test_commutator(r, j):
    """t∘z_j - z_j∘t = z_{j-1}, with z_0 acting as r."""
    e = xi_pe(r, 8)
    lhs = t_action(zj_action(j, e)) - zj_action(j, t_action(e))
    rhs = e.scale(r) if j == 1 else zj_action(j - 1, e)
    assert lhs.agrees_with(rhs, min(lhs.order, rhs.order))


def test_zj_preserves_kernel():
    e = xi_pe(2, 6)
    for j in (1, 2, 3):
        assert zj_action(j, e).is_kernel()


def test_pi_even_examples():
    """Π^2 at r = 0, order 0, is spanned by y1."""
    basis = pi_even(2, 0, 0)
    assert len(basis) == 1
    assert basis[0].coeffs == (y(1),)
    with pytest.raises(UsageError):
        pi_even(3, 0, 2)


@pytest.mark.parametrize("r", [-1, 0, 1, 2])
def test_xi_pe_lies_in_pi_even(r):
    order = 4
    classes = pi_even(2 * r + 2, r, order)
    assert all(c.is_kernel() for c in classes)
    assert in_span(classes, xi_pe(r, order))


def test_pi_even_z_basis_matches_y_basis():
    y_classes = pi_even(4, 1, 3, Basis.Y)
    z_classes = pi_even(4, 1, 3, Basis.Z)
    assert len(y_classes) == len(z_classes)
    assert all(in_span(z_classes, c.to_basis(Basis.Z)) for c in y_classes)


def test_odd_obstruction_at_rank_zero():
    """Exactly one obstruction at (r=0, k=3), witnessed by 1 ⊠ x0."""
    report = pi_odd_obstructions(3, 0, 6)
    assert report.dimension == 1
    witness = report.witnesses[0]
    assert witness.coeffs[0] == ONE_Y
    assert all(c.is_zero() for c in witness.coeffs[1:])
    data = report.to_json()
    assert data["dimension"] == 1 and len(data["witness"]) == 1


@pytest.mark.parametrize("r,k", [(2, 5), (0, 5), (0, 1), (0, 7), (-1, 3), (1, 3), (3, 1)])
def test_odd_groups_vanish(r, k):
    report = pi_odd_obstructions(k, r, 6)
    assert report.dimension == 0
    assert "witness" not in report.to_json()


def test_solve_delta():
    """δ(C) = 1 ⊠ x0 at r = 2 has C_0 = y1/2; at r = 0 it is blocked by ε."""
    target = PushforwardClass(0, 2, (ONE_Y,))
    result = solve_delta(3, 2, target)
    assert result.solvable
    assert result.solution.coeffs[0] == y(1) * Fraction(1, 2)

    blocked = solve_delta(3, 0, PushforwardClass(0, 0, (ONE_Y,)))
    assert not blocked.solvable
    assert blocked.obstruction_index == 0
    assert blocked.epsilon == 1
    with pytest.raises(UsageError):
        solve_delta(2, 0, PushforwardClass(-1, 0, (GradedPoly.zero(Basis.Y),)))


def test_json_roundtrip_and_errors():
    e = xi_pe(1, 3)
    data = e.to_json()
    assert data["order"] == 3 and data["degree"] == 4
    assert PushforwardClass.from_json(data) == e
    bad = dict(data, order=5)
    with pytest.raises(UsageError):
        PushforwardClass.from_json(bad)
    with pytest.raises(UsageError):
        PushforwardClass.from_json({"degree": 0})
