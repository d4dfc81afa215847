"""
Derivations and Exactness Checks

This module implements the maps the classification rests on:

1. partial (∂) - the rank-dependent derivation
   * y-basis:  ∂y_j = (r - j + 1) y_{j-1},  y_0 = 1
   * z-basis:  ∂z_j = z_{j-1},  ∂z_1 = r
   * ring R:   ∂z_k = z_{k-1},  ∂z_0 = 0
2. gamma (γ, γ_r) - Σ (-1)^k z_k ∂^k, with z_0 read as r on H*(F)
3. counit (ε) - the constant term
4. gamma_preimage - a γ_r-preimage, solved on R and specialized z0 -> r

and machine-checks the two exact sequences built from them.

Student Guide:
--------------
Why iterate ∂ inside gamma?
- ∂ lowers degree, so ∂^k p is eventually 0
- gamma just keeps applying ∂ until nothing is left
- no truncation parameter needed

How exactness is checked:
- Build the slice matrices of γ, ∂, ε
- "im A = ker B" is: B∘A = 0 AND rank(A) = dim(middle) - rank(B)
- Each slice gets dims, ranks and a pass flag; the first failing
  slice carries a witness polynomial
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional

from algebra.errors import UsageError
from algebra.polyring import (
    Basis,
    GradedPoly,
    enumerate_slice,
    monomial_exponent,
    poly_from_vector,
    vector_from_poly,
    z_in_basis,
)
from algebra.slices import (
    KERNEL,
    RANK,
    SliceMatrix,
    functional_matrix,
    in_column_span,
    matrix_solve,
    rows_to_matrix,
    slice_matrix,
    slice_solve,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DerivationContext:
    """
    Rank and ring for the derivations.

    Attributes:
        rank: r = |θ|, any integer (ignored on R, where z0 is free)
        basis: Basis.Y, Basis.Z or Basis.R
    """

    rank: int
    basis: Basis

    def __post_init__(self):
        object.__setattr__(self, "basis", Basis(self.basis))


def _check_context(ctx: DerivationContext, p: GradedPoly) -> None:
    if p.basis is not ctx.basis:
        raise UsageError(f"context basis {ctx.basis.value} does not match polynomial basis {p.basis.value}")


def _generator_derivative(ctx: DerivationContext, index: int):
    """
    ∂ of one generator as (coefficient, lower generator index or None).

    None means the result is the bare constant.
    """
    if ctx.basis is Basis.Y:
        coeff = ctx.rank - index + 1
        return coeff, (index - 1 if index > 1 else None)
    if ctx.basis is Basis.Z:
        if index == 1:
            return ctx.rank, None
        return 1, index - 1
    if index == 0:
        return 0, None
    return 1, index - 1


def partial(ctx: DerivationContext, p: GradedPoly) -> GradedPoly:
    """
    Apply the derivation ∂ (Leibniz rule over each monomial).

    Args:
        ctx: Rank and basis
        p: Polynomial in ctx.basis

    Returns:
        ∂p, of degree deg(p) - 2 (bidegree shift (0, -1) on R)

    Example:
        ctx = DerivationContext(rank=3, basis=Basis.Y)
        y1, y2 = GradedPoly.generator(Basis.Y, 1), GradedPoly.generator(Basis.Y, 2)
        partial(ctx, y1 * y2)   # 3*y2 + 2*y1^2
    """
    _check_context(ctx, p)
    result: Dict = {}
    for mono, coeff in p.terms.items():
        exps = dict(mono)
        for index, exp in mono:
            factor, lower = _generator_derivative(ctx, index)
            if not factor:
                continue
            new_exps = dict(exps)
            new_exps[index] -= 1
            if lower is not None:
                new_exps[lower] = new_exps.get(lower, 0) + 1
            key = tuple(sorted((j, e) for j, e in new_exps.items() if e))
            value = result.get(key, Fraction(0)) + coeff * exp * factor
            if value:
                result[key] = value
            else:
                result.pop(key, None)
    return GradedPoly(ctx.basis, result)


def partial_power(ctx: DerivationContext, p: GradedPoly, k: int) -> GradedPoly:
    """∂ applied k times."""
    for _ in range(k):
        if p.is_zero():
            break
        p = partial(ctx, p)
    return p


def gamma(ctx: DerivationContext, p: GradedPoly) -> GradedPoly:
    """
    γ on R, or γ_r on H*(F).

    - R:      γ   = Σ_{k>=0} (-1)^k z_k ∂^k
    - H*(F):  γ_r = r·id + Σ_{k>=1} (-1)^k z_k ∂^k

    On R this raises the first grading by 1; on H*(F) it preserves degree.

    Example:
        ctx = DerivationContext(rank=0, basis=Basis.Z)
        gamma(ctx, GradedPoly.generator(Basis.Z, 2))   # -z1^2
    """
    _check_context(ctx, p)
    if ctx.basis is Basis.R:
        result = GradedPoly.generator(Basis.R, 0) * p
    else:
        result = p.scale(ctx.rank)
    current = p
    k = 0
    while True:
        k += 1
        current = partial(ctx, current)
        if current.is_zero():
            return result
        term = z_in_basis(k, ctx.basis) * current
        result = result + (term if k % 2 == 0 else -term)


def counit(p: GradedPoly) -> Fraction:
    """
    ε: the constant term.

    Example:
        counit(GradedPoly.constant(Basis.Z, 3) + GradedPoly.generator(Basis.Z, 1))  # 3
    """
    return p.coefficient(())


def specialize_rank(p: GradedPoly, rank: int) -> GradedPoly:
    """ψ: R -> H*(F), z0 replaced by the scalar rank (z-basis result)."""
    if p.basis is not Basis.R:
        raise UsageError(f"specialization starts from R, got {p.basis.value}")
    terms: Dict = {}
    for mono, coeff in p.terms.items():
        power = monomial_exponent(mono, 0)
        rest = tuple((j, e) for j, e in mono if j != 0)
        terms[rest] = terms.get(rest, Fraction(0)) + coeff * Fraction(rank) ** power
    return GradedPoly(Basis.Z, terms)


@lru_cache(maxsize=None)
def _specialized_gamma(rank: int, weight: int):
    """Columns ψ(γ(m)) for m in R^{d-1,weight}, d = 1..weight+1, as (monomials, matrix)."""
    ctx = DerivationContext(rank=0, basis=Basis.R)
    codomain = enumerate_slice(Basis.Z, 2 * weight)
    candidates = []
    columns = []
    for d in range(1, weight + 2):
        g = slice_matrix(lambda p: gamma(ctx, p), Basis.R, (d - 1, weight), (d, weight))
        for j, mono in enumerate(g.domain):
            image = specialize_rank(poly_from_vector(g.column(j), g.codomain, Basis.R), rank)
            candidates.append(mono)
            columns.append(vector_from_poly(image, codomain))
    matrix = rows_to_matrix([[col[i] for col in columns] for i in range(len(codomain))], len(columns))
    return tuple(candidates), matrix


def gamma_preimage(rank: int, target: GradedPoly) -> Optional[GradedPoly]:
    """
    Q in H*(F) with γ_r(Q) = target, solved on the R-slices.

    The candidates are the R-slices R^{d-1,e} for d = 1..e+1 (every
    z-monomial of weight e, padded with powers of z0). γ is applied on R
    and the image specialized, since ψ∘γ = γ_r∘ψ. The answer is ψ of the
    solution.

    Args:
        rank: r, the value z0 specializes to
        target: Homogeneous z-basis polynomial of degree 2e

    Returns:
        Homogeneous Q of degree 2e, or None when target is outside im γ_r

    Example:
        z = lambda j: GradedPoly.generator(Basis.Z, j)
        target = z(1) * z(1) * -1 + z(2) * 2               # γ_1(z1^2)
        q = gamma_preimage(1, target)
        gamma(DerivationContext(1, Basis.Z), q) == target   # True
    """
    if target.basis is not Basis.Z:
        raise UsageError("gamma_preimage works in the z-basis")
    if target.is_zero():
        return GradedPoly.zero(Basis.Z)
    if not target.is_homogeneous():
        raise UsageError("gamma_preimage needs a homogeneous target")
    weight = target.max_weight()
    candidates, matrix = _specialized_gamma(rank, weight)
    solution = matrix_solve(matrix, vector_from_poly(target, enumerate_slice(Basis.Z, 2 * weight)))
    if solution is None:
        return None
    lifted = GradedPoly(Basis.R, {m: c for m, c in zip(candidates, solution) if c})
    return specialize_rank(lifted, rank)


# =============================================================================
# EXACTNESS CHECKS
# =============================================================================

def exactness_witness(first: SliceMatrix, second: SliceMatrix) -> Optional[GradedPoly]:
    """
    A middle-slice polynomial showing im(first) != ker(second).

    Either an image column that second does not kill, or a kernel vector
    of second outside the image of first. None only when the pair is exact.
    """
    for j in range(len(first.domain)):
        column = first.column(j)
        if any(second.apply(column)):
            return poly_from_vector(column, first.codomain, first.basis)
    span = first.to_sympy()
    for vector in slice_solve(second, KERNEL):
        if not in_column_span(span, vector):
            return poly_from_vector(vector, second.domain, second.basis)
    return None


def exactness_R_slice(d: int, e: int) -> Dict:
    ctx = DerivationContext(rank=0, basis=Basis.R)
    g = slice_matrix(lambda p: gamma(ctx, p), Basis.R, (d - 1, e), (d, e))
    dm = slice_matrix(lambda p: partial(ctx, p), Basis.R, (d, e), (d, e - 1))
    eps = functional_matrix(counit, Basis.R, (d, e - 1))

    dim_q = 1 if (d, e - 1) == (0, 0) else 0
    dims = [len(g.domain), len(g.codomain), len(dm.codomain), dim_q]
    rank_g = slice_solve(g, RANK)
    rank_d = slice_solve(dm, RANK)
    # ε is only nonzero on R^{0,0}; elsewhere its target Q[0]^{d,e-1} is 0
    rank_e = slice_solve(eps, RANK) if dim_q else 0

    gamma_ok = dm.compose(g).is_zero() and rank_g == dims[1] - rank_d
    partial_ok = rank_d == dims[2] - rank_e and eps.compose(dm).is_zero()
    counit_ok = rank_e == dim_q

    entry = {
        "d": d,
        "e": e,
        "dims": dims,
        "ranks": [rank_g, rank_d, rank_e],
        "pass": bool(gamma_ok and partial_ok and counit_ok),
    }
    # im ⊆ ker with a rank gap, or a nonzero composite: either leaves a witness
    if not gamma_ok:
        entry["witness_map"] = "gamma"
        entry["witness"] = exactness_witness(g, dm).to_json()
    elif not partial_ok:
        entry["witness_map"] = "partial"
        entry["witness"] = exactness_witness(dm, eps).to_json()
    return entry


def check_exactness_R(dmax: int, emax: int, total_max: Optional[int] = None) -> Dict:
    """
    Check R^{d-1,e} -γ-> R^{d,e} -∂-> R^{d,e-1} -ε-> Q[0]^{d,e-1} -> 0.

    Args:
        dmax: Largest d
        emax: Largest e
        total_max: Optional bound on d + e

    Returns:
        Report dict:
            {"check": "exactness_R", "range": {...}, "slices": [...], "pass": bool}

    Example:
        report = check_exactness_R(3, 3)
        assert report["pass"]
    """
    if dmax < 0 or emax < 0:
        raise UsageError("dmax and emax must be nonnegative")
    slices: List[Dict] = []
    witness_seen = False
    for d in range(dmax + 1):
        for e in range(emax + 1):
            if (d, e) == (0, 0):
                continue
            if total_max is not None and d + e > total_max:
                continue
            entry = exactness_R_slice(d, e)
            if not entry["pass"]:
                if witness_seen:
                    entry.pop("witness", None)
                witness_seen = True
                logger.warning(f"❌ exactness fails on R^({d},{e})")
            slices.append(entry)
    report_range = {"dmax": dmax, "emax": emax}
    if total_max is not None:
        report_range["total_max"] = total_max
    return {
        "check": "exactness_R",
        "range": report_range,
        "slices": slices,
        "pass": all(s["pass"] for s in slices),
    }


def exactness_F_slice(r: int, e: int) -> Dict:
    ctx = DerivationContext(rank=r, basis=Basis.Z)
    degree = 2 * e
    g = slice_matrix(lambda p: gamma(ctx, p), Basis.Z, degree, degree)
    dm = slice_matrix(lambda p: partial(ctx, p), Basis.Z, degree, degree - 2)
    rank_g = slice_solve(g, RANK)
    rank_d = slice_solve(dm, RANK)
    n_mid, n_low = len(dm.domain), len(dm.codomain)

    # Kernel of ∂ in excess of im γ_r; 0 except for r = 0 in degrees 0 and 2
    defect = (n_mid - rank_d) - rank_g
    expected_defect = 1 if (r == 0 and e <= 1) else 0
    gamma_ok = dm.compose(g).is_zero() and defect == expected_defect

    if e == 0:
        partial_ok = True
    elif r != 0:
        partial_ok = rank_d == n_low
    else:
        eps_dim = 1 if e == 1 else 0
        partial_ok = rank_d == n_low - eps_dim
        if eps_dim:
            eps = functional_matrix(counit, Basis.Z, 0)
            partial_ok = partial_ok and eps.compose(dm).is_zero()

    entry = {
        "degree": degree,
        "dims": [n_mid, n_low],
        "ranks": [rank_g, rank_d],
        "gamma_defect": defect,
        "pass": bool(gamma_ok and partial_ok),
    }
    if not gamma_ok:
        witness = exactness_witness(g, dm)
        entry["witness"] = witness.to_json() if witness is not None else None
    return entry


def check_exactness_F(r: int, kmax: int) -> Dict:
    """
    Check the r-dependent sequences on H*(F) for degrees 0, 2, ..., 2*kmax.

    Verifies per slice H^{2e}:
    - im γ_r = ker ∂ (for r = 0 the kernel exceeds the image by exactly one
      dimension in degrees 0 and 2, spanned by 1 and y1)
    - r != 0: ∂ maps H^{2e} onto H^{2e-2}
    - r = 0:  im ∂ = ker ε, so the constants are the whole cokernel

    Returns:
        {"check": "exactness_F", "rank": r, "range": {"kmax": ..}, "slices": [...], "pass": bool}
    """
    if kmax < 0:
        raise UsageError("kmax must be nonnegative")
    slices = []
    for e in range(kmax + 1):
        entry = exactness_F_slice(r, e)
        if not entry["pass"]:
            logger.warning(f"❌ exactness fails for r={r} in degree {2 * e}")
        slices.append(entry)
    return {
        "check": "exactness_F",
        "rank": r,
        "range": {"kmax": kmax},
        "slices": slices,
        "pass": all(s["pass"] for s in slices),
    }
