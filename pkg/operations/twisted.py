"""
The Twisted Algebra S and Decomposition

S is the algebra of power series Σ f_i t^i with polynomial coefficients
f_i in the z-basis, where t does not commute with the coefficients:

    t · q = q · t + ∂q

This module provides:
1. SElement - normal-form elements (coefficients left of the t-powers)
2. s_multiply - the twisted product
3. s_act - the action of S on pushforward classes
4. decompose - write a kernel class as u(base) for u in S
5. roundtrip_check - the decompose -> s_act oracle

Student Guide:
--------------
Leading terms of g(B) without applying the z-action:
    (g(B))_0 = Σ_m C_m(B) ∂^m g / m!
For the generating class C_m = (-1)^m m! z_m, so this is γ_r(g).

How decompose works (a double induction):
- Look at the leading coefficient X_0 of the remainder X (∂X_0 = 0)
- Over Ξ_gen: pick a γ-preimage X_0 = γ_r(Q), solved on the R-slices and
  specialized z0 -> r; then g = Q has (g(Ξ_gen))_0 = X_0
- Over Ξ_PE: solve the same leading-term operator with the base's own
  coefficients in place of the z_m
- Check the match against the z-action itself, subtract g(base); the
  remainder now has X_0 = 0, so it is t(X')
- Record g, replace X by X' and repeat one t-power higher

The answer is u = Σ_a t^a g_a, normalized with s_multiply.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from algebra.derivation import DerivationContext, gamma_preimage, partial, partial_power, specialize_rank
from algebra.errors import DecompositionError, UsageError
from algebra.numkernel import factorial, generalized_binomial
from algebra.polyring import (
    Basis,
    GradedPoly,
    enumerate_slice,
    newton_convert,
    vector_from_poly,
)
from algebra.slices import matrix_solve, rows_to_matrix
from operations.pushforward import (
    PushforwardClass,
    monomial_action,
    mult_by,
    t_action,
    xi_gen,
    xi_pe,
)

logger = logging.getLogger(__name__)


class BaseClass(str, Enum):
    """Which distinguished class a decomposition is taken over."""

    PE = "PE"
    GEN = "GEN"


# =============================================================================
# S ELEMENTS
# =============================================================================

@dataclass(frozen=True)
class SElement:
    """
    Truncated element Σ_{i<=M} f_i t^i of S.

    Attributes:
        rank: r, the value of z_0
        coeffs: (f_0, ..., f_M), z-basis polynomials

    Example usage:
        t = SElement.t(0)
        z2 = SElement.poly(0, GradedPoly.generator(Basis.Z, 2))
        s_multiply(t, z2)   # z1 + z2*t
    """

    rank: int
    coeffs: Tuple[GradedPoly, ...]

    def __post_init__(self):
        cleaned = []
        for i, f in enumerate(self.coeffs):
            if f.basis is Basis.R:
                f = specialize_rank(f, self.rank)
            if f.basis is not Basis.Z:
                raise UsageError(f"S-coefficient f_{i} must be in the z-basis, got {f.basis.value}")
            cleaned.append(f)
        while len(cleaned) > 1 and cleaned[-1].is_zero():
            cleaned.pop()
        if not cleaned:
            cleaned = [GradedPoly.zero(Basis.Z)]
        object.__setattr__(self, "coeffs", tuple(cleaned))

    @classmethod
    def one(cls, rank: int) -> "SElement":
        return cls(rank, (GradedPoly.one(Basis.Z),))

    @classmethod
    def t(cls, rank: int, power: int = 1) -> "SElement":
        if power < 0:
            raise UsageError("t-power must be nonnegative")
        coeffs = [GradedPoly.zero(Basis.Z)] * power + [GradedPoly.one(Basis.Z)]
        return cls(rank, tuple(coeffs))

    @classmethod
    def poly(cls, rank: int, f: GradedPoly) -> "SElement":
        return cls(rank, (f,))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return all(f.is_zero() for f in self.coeffs)

    def coefficient(self, i: int) -> GradedPoly:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return GradedPoly.zero(Basis.Z)

    def degree(self) -> Optional[int]:
        """
        The common value of deg(f_i) - 2i, or None for zero.

        Raises:
            UsageError: If the element is not homogeneous
        """
        found = set()
        for i, f in enumerate(self.coeffs):
            found.update(d - 2 * i for d in f.degrees())
        if len(found) > 1:
            raise UsageError(f"S-element is not homogeneous: degrees {sorted(found)}")
        return next(iter(found)) if found else None

    def __add__(self, other: "SElement") -> "SElement":
        _check_rank(self, other)
        size = max(len(self.coeffs), len(other.coeffs))
        return SElement(self.rank, tuple(self.coefficient(i) + other.coefficient(i) for i in range(size)))

    def __sub__(self, other: "SElement") -> "SElement":
        return self + other.scale(-1)

    def scale(self, scalar) -> "SElement":
        return SElement(self.rank, tuple(f.scale(scalar) for f in self.coeffs))

    def __mul__(self, other: "SElement") -> "SElement":
        return s_multiply(self, other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SElement):
            return NotImplemented
        return self.rank == other.rank and self.coeffs == other.coeffs

    __hash__ = None

    def __repr__(self) -> str:
        parts = []
        for i, f in enumerate(self.coeffs):
            if f.is_zero():
                continue
            body = repr(f).split(": ", 1)[1].rstrip(")")
            tpow = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
            parts.append(body if not tpow else f"({body})*{tpow}")
        return f"SElement(r={self.rank}: {' + '.join(parts) or '0'})"

    def to_json(self) -> dict:
        return {"rank": self.rank, "coeffs": [f.to_json() for f in self.coeffs]}

    @classmethod
    def from_json(cls, data) -> "SElement":
        """Parse {"rank": r, "coeffs": [<poly>, ...]}."""
        if not isinstance(data, dict):
            raise UsageError("S-element JSON must be an object")
        try:
            rank = int(data["rank"])
            raw = data["coeffs"]
        except (KeyError, TypeError, ValueError) as e:
            raise UsageError(f"malformed S-element: {e}") from e
        if not isinstance(raw, list):
            raise UsageError("'coeffs' must be a list")
        return cls(rank, tuple(GradedPoly.from_json(f) for f in raw))


def _check_rank(u: SElement, v) -> None:
    if u.rank != v.rank:
        raise UsageError(f"rank mismatch: {u.rank} vs {v.rank}")


# =============================================================================
# PRODUCT AND ACTION
# =============================================================================

def s_multiply(u: SElement, v: SElement) -> SElement:
    """
    Twisted product of two S-elements.

        Σ p_i t^i · Σ q_j t^j = Σ_k Σ_{i,j} binom(i, k-j) p_i ∂^{i+j-k}(q_j) t^k

    Exact on finite elements: ∂ lowers degree, so every sum is finite.

    Example:
        s_multiply(SElement.t(0), SElement.poly(0, z2))   # z1 + z2*t
    """
    _check_rank(u, v)
    ctx = DerivationContext(rank=u.rank, basis=Basis.Z)
    derivatives: Dict[Tuple[int, int], GradedPoly] = {}

    def d(j: int, n: int) -> GradedPoly:
        key = (j, n)
        if key not in derivatives:
            derivatives[key] = partial_power(ctx, v.coeffs[j], n)
        return derivatives[key]

    size = u.order + v.order + 1
    result = [GradedPoly.zero(Basis.Z) for _ in range(size)]
    for i, p in enumerate(u.coeffs):
        if p.is_zero():
            continue
        for j, q in enumerate(v.coeffs):
            if q.is_zero():
                continue
            for m in range(i + 1):
                dq = d(j, i - m)
                if dq.is_zero():
                    continue
                result[j + m] = result[j + m] + (p * dq).scale(generalized_binomial(i, m))
    return SElement(u.rank, tuple(result))


def s_act(u: SElement, e: PushforwardClass) -> PushforwardClass:
    """
    Apply u = Σ f_i t^i to a class: Σ_i f_i(t^i(e)).

    Args:
        u: Homogeneous S-element of the class's rank
        e: Pushforward class of order N

    Returns:
        Class of order min_i (N + i - weight(f_i))

    Raises:
        UsageError: On rank mismatch, inhomogeneous u, or when some term
            would need more orders than e carries

    Example:
        s_act(SElement.t(0), xi_pe(0, 2)) == t_action(xi_pe(0, 2))
    """
    _check_rank(u, e)
    shift = u.degree()
    if shift is None:
        return PushforwardClass.zero(e.degree, e.rank, e.order, e.basis)

    terms = [(i, f) for i, f in enumerate(u.coeffs) if not f.is_zero()]
    result_order = min(e.order + i - f.max_weight() for i, f in terms)
    if result_order < 0:
        needed = max(f.max_weight() - i for i, f in terms)
        raise UsageError(f"s_act needs a class of order >= {needed}, got order {e.order}")

    total: Optional[PushforwardClass] = None
    current = e
    power = 0
    for i, f in terms:
        while power < i:
            current = t_action(current)
            power += 1
        part = mult_by(f, current).truncate(result_order)
        total = part if total is None else total + part
    return total


# =============================================================================
# DECOMPOSITION
# =============================================================================

def base_class(base: BaseClass, rank: int, order: int, basis: Basis = Basis.Y) -> PushforwardClass:
    """Ξ_PE or Ξ_gen at the requested order."""
    base = BaseClass(base)
    if base is BaseClass.PE:
        return xi_pe(rank, order, basis)
    return xi_gen(rank, order, basis)


def base_degree(base: BaseClass, rank: int) -> int:
    return 2 * rank + 2 if BaseClass(base) is BaseClass.PE else 0


def _untwist(x: PushforwardClass) -> PushforwardClass:
    """X' with t(X') = X, for a kernel class with X_0 = 0."""
    coeffs = tuple(x.coeffs[i + 1].scale(Fraction(-1, i + 1)) for i in range(x.order))
    return PushforwardClass(x.degree + 2, x.rank, coeffs, x.basis)


@dataclass
class DecompositionResult:
    element: SElement
    valid_order: int
    base: BaseClass

    def to_json(self) -> dict:
        return {"element": self.element.to_json(), "valid_order": self.valid_order, "base": self.base.value}


def leading_image(g: GradedPoly, base: PushforwardClass) -> GradedPoly:
    """
    (g(base))_0 in the z-basis, read off the base's coefficients.

        (g(B))_0 = Σ_m C_m(B) ∂^m g / m!

    Raises:
        UsageError: If base has fewer than weight(g) + 1 coefficients
    """
    ctx = DerivationContext(rank=base.rank, basis=Basis.Z)
    total = GradedPoly.zero(Basis.Z)
    current = g
    m = 0
    while not current.is_zero():
        if m > base.order:
            raise UsageError(f"leading term of a weight-{g.max_weight()} polynomial needs order >= {m}")
        coeff = newton_convert(base.coeffs[m], Basis.Z)
        total = total + (coeff * current).scale(Fraction(1, factorial(m)))
        current = partial(ctx, current)
        m += 1
    return total


def _solve_on_slice(images, monos, target: GradedPoly) -> Optional[GradedPoly]:
    """g = Σ c_m m with Σ c_m images[m] = target, or None."""
    codomain = enumerate_slice(Basis.Z, target.max_weight() * 2)
    columns = [vector_from_poly(image, codomain) for image in images]
    matrix = rows_to_matrix([[col[row] for col in columns] for row in range(len(codomain))], len(columns))
    solution = matrix_solve(matrix, vector_from_poly(target, codomain))
    if solution is None:
        return None
    return GradedPoly(Basis.Z, {m: c for m, c in zip(monos, solution) if c})


def leading_solve(target: GradedPoly, base: BaseClass, base_z: PushforwardClass) -> Optional[GradedPoly]:
    """
    A z-polynomial g with (g(base))_0 = target, or None.

    Over Ξ_gen this is a γ-preimage found on the R-slices. Over Ξ_PE the
    leading-term operator is solved on the z-slice of the matching degree.

    Args:
        target: Nonzero homogeneous leading coefficient, z-basis
        base: Which base class
        base_z: That base class in the z-basis, of order >= weight(target)
    """
    if BaseClass(base) is BaseClass.GEN:
        return gamma_preimage(base_z.rank, target)
    g_degree = 2 * target.max_weight() - base_z.degree
    if g_degree < 0:
        return None
    monos = enumerate_slice(Basis.Z, g_degree)
    images = [leading_image(GradedPoly.monomial(Basis.Z, m), base_z) for m in monos]
    return _solve_on_slice(images, monos, target)


def direct_leading_solve(target: GradedPoly, base_z: PushforwardClass, cache: Optional[Dict] = None) -> Optional[GradedPoly]:
    """
    The same solve with columns from the z-action itself.

    Slower, since every column applies the monomial to the base. Kept as
    the reference the faster solves are checked against.
    """
    g_degree = 2 * target.max_weight() - base_z.degree
    if g_degree < 0:
        return None
    monos = enumerate_slice(Basis.Z, g_degree)
    images = [monomial_action(m, base_z, cache).coeffs[0] for m in monos]
    return _solve_on_slice(images, monos, target)


def decompose(e: PushforwardClass, base: BaseClass) -> DecompositionResult:
    """
    Find u in S with s_act(u, base) = e.

    Args:
        e: Kernel class of order N
        base: BaseClass.PE or BaseClass.GEN

    Returns:
        DecompositionResult(element=u, valid_order=N or N-1)

    Raises:
        UsageError: If e is not a kernel class, or GEN is asked for at r = 0
        DecompositionError: If a leading coefficient below the top order
            cannot be matched, or a solved coefficient fails the z-action check

    Example:
        decompose(t_action(xi_pe(0, 4)), BaseClass.PE).element   # t
    """
    base = BaseClass(base)
    witness = e.kernel_witness()
    if witness is not None:
        raise UsageError(f"decompose needs a kernel class; recursion fails at index {witness}")
    if base is BaseClass.GEN and e.rank == 0:
        raise UsageError("the generating class needs a nonzero rank")

    N = e.order
    k_base = base_degree(base, e.rank)
    max_weight = max(0, (e.degree + 2 * N - k_base) // 2)
    B = base_class(base, e.rank, N + max_weight, e.basis)
    B_z = B if e.basis is Basis.Z else base_class(base, e.rank, N + max_weight, Basis.Z)
    cache: Dict = {(): B}
    logger.debug(f"decompose k={e.degree} r={e.rank} N={N} over {base.value}")

    remainder = e
    pieces: List[GradedPoly] = []
    valid_order = N
    for a in range(N + 1):
        leading = remainder.coeffs[0]
        g = GradedPoly.zero(Basis.Z)
        if not leading.is_zero():
            g = leading_solve(newton_convert(leading, Basis.Z), base, B_z)
            if g is None:
                if a == N:
                    valid_order = N - 1
                    logger.warning(f"⚠️ top coefficient not reached; decomposition valid to order {valid_order}")
                    break
                raise DecompositionError(
                    f"leading coefficient at t^{a} is not generated by {base.value} (k={e.degree}, r={e.rank})"
                )
            remainder = remainder - mult_by(g, B, cache).truncate(remainder.order)
            if not remainder.coeffs[0].is_zero():
                raise DecompositionError(f"solved coefficient at t^{a} does not match the z-action of {base.value}")
        pieces.append(g)
        if a < N:
            remainder = _untwist(remainder)

    u = SElement.one(e.rank).scale(0)
    for a, g in enumerate(pieces):
        if not g.is_zero():
            u = u + s_multiply(SElement.t(e.rank, a), SElement.poly(e.rank, g))
    return DecompositionResult(element=u, valid_order=valid_order, base=base)


def roundtrip_check(result: DecompositionResult, e: PushforwardClass) -> bool:
    """Whether s_act(u, base) reproduces e on orders 0..valid_order."""
    if result.valid_order < 0:
        return True
    u = result.element
    if u.is_zero():
        return all(c.is_zero() for c in e.coeffs[: result.valid_order + 1])
    margin = max(0, max(f.max_weight() - i for i, f in enumerate(u.coeffs) if not f.is_zero()))
    B = base_class(result.base, e.rank, result.valid_order + margin, e.basis)
    rebuilt = s_act(u, B)
    return rebuilt.agrees_with(e, result.valid_order)
