"""
Pushforward Classes and the Connecting Map

A stable pushforward operation is stored as a truncated sequence
(C_0, ..., C_N) of polynomials, standing for Σ C_i ⊠ x_i with
deg C_i = 2i + k. This module provides:

1. PushforwardClass - the sequence plus degree k, rank r and basis
2. delta - the connecting map δ(C ⊠ x_i) = ∂C ⊠ x_i + (i+1) C ⊠ x_{i+1}
3. xi_pe / xi_gen - the projective Euler operation and the generating class
4. t_action / t_power_action / zj_action - the S-action on classes
5. pi_even - a basis of the truncated kernel of δ (even degree)
6. pi_odd_obstructions - dimension of the odd groups via the recursive scan
7. solve_delta - a δ-preimage, or the obstruction that blocks it

Student Guide:
--------------
The kernel condition in C-coordinates:
    ∂C_0 = 0,   ∂C_i = -i * C_{i-1}   (i >= 1)

Solution sequences are the same thing in P-coordinates:
    C_i = (-1)^i i! P_i,   ∂P_i = P_{i-1}

Truncation contract:
- δ and t raise the order by 1 (the extra coefficient is still exact)
- z_j lowers the order by j
- callers compare classes only up to the order both are valid to
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from algebra.derivation import DerivationContext, counit, partial
from algebra.errors import DecompositionError, UsageError
from algebra.numkernel import factorial, generalized_binomial
from algebra.polyring import (
    Basis,
    GradedPoly,
    Monomial,
    enumerate_slice,
    newton_convert,
    poly_from_vector,
    vector_from_poly,
    z_in_basis,
)
from algebra.slices import (
    KERNEL,
    matrix_kernel,
    matrix_rank,
    matrix_solve,
    rows_to_matrix,
    slice_matrix,
    slice_solve,
)

logger = logging.getLogger(__name__)


# =============================================================================
# PUSHFORWARD CLASS
# =============================================================================

@dataclass(frozen=True)
class PushforwardClass:
    """
    Truncated element Σ_{i<=N} C_i ⊠ x_i of Γ^k.

    Attributes:
        degree: k
        rank: r = |θ|
        coeffs: (C_0, ..., C_N), C_i homogeneous of degree 2i + k (or zero)
        basis: Basis.Y or Basis.Z, shared by all coefficients

    Example usage:
        e = xi_pe(0, 2)                 # (y1, y2, y3)
        print(e.order, e.is_kernel())   # 2 True
    """

    degree: int
    rank: int
    coeffs: Tuple[GradedPoly, ...]
    basis: Basis = Basis.Y

    def __post_init__(self):
        object.__setattr__(self, "basis", Basis(self.basis))
        object.__setattr__(self, "coeffs", tuple(self.coeffs))
        if self.basis is Basis.R:
            raise UsageError("pushforward classes live in H*(F); use basis y or z")
        if not self.coeffs:
            raise UsageError("a pushforward class needs at least C_0")
        for i, c in enumerate(self.coeffs):
            if c.basis is not self.basis:
                raise UsageError(f"C_{i} is in basis {c.basis.value}, class is in {self.basis.value}")
            if not c.is_zero() and c.degrees() != {self.coefficient_degree(i)}:
                raise UsageError(
                    f"C_{i} must be homogeneous of degree {self.coefficient_degree(i)}, "
                    f"found {sorted(c.degrees())}"
                )

    # ---- basics ------------------------------------------------------------

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def coefficient_degree(self, i: int) -> int:
        return 2 * i + self.degree

    @classmethod
    def zero(cls, degree: int, rank: int, order: int, basis: Basis = Basis.Y) -> "PushforwardClass":
        return cls(degree, rank, tuple(GradedPoly.zero(basis) for _ in range(order + 1)), basis)

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def coefficient(self, i: int) -> GradedPoly:
        """C_i, with C_i = 0 outside 0..N."""
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return GradedPoly.zero(self.basis)

    def truncate(self, order: int) -> "PushforwardClass":
        if order > self.order:
            raise UsageError(f"cannot extend order {self.order} to {order} by truncation")
        if order < 0:
            raise UsageError("truncation order must be nonnegative")
        return PushforwardClass(self.degree, self.rank, self.coeffs[: order + 1], self.basis)

    def to_basis(self, target: Basis) -> "PushforwardClass":
        target = Basis(target)
        if target is self.basis:
            return self
        return PushforwardClass(
            self.degree, self.rank, tuple(newton_convert(c, target) for c in self.coeffs), target
        )

    def context(self) -> DerivationContext:
        return DerivationContext(rank=self.rank, basis=self.basis)

    # ---- arithmetic --------------------------------------------------------

    def _check_compatible(self, other: "PushforwardClass") -> None:
        if (self.degree, self.rank) != (other.degree, other.rank):
            raise UsageError(
                f"incompatible classes: (k={self.degree}, r={self.rank}) vs (k={other.degree}, r={other.rank})"
            )

    def __add__(self, other: "PushforwardClass") -> "PushforwardClass":
        self._check_compatible(other)
        other = other.to_basis(self.basis)
        order = min(self.order, other.order)
        coeffs = tuple(self.coeffs[i] + other.coeffs[i] for i in range(order + 1))
        return PushforwardClass(self.degree, self.rank, coeffs, self.basis)

    def __neg__(self) -> "PushforwardClass":
        return self.scale(-1)

    def __sub__(self, other: "PushforwardClass") -> "PushforwardClass":
        return self + (-other)

    def scale(self, scalar) -> "PushforwardClass":
        return PushforwardClass(self.degree, self.rank, tuple(c.scale(scalar) for c in self.coeffs), self.basis)

    def agrees_with(self, other: "PushforwardClass", order: Optional[int] = None) -> bool:
        """Equality of coefficients 0..order (default: the common order)."""
        if (self.degree, self.rank) != (other.degree, other.rank):
            return False
        other = other.to_basis(self.basis)
        limit = min(self.order, other.order) if order is None else order
        if limit > min(self.order, other.order):
            return False
        return all(self.coeffs[i] == other.coeffs[i] for i in range(limit + 1))

    # ---- kernel predicate --------------------------------------------------

    def kernel_witness(self) -> Optional[int]:
        """
        First index where the kernel recursion fails, or None.

        Index 0 means ∂C_0 != 0; index i > 0 means ∂C_i != -i*C_{i-1}.
        """
        ctx = self.context()
        if not partial(ctx, self.coeffs[0]).is_zero():
            return 0
        for i in range(1, len(self.coeffs)):
            if partial(ctx, self.coeffs[i]) != self.coeffs[i - 1].scale(-i):
                return i
        return None

    def is_kernel(self) -> bool:
        return self.kernel_witness() is None

    # ---- solution-sequence view -------------------------------------------

    def to_solution_sequence(self) -> List[GradedPoly]:
        """P-coordinates: P_i = (-1)^i C_i / i!."""
        return [c.scale(Fraction((-1) ** i, factorial(i))) for i, c in enumerate(self.coeffs)]

    @classmethod
    def from_solution_sequence(
        cls, degree: int, rank: int, sequence: Sequence[GradedPoly], basis: Basis = Basis.Y
    ) -> "PushforwardClass":
        """Inverse of to_solution_sequence."""
        coeffs = tuple(p.scale((-1) ** i * factorial(i)) for i, p in enumerate(sequence))
        return cls(degree, rank, coeffs, basis)

    # ---- JSON --------------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "rank": self.rank,
            "order": self.order,
            "coeffs": [c.to_json() for c in self.coeffs],
        }

    @classmethod
    def from_json(cls, data) -> "PushforwardClass":
        """
        Parse {"degree": k, "rank": r, "order": N, "coeffs": [<poly>, ...]}.

        Raises:
            UsageError: On missing or inconsistent fields
        """
        if not isinstance(data, dict):
            raise UsageError("pushforward class JSON must be an object")
        try:
            degree, rank = int(data["degree"]), int(data["rank"])
            raw = data["coeffs"]
        except (KeyError, TypeError, ValueError) as e:
            raise UsageError(f"malformed pushforward class: {e}") from e
        if not isinstance(raw, list) or not raw:
            raise UsageError("'coeffs' must be a nonempty list")
        coeffs = tuple(GradedPoly.from_json(c) for c in raw)
        if "order" in data and int(data["order"]) != len(coeffs) - 1:
            raise UsageError(f"order {data['order']} does not match {len(coeffs)} coefficients")
        bases = {c.basis for c in coeffs}
        if len(bases) != 1:
            raise UsageError("all coefficients must share one basis")
        return cls(degree, rank, coeffs, bases.pop())


# =============================================================================
# CONNECTING MAP AND DISTINGUISHED CLASSES
# =============================================================================

def delta(e: PushforwardClass) -> PushforwardClass:
    """
    δ: Γ^k -> Γ^{k-2}; coefficient i of the result is ∂C_i + i*C_{i-1}.

    The result has order N+1.

    Example:
        delta(PushforwardClass(0, 0, (GradedPoly.one(Basis.Y),)))   # 1 ⊠ x1
    """
    ctx = e.context()
    coeffs = []
    for i in range(e.order + 2):
        value = partial(ctx, e.coefficient(i))
        if i > 0:
            value = value + e.coefficient(i - 1).scale(i)
        coeffs.append(value)
    return PushforwardClass(e.degree - 2, e.rank, tuple(coeffs), e.basis)


def xi_pe(r: int, order: int, basis: Basis = Basis.Y) -> PushforwardClass:
    """
    The projective Euler operation Σ y_{i+r+1} ⊠ x_i, degree 2r + 2.

    y_0 = 1 and y_j = 0 for j < 0.

    Example:
        xi_pe(0, 2)    # (y1, y2, y3)
        xi_pe(-1, 1)   # (1, y1)
    """
    if order < 0:
        raise UsageError("order must be nonnegative")
    coeffs = []
    for i in range(order + 1):
        j = i + r + 1
        if j > 0:
            coeffs.append(GradedPoly.generator(Basis.Y, j))
        elif j == 0:
            coeffs.append(GradedPoly.one(Basis.Y))
        else:
            coeffs.append(GradedPoly.zero(Basis.Y))
    return PushforwardClass(2 * r + 2, r, tuple(coeffs), Basis.Y).to_basis(basis)


def xi_gen(r: int, order: int, basis: Basis = Basis.Z) -> PushforwardClass:
    """
    The generating class Σ (-1)^i i! z_i ⊠ x_i with z_0 = r, degree 0.

    Raises:
        UsageError: If r = 0

    Example:
        xi_gen(2, 2)   # (2, -z1, 2*z2)
    """
    if r == 0:
        raise UsageError("the generating class needs a nonzero rank")
    if order < 0:
        raise UsageError("order must be nonnegative")
    coeffs = [GradedPoly.constant(Basis.Z, r)]
    for i in range(1, order + 1):
        coeffs.append(GradedPoly.generator(Basis.Z, i).scale((-1) ** i * factorial(i)))
    return PushforwardClass(0, r, tuple(coeffs), Basis.Z).to_basis(basis)


# =============================================================================
# S-ACTION ON CLASSES
# =============================================================================

def t_action(e: PushforwardClass) -> PushforwardClass:
    """
    t(e): C'_0 = 0, C'_i = -i * C_{i-1}; degree k-2, order N+1.

    In P-coordinates this is the plain shift P'_i = P_{i-1}.
    """
    coeffs = [GradedPoly.zero(e.basis)]
    coeffs.extend(e.coeffs[i - 1].scale(-i) for i in range(1, e.order + 2))
    return PushforwardClass(e.degree - 2, e.rank, tuple(coeffs), e.basis)


def t_power_action(j: int, e: PushforwardClass) -> PushforwardClass:
    """
    Divided power t_j = t^j / j!: C'_i = (-1)^j binom(i, j) C_{i-j}.

    Degree k - 2j, order N + j.
    """
    if j < 0:
        raise UsageError("t-power must be nonnegative")
    sign = -1 if j % 2 else 1
    coeffs = []
    for i in range(e.order + j + 1):
        coeffs.append(e.coefficient(i - j).scale(sign * generalized_binomial(i, j)))
    return PushforwardClass(e.degree - 2 * j, e.rank, tuple(coeffs), e.basis)


def _z_scalar_or_poly(index: int, e: PushforwardClass) -> GradedPoly:
    if index == 0:
        return GradedPoly.constant(e.basis, e.rank)
    return z_in_basis(index, e.basis)


def zj_action(j: int, e: PushforwardClass) -> PushforwardClass:
    """
    z_j(e): C''_i = Σ_{k=0}^{j} z_{j-k} C_{i+k} / k!, with z_0 = r.

    Degree k + 2j, order N - j.

    Raises:
        UsageError: If N < j (not enough coefficients)

    Example:
        zj_action(1, xi_gen(1, 2))   # (0, -z1^2 + 2*z2)
    """
    if j < 1:
        raise UsageError("z_j acts for j >= 1 (z_0 is multiplication by the rank)")
    if e.order < j:
        raise UsageError(f"z_{j} needs a class of order >= {j}, got order {e.order}")
    zs = [_z_scalar_or_poly(j - k, e) for k in range(j + 1)]
    coeffs = []
    for i in range(e.order - j + 1):
        value = GradedPoly.zero(e.basis)
        for k in range(j + 1):
            c = e.coeffs[i + k]
            if not c.is_zero():
                value = value + (zs[k] * c).scale(Fraction(1, factorial(k)))
        coeffs.append(value)
    return PushforwardClass(e.degree + 2 * j, e.rank, tuple(coeffs), e.basis)


def monomial_action(mono: Monomial, e: PushforwardClass, cache: Optional[Dict] = None) -> PushforwardClass:
    """
    Apply the z-monomial mono (z-basis, no z_0) to e.

    Factors are applied largest index first. The optional cache maps
    monomials to already computed results for the same e.
    """
    if cache is not None and mono in cache:
        return cache[mono]
    if not mono:
        result = e
    else:
        index, exp = mono[-1]
        rest = mono[:-1] + (((index, exp - 1),) if exp > 1 else ())
        result = zj_action(index, monomial_action(rest, e, cache))
    if cache is not None:
        cache[mono] = result
    return result


def mult_by(f: GradedPoly, e: PushforwardClass, cache: Optional[Dict] = None) -> PushforwardClass:
    """
    Action of a z-basis polynomial f on e; result order N - weight(f).

    f must be homogeneous so that the result has a single degree.
    """
    if f.basis is not Basis.Z:
        raise UsageError("S-coefficients must be written in the z-basis")
    if f.is_zero():
        return PushforwardClass.zero(e.degree, e.rank, e.order, e.basis)
    if not f.is_homogeneous():
        raise UsageError("mult_by needs a homogeneous polynomial")
    order = e.order - f.max_weight()
    if order < 0:
        raise UsageError(f"z-polynomial of weight {f.max_weight()} needs order >= {f.max_weight()}")
    total = None
    for mono, coeff in f.items():
        part = monomial_action(mono, e, cache).truncate(order).scale(coeff)
        total = part if total is None else total + part
    return total


# =============================================================================
# EVEN KERNELS AND ODD OBSTRUCTIONS
# =============================================================================

def _partial_matrix(ctx: DerivationContext, degree: int):
    return slice_matrix(lambda p: partial(ctx, p), ctx.basis, degree, degree - 2)


def pi_even(k: int, r: int, order: int, basis: Basis = Basis.Y) -> List[PushforwardClass]:
    """
    Basis of the truncated kernel of δ in even degree k.

    Solves the block system
        ∂C_0 = 0,  ∂C_i + i*C_{i-1} = 0  (1 <= i <= N)
    over the slices deg C_i = k + 2i.

    Example:
        pi_even(2, 0, 0)   # [(y1)]
    """
    if k % 2:
        raise UsageError(f"pi_even needs an even degree, got {k}")
    if order < 0:
        raise UsageError("order must be nonnegative")
    basis = Basis(basis)
    ctx = DerivationContext(rank=r, basis=basis)
    slices = [enumerate_slice(basis, k + 2 * i) for i in range(order + 1)]
    offsets = [0]
    for s in slices:
        offsets.append(offsets[-1] + len(s))
    ncols = offsets[-1]

    rows: List[List[Fraction]] = []
    for i in range(order + 1):
        dm = _partial_matrix(ctx, k + 2 * i)
        for row_idx in range(len(dm.codomain)):
            row = [Fraction(0)] * ncols
            for col in range(len(dm.domain)):
                row[offsets[i] + col] = dm.entries[row_idx][col]
            if i > 0:
                # slice of C_{i-1} equals the codomain slice of ∂ on C_i
                row[offsets[i - 1] + row_idx] += i
            rows.append(row)

    kernel = matrix_kernel(rows_to_matrix(rows, ncols))
    result = []
    for vector in kernel:
        coeffs = tuple(
            poly_from_vector(vector[offsets[i]: offsets[i + 1]], slices[i], basis)
            for i in range(order + 1)
        )
        result.append(PushforwardClass(k, r, coeffs, basis))
    logger.debug(f"pi_even(k={k}, r={r}, N={order}): dimension {len(result)}")
    return result


def in_span(classes: Sequence[PushforwardClass], e: PushforwardClass) -> bool:
    """Whether e is a rational combination of classes (same order and basis)."""
    e_vec = _flatten(e)
    if not classes:
        return all(x == 0 for x in e_vec)
    columns = [_flatten(c.to_basis(e.basis)) for c in classes]
    rows = [[col[i] for col in columns] for i in range(len(e_vec))]
    return matrix_solve(rows_to_matrix(rows, len(columns)), e_vec) is not None


def _flatten(e: PushforwardClass) -> List[Fraction]:
    vector: List[Fraction] = []
    for i, c in enumerate(e.coeffs):
        vector.extend(vector_from_poly(c, enumerate_slice(e.basis, e.coefficient_degree(i))))
    return vector


@dataclass
class ObstructionReport:
    """Result of the odd-degree obstruction scan."""

    degree: int
    rank: int
    order: int
    dimension: int
    per_index: List[int] = field(default_factory=list)
    witnesses: List[PushforwardClass] = field(default_factory=list)

    def to_json(self) -> dict:
        data = {
            "degree": self.degree,
            "rank": self.rank,
            "order": self.order,
            "dimension": self.dimension,
            "per_index": self.per_index,
        }
        if self.dimension:
            data["witness"] = [w.to_json() for w in self.witnesses]
        return data


def _kernel_columns(ctx: DerivationContext, degree: int) -> List[List[Fraction]]:
    """Kernel of ∂ on the slice of the given degree, as coordinate vectors."""
    return slice_solve(_partial_matrix(ctx, degree), KERNEL)


def pi_odd_obstructions(k: int, r: int, order: int, basis: Basis = Basis.Y) -> ObstructionReport:
    """
    Count the obstructions to solving δ(C) = D in odd degree k.

    For each i the target slice has degree d_i = 2i + k - 3. The equation
    ∂C_i = D_i - i*C_{i-1} can use C_i freely and may shift C_{i-1} by any
    element of ker ∂ (that leaves the previous equation intact). Whatever
    of the target slice stays out of reach is an obstruction.

    Returns:
        ObstructionReport with the total dimension and, when nonzero,
        witness classes D ⊠ x_i of degree k - 3 spanning the cokernel

    Example:
        pi_odd_obstructions(3, 0, 6).dimension   # 1, witness 1 ⊠ x0
    """
    if k % 2 == 0:
        raise UsageError(f"pi_odd_obstructions needs an odd degree, got {k}")
    if order < 0:
        raise UsageError("order must be nonnegative")
    basis = Basis(basis)
    ctx = DerivationContext(rank=r, basis=basis)
    report = ObstructionReport(degree=k, rank=r, order=order, dimension=0)

    for i in range(order + 1):
        d_i = 2 * i + k - 3
        target = enumerate_slice(basis, d_i)
        if not target:
            report.per_index.append(0)
            continue
        dm = _partial_matrix(ctx, d_i + 2)
        columns = [dm.column(j) for j in range(len(dm.domain))]
        if i > 0:
            columns.extend([x * i for x in v] for v in _kernel_columns(ctx, d_i))

        def as_matrix(cols):
            return rows_to_matrix([[col[row] for col in cols] for row in range(len(target))], len(cols))

        reach = matrix_rank(as_matrix(columns)) if columns else 0
        missing = len(target) - reach
        report.per_index.append(missing)
        if not missing:
            continue

        # Greedy cokernel representatives in graded-lex order
        found = 0
        for pos, mono in enumerate(target):
            unit = [Fraction(int(pos == row)) for row in range(len(target))]
            if columns and matrix_solve(as_matrix(columns), unit) is not None:
                continue
            columns.append(unit)
            coeffs = [GradedPoly.zero(basis) for _ in range(order + 1)]
            coeffs[i] = GradedPoly.monomial(basis, mono)
            report.witnesses.append(PushforwardClass(k - 3, r, tuple(coeffs), basis))
            found += 1
            if found == missing:
                break

    report.dimension = sum(report.per_index)
    logger.debug(f"pi_odd(k={k}, r={r}, N={order}): dimension {report.dimension}")
    return report


@dataclass
class SolveResult:
    """Outcome of solve_delta: a preimage, or where and why it is blocked."""

    solvable: bool
    solution: Optional[PushforwardClass] = None
    obstruction_index: Optional[int] = None
    residual: Optional[GradedPoly] = None
    epsilon: Optional[Fraction] = None

    def to_json(self) -> dict:
        if self.solvable:
            return {"solvable": True, "solution": self.solution.to_json()}
        data = {
            "solvable": False,
            "obstruction_index": self.obstruction_index,
            "residual": self.residual.to_json() if self.residual is not None else None,
        }
        if self.epsilon is not None:
            data["epsilon"] = str(self.epsilon)
        return data


def solve_delta(k: int, r: int, target: PushforwardClass) -> SolveResult:
    """
    Solve δ(C) = D for C in Γ^{k-1}, given D in Γ^{k-3}.

    Runs ∂C_i = D_i - i*C_{i-1} for i = 0, 1, ..., N. When step i > 0 is
    blocked it tries again with C_{i-1} shifted by an element of ker ∂
    (for instance by a constant, the ε-adjustment).

    Returns:
        SolveResult; a solution is verified exactly against the target

    Example:
        D = PushforwardClass(0, 2, (GradedPoly.one(Basis.Y),))
        solve_delta(3, 2, D).solution.coeffs[0]   # 1/2*y1
    """
    if k % 2 == 0:
        raise UsageError(f"solve_delta needs an odd degree, got {k}")
    if target.degree != k - 3:
        raise UsageError(f"target must have degree k-3 = {k - 3}, got {target.degree}")
    if target.rank != r:
        raise UsageError(f"target rank {target.rank} does not match r = {r}")
    basis = target.basis
    ctx = DerivationContext(rank=r, basis=basis)
    order = target.order
    solution: List[GradedPoly] = []

    for i in range(order + 1):
        d_i = 2 * i + k - 3
        rhs = target.coeffs[i]
        if i > 0:
            rhs = rhs - solution[i - 1].scale(i)
        dm = _partial_matrix(ctx, d_i + 2)
        codomain = dm.codomain
        columns = [dm.column(j) for j in range(len(dm.domain))]
        kernel = _kernel_columns(ctx, d_i) if i > 0 else []
        columns.extend([x * i for x in v] for v in kernel)

        if not codomain:
            # Nothing to match in an empty slice; C_i is free (take 0)
            solution.append(GradedPoly.zero(basis))
            continue
        rhs_vec = vector_from_poly(rhs, codomain)
        matrix = rows_to_matrix([[col[row] for col in columns] for row in range(len(codomain))], len(columns))
        found = matrix_solve(matrix, rhs_vec)
        if found is None:
            eps = counit(rhs) if d_i == 0 else None
            logger.info(f"⚠️ δ-solve blocked at i={i} (k={k}, r={r})")
            return SolveResult(False, obstruction_index=i, residual=rhs, epsilon=eps)

        n_dom = len(dm.domain)
        solution.append(poly_from_vector(found[:n_dom], dm.domain, basis))
        if kernel:
            shift = [Fraction(0)] * len(codomain)
            for coeff, v in zip(found[n_dom:], kernel):
                if coeff:
                    shift = [a + coeff * b for a, b in zip(shift, v)]
            solution[i - 1] = solution[i - 1] + poly_from_vector(shift, codomain, basis)

    result = PushforwardClass(k - 1, r, tuple(solution), basis)
    check = delta(result)
    if not all(check.coeffs[i] == target.coeffs[i] for i in range(order + 1)):
        raise DecompositionError(f"δ-solve produced a wrong preimage (k={k}, r={r})")
    return SolveResult(True, solution=result)
