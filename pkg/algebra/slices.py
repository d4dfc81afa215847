"""
Slice Linear Algebra

Every question the verifier asks ("is this exact?", "is this solvable?",
"what is the kernel?") reduces to linear algebra on ONE finite degree slice.
This module turns a degree-homogeneous operator into an exact matrix and
answers those questions with sympy's exact row reduction.

Student Guide:
--------------
- SliceMatrix: columns = domain monomials, rows = codomain monomials,
  both in graded-lex order
- slice_solve(M, vector)   -> one particular preimage, or None
- slice_solve(M, KERNEL)   -> kernel basis in reduced echelon form
- slice_solve(M, RANK)     -> rank

Determinism:
- Particular solutions set every free variable to 0
- Kernel vectors put a 1 in exactly one free column each

Fractions go in, Fractions come out. sympy Rationals only live inside
this module.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, List, Optional, Sequence, Tuple, Union

import sympy

from algebra.errors import UsageError
from algebra.polyring import (
    Basis,
    DegreeSpec,
    GradedPoly,
    Monomial,
    enumerate_slice,
    poly_from_vector,
    vector_from_poly,
)

logger = logging.getLogger(__name__)

KERNEL = "kernel"
RANK = "rank"

Vector = List[Fraction]


def to_sympy(value: Fraction) -> sympy.Rational:
    return sympy.Rational(value.numerator, value.denominator)


def from_sympy(value) -> Fraction:
    value = sympy.Rational(value)
    return Fraction(int(value.p), int(value.q))


def rows_to_matrix(rows: Sequence[Sequence[Fraction]], ncols: int) -> sympy.Matrix:
    if not rows or ncols == 0:
        return sympy.zeros(len(rows), ncols)
    return sympy.Matrix([[to_sympy(Fraction(x)) for x in row] for row in rows])


# =============================================================================
# RAW MATRIX SOLVERS
# =============================================================================

def matrix_rank(matrix: sympy.Matrix) -> int:
    if matrix.rows == 0 or matrix.cols == 0:
        return 0
    return len(matrix.rref()[1])


def matrix_kernel(matrix: sympy.Matrix) -> List[Vector]:
    """Kernel basis read off the reduced row echelon form."""
    ncols = matrix.cols
    if ncols == 0:
        return []
    if matrix.rows == 0:
        return [[Fraction(int(i == j)) for i in range(ncols)] for j in range(ncols)]
    reduced, pivots = matrix.rref()
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        vector = [Fraction(0)] * ncols
        vector[f] = Fraction(1)
        for row, p in enumerate(pivots):
            vector[p] = -from_sympy(reduced[row, f])
        basis.append(vector)
    return basis


def matrix_solve(matrix: sympy.Matrix, target: Sequence[Fraction]) -> Optional[Vector]:
    """
    One solution of matrix * x = target, free variables zeroed.

    Returns:
        The solution, or None when target is outside the column span
    """
    ncols = matrix.cols
    if len(target) != matrix.rows:
        raise UsageError(f"target has {len(target)} entries, matrix has {matrix.rows} rows")
    if matrix.rows == 0:
        return [Fraction(0)] * ncols
    rhs = sympy.Matrix([to_sympy(Fraction(x)) for x in target])
    if ncols == 0:
        return [] if all(x == 0 for x in target) else None
    reduced, pivots = matrix.row_join(rhs).rref()
    if ncols in pivots:
        return None
    solution = [Fraction(0)] * ncols
    for row, p in enumerate(pivots):
        solution[p] = from_sympy(reduced[row, ncols])
    return solution


def in_column_span(matrix: sympy.Matrix, vector: Sequence[Fraction]) -> bool:
    return matrix_solve(matrix, vector) is not None


# =============================================================================
# SLICE MATRICES
# =============================================================================

@dataclass(frozen=True)
class SliceMatrix:
    """
    Exact matrix of a homogeneous operator on one slice.

    Attributes:
        basis: Ring tag of domain and codomain
        domain: Ordered domain monomials (columns)
        codomain: Ordered codomain monomials (rows)
        entries: Row-major tuple of Fraction rows
    """

    basis: Basis
    domain: Tuple[Monomial, ...]
    codomain: Tuple[Monomial, ...]
    entries: Tuple[Tuple[Fraction, ...], ...]

    @property
    def shape(self) -> Tuple[int, int]:
        return len(self.codomain), len(self.domain)

    def to_sympy(self) -> sympy.Matrix:
        return rows_to_matrix(self.entries, len(self.domain))

    def column(self, j: int) -> Vector:
        return [row[j] for row in self.entries]

    def apply(self, vector: Sequence[Fraction]) -> Vector:
        return [sum((a * b for a, b in zip(row, vector)), Fraction(0)) for row in self.entries]

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.entries for x in row)

    def compose(self, first: "SliceMatrix") -> "SliceMatrix":
        """Matrix of self o first (first is applied first)."""
        if first.codomain != self.domain:
            raise UsageError("slice bases do not line up for composition")
        columns = [self.apply(first.column(j)) for j in range(len(first.domain))]
        rows = tuple(
            tuple(columns[j][i] for j in range(len(first.domain)))
            for i in range(len(self.codomain))
        )
        return SliceMatrix(self.basis, first.domain, self.codomain, rows)


def slice_matrix(
    operator: Callable[[GradedPoly], GradedPoly],
    basis: Basis,
    domain_spec: DegreeSpec,
    codomain_spec: DegreeSpec,
) -> SliceMatrix:
    """
    Matrix of a degree-homogeneous operator between two slices.

    Args:
        operator: Function GradedPoly -> GradedPoly (e.g. a derivation)
        basis: Ring the slices live in
        domain_spec: (Bi)degree of the domain slice
        codomain_spec: (Bi)degree of the codomain slice

    Raises:
        UsageError: If the operator leaves the declared codomain slice

    Example:
        ctx = DerivationContext(rank=0, basis=Basis.Y)
        M = slice_matrix(lambda p: partial(ctx, p), Basis.Y, 4, 2)
        # domain [y2, y1^2], codomain [y1], entries ((-1, 0),)
    """
    domain = enumerate_slice(basis, domain_spec)
    codomain = enumerate_slice(basis, codomain_spec)
    columns = []
    for mono in domain:
        image = operator(GradedPoly.monomial(basis, mono))
        columns.append(vector_from_poly(image, codomain))
    rows = tuple(
        tuple(columns[j][i] for j in range(len(domain))) for i in range(len(codomain))
    )
    return SliceMatrix(Basis(basis), domain, codomain, rows)


def functional_matrix(
    functional: Callable[[GradedPoly], Fraction],
    basis: Basis,
    domain_spec: DegreeSpec,
) -> SliceMatrix:
    """1-row matrix of a scalar-valued functional (e.g. the counit)."""
    domain = enumerate_slice(basis, domain_spec)
    row = tuple(Fraction(functional(GradedPoly.monomial(basis, m))) for m in domain)
    return SliceMatrix(Basis(basis), domain, ((),), (row,))


def slice_solve(
    matrix: SliceMatrix,
    target: Union[str, Sequence[Fraction], GradedPoly],
):
    """
    Exact elimination on a slice matrix.

    Args:
        matrix: The slice matrix
        target: KERNEL, RANK, a coordinate vector, or a polynomial in the
            codomain slice

    Returns:
        - KERNEL: list of kernel basis vectors
        - RANK: int
        - otherwise: a particular preimage vector, or None if unsolvable

    Example:
        slice_solve(M, GradedPoly.generator(Basis.Y, 1))   # [-1, 0]  i.e. C = -y2
    """
    sym = matrix.to_sympy()
    if isinstance(target, str):
        if target == KERNEL:
            return matrix_kernel(sym)
        if target == RANK:
            return matrix_rank(sym)
        raise UsageError(f"unknown slice request {target!r}")
    if isinstance(target, GradedPoly):
        target = vector_from_poly(target, matrix.codomain)
    return matrix_solve(sym, list(target))


def solution_poly(matrix: SliceMatrix, vector: Sequence[Fraction]) -> GradedPoly:
    """Turn a domain coordinate vector back into a polynomial."""
    return poly_from_vector(vector, matrix.domain, matrix.basis)
