"""
Graded Polynomial Rings

This module implements the sparse polynomial rings all the algebra runs on:

1. H*(F) = Q[y1, y2, ...] in the y-basis (Chern classes)
2. The same ring in the z-basis (Chern character components)
3. The auxiliary bigraded ring R = Q[z0, z1, z2, ...]

Student Guide:
--------------
Representation:
- A Monomial is a sorted tuple of (generator index, exponent) pairs
  * ()                  -> 1
  * ((1, 2), (3, 1))    -> y1^2 * y3
- A GradedPoly is a basis tag plus a dict Monomial -> Fraction
  * zero coefficients are never stored
  * the empty dict is the zero polynomial

Grading:
- |y_j| = |z_j| = 2j (cohomological degree)
- on R, z_k has bidegree (1, k)

Ordering:
- Graded-lexicographic, smaller generator index more significant,
  ascending in that exponent: degree 6 is [y3, y1*y2, y1^3]
- Every matrix basis and every JSON term list uses this order

Newton identities:
- z_k is built recursively from the y's and vice versa
  (see _z_in_y / _y_in_z); both are cached
"""

import logging
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, List, Mapping, Optional, Tuple, Union

from sympy.utilities.iterables import partitions

from algebra.errors import UsageError
from algebra.numkernel import factorial, format_rational, parse_rational, to_rational

logger = logging.getLogger(__name__)

Monomial = Tuple[Tuple[int, int], ...]
UNIT: Monomial = ()

DegreeSpec = Union[int, Tuple[int, int]]


class Basis(str, Enum):
    """Which generators a polynomial is written in."""

    Y = "y"
    Z = "z"
    R = "R"

    @property
    def symbol(self) -> str:
        return "y" if self is Basis.Y else "z"


# =============================================================================
# MONOMIALS
# =============================================================================

def make_monomial(exponents: Mapping[int, int]) -> Monomial:
    """
    Build a normalized monomial from an index -> exponent map.

    Zero exponents are dropped; negative ones are rejected.

    Example:
        make_monomial({3: 1, 1: 2})   # ((1, 2), (3, 1))
    """
    items = []
    for index, exp in exponents.items():
        if exp < 0 or index < 0:
            raise UsageError(f"invalid monomial entry {index}:{exp}")
        if exp:
            items.append((int(index), int(exp)))
    return tuple(sorted(items))


def monomial_mul(a: Monomial, b: Monomial) -> Monomial:
    """Product of two monomials."""
    if not a:
        return b
    if not b:
        return a
    merged = dict(a)
    for index, exp in b:
        merged[index] = merged.get(index, 0) + exp
    return tuple(sorted(merged.items()))


def monomial_weight(m: Monomial) -> int:
    """Sum of index * exponent (half the cohomological degree)."""
    return sum(index * exp for index, exp in m)


def monomial_degree(m: Monomial) -> int:
    """Cohomological degree: 2 * weight."""
    return 2 * monomial_weight(m)


def monomial_bidegree(m: Monomial) -> Tuple[int, int]:
    """Bidegree on R: (number of factors, weight)."""
    return sum(exp for _, exp in m), monomial_weight(m)


def monomial_exponent(m: Monomial, index: int) -> int:
    for j, exp in m:
        if j == index:
            return exp
    return 0


def graded_lex_key(m: Monomial, basis: "Basis") -> tuple:
    """
    Sort key for the graded-lex order.

    Monomials of equal grading have generator indices bounded by their
    weight, so the exponent vectors below have equal length and compare
    position by position.
    """
    weight = monomial_weight(m)
    start = 0 if basis is Basis.R else 1
    exps = dict(m)
    vector = tuple(exps.get(i, 0) for i in range(start, weight + 1))
    if basis is Basis.R:
        return (monomial_bidegree(m), vector)
    return (weight, vector)


def format_monomial(m: Monomial, basis: "Basis") -> str:
    if not m:
        return "1"
    parts = []
    for index, exp in m:
        name = f"{basis.symbol}{index}"
        parts.append(name if exp == 1 else f"{name}^{exp}")
    return "*".join(parts)


# =============================================================================
# GRADED POLYNOMIALS
# =============================================================================

class GradedPoly:
    """
    Sparse polynomial over Q in one of the bases Y, Z or R.

    Values are immutable: every operation returns a new polynomial.

    Example usage:
        y1 = GradedPoly.generator(Basis.Y, 1)
        y2 = GradedPoly.generator(Basis.Y, 2)
        p = (y1 + y2) * y1          # y1^2 + y1*y2
        print(p.degree())           # 4
    """

    __slots__ = ("basis", "_terms")

    def __init__(self, basis: Basis, terms: Optional[Mapping[Monomial, object]] = None):
        self.basis = Basis(basis)
        clean: Dict[Monomial, Fraction] = {}
        for mono, coeff in (terms or {}).items():
            mono = make_monomial(dict(mono))
            if self.basis is not Basis.R and monomial_exponent(mono, 0):
                raise UsageError(f"generator index 0 is only allowed in R, got {self.basis.value}")
            value = to_rational(coeff)
            if value:
                clean[mono] = clean.get(mono, Fraction(0)) + value
                if not clean[mono]:
                    del clean[mono]
        self._terms = clean

    @classmethod
    def _raw(cls, basis: Basis, terms: Dict[Monomial, Fraction]) -> "GradedPoly":
        # Trusted constructor: terms are normalized and free of zeros
        poly = cls.__new__(cls)
        poly.basis = basis
        poly._terms = terms
        return poly

    # ---- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, basis: Basis) -> "GradedPoly":
        return cls._raw(Basis(basis), {})

    @classmethod
    def constant(cls, basis: Basis, value) -> "GradedPoly":
        value = to_rational(value)
        return cls._raw(Basis(basis), {UNIT: value} if value else {})

    @classmethod
    def one(cls, basis: Basis) -> "GradedPoly":
        return cls.constant(basis, 1)

    @classmethod
    def generator(cls, basis: Basis, index: int) -> "GradedPoly":
        """The generator y_index / z_index (index 0 only on R)."""
        basis = Basis(basis)
        if index < 0 or (index == 0 and basis is not Basis.R):
            raise UsageError(f"no generator {basis.symbol}{index} in basis {basis.value}")
        return cls._raw(basis, {((index, 1),): Fraction(1)})

    @classmethod
    def monomial(cls, basis: Basis, mono: Monomial, coeff=1) -> "GradedPoly":
        return cls(basis, {mono: coeff})

    # ---- inspection --------------------------------------------------------

    @property
    def terms(self) -> Dict[Monomial, Fraction]:
        """A copy of the term map."""
        return dict(self._terms)

    def items(self) -> List[Tuple[Monomial, Fraction]]:
        """Terms in graded-lex order."""
        return sorted(self._terms.items(), key=lambda kv: graded_lex_key(kv[0], self.basis))

    def coefficient(self, mono: Monomial) -> Fraction:
        return self._terms.get(mono, Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def degrees(self) -> set:
        """Set of (bi)degrees occurring in the polynomial."""
        if self.basis is Basis.R:
            return {monomial_bidegree(m) for m in self._terms}
        return {monomial_degree(m) for m in self._terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def degree(self) -> Optional[DegreeSpec]:
        """
        The (bi)degree of a homogeneous polynomial; None for zero.

        Raises:
            UsageError: If the polynomial mixes degrees
        """
        found = self.degrees()
        if not found:
            return None
        if len(found) > 1:
            raise UsageError(f"polynomial is not homogeneous: degrees {sorted(found)}")
        return next(iter(found))

    def max_weight(self) -> int:
        """Largest monomial weight (0 for constants and zero)."""
        return max((monomial_weight(m) for m in self._terms), default=0)

    def component(self, degree: DegreeSpec) -> "GradedPoly":
        """The homogeneous part of the given (bi)degree."""
        if self.basis is Basis.R:
            keep = {m: c for m, c in self._terms.items() if monomial_bidegree(m) == tuple(degree)}
        else:
            keep = {m: c for m, c in self._terms.items() if monomial_degree(m) == degree}
        return GradedPoly._raw(self.basis, keep)

    # ---- arithmetic --------------------------------------------------------

    def _check_basis(self, other: "GradedPoly") -> None:
        if other.basis is not self.basis:
            raise UsageError(
                f"basis mismatch: {self.basis.value} vs {other.basis.value} (convert first)"
            )

    def _coerce(self, other) -> "GradedPoly":
        if isinstance(other, GradedPoly):
            self._check_basis(other)
            return other
        return GradedPoly.constant(self.basis, other)

    def __add__(self, other) -> "GradedPoly":
        other = self._coerce(other)
        result = dict(self._terms)
        for mono, coeff in other._terms.items():
            value = result.get(mono, Fraction(0)) + coeff
            if value:
                result[mono] = value
            else:
                result.pop(mono, None)
        return GradedPoly._raw(self.basis, result)

    __radd__ = __add__

    def __neg__(self) -> "GradedPoly":
        return GradedPoly._raw(self.basis, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other) -> "GradedPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "GradedPoly":
        return self._coerce(other) - self

    def scale(self, scalar) -> "GradedPoly":
        scalar = to_rational(scalar)
        if not scalar:
            return GradedPoly.zero(self.basis)
        return GradedPoly._raw(self.basis, {m: c * scalar for m, c in self._terms.items()})

    def __mul__(self, other) -> "GradedPoly":
        if not isinstance(other, GradedPoly):
            return self.scale(other)
        self._check_basis(other)
        result: Dict[Monomial, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                mono = monomial_mul(m1, m2)
                value = result.get(mono, Fraction(0)) + c1 * c2
                if value:
                    result[mono] = value
                else:
                    result.pop(mono, None)
        return GradedPoly._raw(self.basis, result)

    def __rmul__(self, other) -> "GradedPoly":
        return self.scale(other)

    def __pow__(self, exponent: int) -> "GradedPoly":
        if exponent < 0:
            raise UsageError("negative powers are not polynomials")
        result = GradedPoly.one(self.basis)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, GradedPoly):
            return self.basis is other.basis and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == GradedPoly.constant(self.basis, other)._terms
        return NotImplemented

    __hash__ = None

    def __repr__(self) -> str:
        if not self._terms:
            return f"GradedPoly({self.basis.value}: 0)"
        parts = []
        for mono, coeff in self.items():
            if not mono:
                parts.append(format_rational(coeff))
            elif coeff == 1:
                parts.append(format_monomial(mono, self.basis))
            elif coeff == -1:
                parts.append("-" + format_monomial(mono, self.basis))
            else:
                parts.append(f"{format_rational(coeff)}*{format_monomial(mono, self.basis)}")
        return f"GradedPoly({self.basis.value}: {' + '.join(parts)})"

    # ---- JSON --------------------------------------------------------------

    def to_json(self) -> dict:
        """
        Polynomial as a JSON-ready dict.

        Format:
            {"basis": "y", "terms": [{"coeff": "1/2", "exps": {"1": 2}}]}
        """
        return {
            "basis": self.basis.value,
            "terms": [
                {"coeff": format_rational(coeff), "exps": {str(j): e for j, e in mono}}
                for mono, coeff in self.items()
            ],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "GradedPoly":
        """
        Parse the JSON form produced by to_json.

        Raises:
            UsageError: On any malformed field
        """
        if not isinstance(data, Mapping):
            raise UsageError("polynomial JSON must be an object")
        try:
            basis = Basis(data.get("basis"))
        except ValueError as e:
            raise UsageError(f"unknown basis {data.get('basis')!r}") from e
        raw_terms = data.get("terms", [])
        if not isinstance(raw_terms, list):
            raise UsageError("polynomial 'terms' must be a list")
        terms: Dict[Monomial, Fraction] = {}
        for entry in raw_terms:
            if not isinstance(entry, Mapping) or "coeff" not in entry:
                raise UsageError(f"malformed term {entry!r}")
            exps = entry.get("exps", {})
            if not isinstance(exps, Mapping):
                raise UsageError(f"malformed exponents {exps!r}")
            try:
                mono = make_monomial({int(k): int(v) for k, v in exps.items()})
            except (TypeError, ValueError) as e:
                raise UsageError(f"malformed exponents {exps!r}") from e
            if mono in terms:
                raise UsageError(f"duplicate monomial {exps!r}")
            terms[mono] = parse_rational(entry["coeff"])
        return cls(basis, terms)


# =============================================================================
# RING OPERATIONS (functional forms)
# =============================================================================

def ring_add(p: GradedPoly, q: GradedPoly) -> GradedPoly:
    return p + q


def ring_mul(p: GradedPoly, q: GradedPoly) -> GradedPoly:
    return p * q


def scalar_mul(p: GradedPoly, scalar) -> GradedPoly:
    return p.scale(scalar)


# =============================================================================
# SLICE ENUMERATION
# =============================================================================

@lru_cache(maxsize=None)
def _partition_monomials(n: int, max_parts: Optional[int]) -> Tuple[Monomial, ...]:
    if n == 0:
        return (UNIT,)
    if max_parts is not None and max_parts <= 0:
        return ()
    found = []
    for part in partitions(n, m=max_parts):
        # sympy reuses the dict it yields
        found.append(make_monomial(dict(part)))
    return tuple(found)


@lru_cache(maxsize=None)
def enumerate_slice(basis: Basis, spec: DegreeSpec) -> Tuple[Monomial, ...]:
    """
    All monomials of one degree slice, in graded-lex order.

    Args:
        basis: Basis.Y / Basis.Z with an even degree 2n, or Basis.R with (d, e)
        spec: The degree (Y/Z) or bidegree (R)

    Returns:
        Tuple of monomials; empty for negative degrees

    Raises:
        UsageError: Odd degree for Y/Z, or a malformed spec

    Example:
        enumerate_slice(Basis.Y, 6)      # (y3, y1*y2, y1^3)
        enumerate_slice(Basis.R, (2, 1)) # (z0*z1,)
    """
    basis = Basis(basis)
    if basis is Basis.R:
        try:
            d, e = spec
        except (TypeError, ValueError) as err:
            raise UsageError(f"R slices need a bidegree (d, e), got {spec!r}") from err
        if d < 0 or e < 0:
            return ()
        monos = []
        for mono in _partition_monomials(e, d):
            parts = sum(exp for _, exp in mono)
            monos.append(monomial_mul(mono, ((0, d - parts),)) if d > parts else mono)
        return tuple(sorted(monos, key=lambda m: graded_lex_key(m, basis)))

    if not isinstance(spec, int):
        raise UsageError(f"{basis.value}-slices need an integer degree, got {spec!r}")
    if spec % 2:
        raise UsageError(f"odd degree {spec} has no {basis.value}-monomials")
    if spec < 0:
        return ()
    monos = _partition_monomials(spec // 2, None)
    return tuple(sorted(monos, key=lambda m: graded_lex_key(m, basis)))


# =============================================================================
# NEWTON IDENTITIES
# =============================================================================

@lru_cache(maxsize=None)
def _z_in_y(k: int) -> GradedPoly:
    """z_k written in the y-basis."""
    y = lambda j: GradedPoly.generator(Basis.Y, j)
    result = y(k).scale(Fraction((-1) ** (k - 1), factorial(k - 1)))
    for i in range(1, k):
        coeff = Fraction((-1) ** (i + k - 1) * factorial(i), factorial(k))
        result = result + (y(k - i) * _z_in_y(i)).scale(coeff)
    return result


@lru_cache(maxsize=None)
def _y_in_z(k: int) -> GradedPoly:
    """y_k written in the z-basis (the Newton recursion solved for y_k)."""
    z = lambda j: GradedPoly.generator(Basis.Z, j)
    rest = z(k)
    for i in range(1, k):
        coeff = Fraction((-1) ** (i + k - 1) * factorial(i), factorial(k))
        rest = rest - (_y_in_z(k - i) * z(i)).scale(coeff)
    return rest.scale((-1) ** (k - 1) * factorial(k - 1))


def z_in_basis(index: int, basis: Basis) -> GradedPoly:
    """
    The generator z_index expressed in the given basis (index >= 1, or 0 on R).

    Example:
        z_in_basis(2, Basis.Y)   # -y2 + 1/2*y1^2
    """
    basis = Basis(basis)
    if basis is Basis.Y:
        if index < 1:
            raise UsageError("z0 is not an element of H*(F); use the rank")
        return _z_in_y(index)
    return GradedPoly.generator(basis, index)


def _substitute(p: GradedPoly, target: Basis, image) -> GradedPoly:
    result = GradedPoly.zero(target)
    powers: Dict[Tuple[int, int], GradedPoly] = {}
    for mono, coeff in p.items():
        term = GradedPoly.constant(target, coeff)
        for index, exp in mono:
            key = (index, exp)
            if key not in powers:
                powers[key] = image(index) ** exp
            term = term * powers[key]
        result = result + term
    return result


def newton_convert(p: GradedPoly, target: Basis) -> GradedPoly:
    """
    Rewrite a polynomial of H*(F) in the other basis.

    Args:
        p: Polynomial in Basis.Y or Basis.Z
        target: Basis to convert to (returns p unchanged if already there)

    Raises:
        UsageError: For R-basis input or an R target

    Example:
        z3 = GradedPoly.generator(Basis.Z, 3)
        newton_convert(z3, Basis.Y)   # 1/2*y3 - 1/2*y1*y2 + 1/6*y1^3
    """
    target = Basis(target)
    if p.basis is Basis.R or target is Basis.R:
        raise UsageError("Newton conversion is defined on H*(F) only, not on R")
    if p.basis is target:
        return p
    image = _z_in_y if target is Basis.Y else _y_in_z
    return _substitute(p, target, image)


def vector_from_poly(p: GradedPoly, basis_monomials: Iterable[Monomial]) -> List[Fraction]:
    """
    Coordinates of p against an ordered monomial list.

    Raises:
        UsageError: If p has a monomial outside the list
    """
    basis_monomials = list(basis_monomials)
    index = {m: i for i, m in enumerate(basis_monomials)}
    vector = [Fraction(0)] * len(basis_monomials)
    for mono, coeff in p.terms.items():
        if mono not in index:
            raise UsageError(f"monomial {format_monomial(mono, p.basis)} outside the slice")
        vector[index[mono]] = coeff
    return vector


def poly_from_vector(vector: Iterable, basis_monomials: Iterable[Monomial], basis: Basis) -> GradedPoly:
    """Inverse of vector_from_poly."""
    return GradedPoly(basis, {m: c for m, c in zip(basis_monomials, vector) if c})
