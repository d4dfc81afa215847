"""
Trivial-Bundle Chern Calculus

Models H*(B)[ξ_1, ..., ξ_s] with formal K-theory symbols ϑ_k whose Chern
classes c_a(ϑ_k) are free commuting generators. On the trivial bundle the
projective Euler pushforward is

    π_!(ξ^k) = c_{k+r+1}(ϑ)

and every other identity (base-linearity, duality, pull-push) is checked
as an exact polynomial identity in these symbols.

Student Guide:
--------------
The ring is a sympy PolyRing over QQ. Every generator has a weight:
- ξ_f has weight 1 (cohomological degree 2)
- c_a(ϑ_k) has weight a
Products are truncated above the weight cutoff D. Anything that needs a
term beyond D raises CutoffOverflowError instead of silently dropping it.

Twisting a class by a line bundle L^w (Whitney + line-twist formula):
    c_m(L^w ⊗ V) = Σ_ℓ binom(rk V - ℓ, m - ℓ) (wξ)^{m-ℓ} c_ℓ(V)
Dual classes flip signs: c_ℓ(V̆) = (-1)^ℓ c_ℓ(V).
"""

import logging
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from sympy.polys.domains import QQ
from sympy.polys.rings import PolyRing

from algebra.errors import CutoffOverflowError, UsageError
from algebra.numkernel import generalized_binomial
from algebra.polyring import Basis, GradedPoly

logger = logging.getLogger(__name__)


# =============================================================================
# ORIENTATION EXPRESSIONS
# =============================================================================

@dataclass(frozen=True)
class OrientationTerm:
    """
    One summand L_{ξ_fiber}^{⊗weight} ⊗ ϑ_symbol (or its dual).

    fiber is None for an untwisted term.
    """

    symbol: int
    weight: int = 0
    fiber: Optional[int] = None
    dual: bool = False

    @property
    def twisted(self) -> bool:
        return self.fiber is not None and self.weight != 0


@dataclass(frozen=True)
class OrientationExpr:
    """
    Formal sum of twisted K-symbols.

    Example usage:
        o = OrientationExpr.of(OrientationTerm(symbol=0), OrientationTerm(symbol=2, weight=1, fiber=1))
    """

    terms: Tuple[OrientationTerm, ...]

    @classmethod
    def of(cls, *terms: OrientationTerm) -> "OrientationExpr":
        return cls(tuple(terms))

    @classmethod
    def plain(cls, symbol: int = 0) -> "OrientationExpr":
        return cls((OrientationTerm(symbol),))

    def untwisted_in(self, fiber: int) -> "OrientationExpr":
        """Drop the twists along one fiber variable (the underlying class)."""
        return OrientationExpr(
            tuple(replace(t, weight=0, fiber=None) if t.fiber == fiber else t for t in self.terms)
        )


# =============================================================================
# CHERN RING
# =============================================================================

class ChernRing:
    """
    Truncated polynomial ring in fiber variables and Chern symbols.

    Args:
        fibers: Names of the fiber variables, e.g. ["xi1", "xi2"]
        symbols: (name, rank) per K-symbol; c_a of symbol "A" is named "A{a}"
        cutoff: Weight cutoff D (cohomological degree 2D)

    Example usage:
        R = ChernRing(["xi"], [("c", 2)], cutoff=4)
        o = OrientationExpr.of(OrientationTerm(0, weight=1, fiber=0))
        R.chern_class(o, 1)     # 2*xi + c1
    """

    def __init__(self, fibers: Sequence[str], symbols: Sequence[Tuple[str, int]], cutoff: int):
        if cutoff < 0:
            raise UsageError("cutoff must be nonnegative")
        self.fibers = list(fibers)
        self.symbols = [name for name, _ in symbols]
        self.ranks = [int(rank) for _, rank in symbols]
        self.cutoff = cutoff

        names = list(self.fibers)
        self.weights = [1] * len(self.fibers)
        self._chern_index: Dict[Tuple[int, int], int] = {}
        for k, name in enumerate(self.symbols):
            for a in range(1, cutoff + 1):
                self._chern_index[(k, a)] = len(names)
                names.append(f"{name}{a}")
                self.weights.append(a)
        self.ring = PolyRing(names, QQ)
        self._totals: Dict[OrientationTerm, object] = {}
        logger.debug(f"ChernRing initialized: {len(names)} generators, cutoff {cutoff}")

    # ---- elements ----------------------------------------------------------

    @property
    def zero(self):
        return self.ring.zero

    @property
    def one(self):
        return self.ring.one

    def scalar(self, value):
        value = Fraction(value)
        return self.ring(QQ(value.numerator, value.denominator))

    def xi(self, fiber: int):
        return self.ring.gens[fiber]

    def c(self, a: int, symbol: int):
        """c_a(ϑ_symbol): 1 at a = 0, 0 below."""
        if a < 0:
            return self.ring.zero
        if a == 0:
            return self.ring.one
        if a > self.cutoff:
            raise CutoffOverflowError(f"c_{a}({self.symbols[symbol]}) exceeds cutoff {self.cutoff}")
        return self.ring.gens[self._chern_index[(symbol, a)]]

    def weight(self, monom: Tuple[int, ...]) -> int:
        return sum(w * e for w, e in zip(self.weights, monom))

    def truncate(self, p):
        return self.ring.from_dict({m: c for m, c in p.items() if self.weight(m) <= self.cutoff})

    def mul(self, p, q):
        """Exact product; raises if any term lands beyond the cutoff."""
        product = p * q
        if any(self.weight(m) > self.cutoff for m in product.keys()):
            raise CutoffOverflowError(f"product exceeds weight cutoff {self.cutoff}")
        return product

    def homogeneous_part(self, p, weight: int):
        return self.ring.from_dict({m: c for m, c in p.items() if self.weight(m) == weight})

    def rank(self, o: OrientationExpr) -> int:
        return sum(self.ranks[t.symbol] for t in o.terms)

    # ---- Chern classes -----------------------------------------------------

    def _term_total(self, term: OrientationTerm):
        """Total Chern class Σ_m c_m of one twisted term, truncated at D."""
        if term in self._totals:
            return self._totals[term]
        rank = self.ranks[term.symbol]
        sign = lambda ell: -1 if (term.dual and ell % 2) else 1
        total = self.ring.zero
        if not term.twisted:
            for m in range(self.cutoff + 1):
                total += sign(m) * self.c(m, term.symbol)
        else:
            line = term.weight * self.xi(term.fiber)
            for m in range(self.cutoff + 1):
                for ell in range(m + 1):
                    coeff = generalized_binomial(rank - ell, m - ell)
                    if coeff:
                        total += coeff * sign(ell) * line ** (m - ell) * self.c(ell, term.symbol)
        self._totals[term] = total
        return total

    def total_chern(self, o: OrientationExpr):
        """Whitney product of the term totals, truncated at D."""
        total = self.ring.one
        for term in o.terms:
            total = self.truncate(total * self._term_total(term))
        return total

    def chern_class(self, o: OrientationExpr, j: int):
        """
        c_j(o); 0 for j < 0 and 1 for j = 0.

        Raises:
            CutoffOverflowError: If j exceeds the cutoff
        """
        if j < 0:
            return self.ring.zero
        if j == 0:
            return self.ring.one
        if j > self.cutoff:
            raise CutoffOverflowError(f"c_{j} exceeds weight cutoff {self.cutoff}")
        return self.homogeneous_part(self.total_chern(o), j)

    # ---- fiber-variable calculus ------------------------------------------

    def expand_in(self, alpha, fiber: int) -> Dict[int, object]:
        """α = Σ_k β_k ξ^k with β_k free of ξ_fiber; returns {k: β_k}."""
        parts: Dict[int, Dict] = {}
        for monom, coeff in alpha.items():
            k = monom[fiber]
            rest = monom[:fiber] + (0,) + monom[fiber + 1:]
            parts.setdefault(k, {})[rest] = coeff
        return {k: self.ring.from_dict(d) for k, d in sorted(parts.items())}

    def diamond(self, j: int, alpha, fiber: int):
        """
        t_j ⋄ α: linear extension of ξ^i -> binom(i, j) ξ^{i-j}.

        Example:
            R.diamond(1, xi**3, 0)   # 3*xi**2
        """
        if j < 0:
            raise UsageError("diamond needs j >= 0")
        terms = {}
        for monom, coeff in alpha.items():
            i = monom[fiber]
            if i < j:
                continue
            lowered = monom[:fiber] + (i - j,) + monom[fiber + 1:]
            terms[lowered] = terms.get(lowered, QQ(0)) + coeff * generalized_binomial(i, j)
        return self.ring.from_dict({m: c for m, c in terms.items() if c})

    def invert(self, alpha, fiber: int):
        """ξ_fiber -> -ξ_fiber."""
        return self.ring.from_dict(
            {m: (-c if m[fiber] % 2 else c) for m, c in alpha.items()}
        )

    def pe_trivial(self, alpha, o: OrientationExpr, fiber: int):
        """
        Projective Euler pushforward along ξ_fiber on the trivial bundle.

        Expands α = Σ β_k ξ^k and returns Σ β_k c_{k+r+1}(o'), where o'
        is o with its twists along ξ_fiber removed and r = rank(o).

        Raises:
            CutoffOverflowError: If a needed Chern class or product term
                lies beyond the cutoff
        """
        r = self.rank(o)
        base = o.untwisted_in(fiber)
        result = self.ring.zero
        for k, beta in self.expand_in(alpha, fiber).items():
            if not beta:
                continue
            result += self.mul(beta, self.chern_class(base, k + r + 1))
        return result

    def from_y_poly(self, p: GradedPoly, symbol: int):
        """Read a y-basis polynomial as Chern symbols, y_j -> c_j(ϑ_symbol)."""
        if p.basis is not Basis.Y:
            raise UsageError("only y-basis polynomials map to Chern symbols")
        result = self.ring.zero
        for mono, coeff in p.items():
            term = self.scalar(coeff)
            for index, exp in mono:
                term = term * self.c(index, symbol) ** exp
            result += term
        return result


# =============================================================================
# IDENTITY CHECKS
# =============================================================================

def _report(check: str, params: Dict, residual) -> Dict:
    report = {"check": check, "params": params, "pass": not residual, "residual_terms": len(residual)}
    if residual:
        report["residual"] = str(residual.as_expr())
    return report


def _single_ring(k: int, r: int, extra_symbols: Sequence[Tuple[str, int]] = (), margin: int = 2) -> ChernRing:
    return ChernRing(["xi"], [("c", r), *extra_symbols], cutoff=k + abs(r) + 1 + margin)


def dual_check(k: int, r: int) -> Dict:
    """
    Duality: pushing forward along the dual bundle (action reversed)
    equals (-1)^{r+1} times the ordinary pushforward, on ξ^k.

    The dual route inverts ξ and uses the dual class ϑ̆.
    """
    R = _single_ring(k, r)
    alpha = R.xi(0) ** k
    plain = R.pe_trivial(alpha, OrientationExpr.plain(0), 0)
    dual = R.pe_trivial(R.invert(alpha, 0), OrientationExpr.of(OrientationTerm(0, dual=True)), 0)
    sign = -1 if (r + 1) % 2 else 1
    return _report("duality", {"k": k, "r": r}, dual - sign * plain)


def pull_push_check(k: int, r: int) -> Dict:
    """
    Pull-push: π^* π_!(ξ^k) = Σ_ℓ (t_ℓ ⋄ ξ^k) c_{ℓ+r+1}(L ⊗ ϑ).

    Example:
        pull_push_check(1, 0)["pass"]   # True: ξc1 + (c2 - ξc1) = c2
    """
    R = _single_ring(k, r)
    alpha = R.xi(0) ** k
    lhs = R.chern_class(OrientationExpr.plain(0), k + r + 1)
    twisted = OrientationExpr.of(OrientationTerm(0, weight=1, fiber=0))
    rhs = R.zero
    for ell in range(k + 1):
        rhs += R.mul(R.diamond(ell, alpha, 0), R.chern_class(twisted, ell + r + 1))
    return _report("pullpush", {"k": k, "r": r}, lhs - rhs)


def linearity_check(k: int, r: int) -> Dict:
    """
    Base-linearity: π_!(β ξ^k) = β π_!(ξ^k) for base monomials β of
    weight <= 2 in the orientation's own symbol and an auxiliary one.
    """
    R = _single_ring(k, r, extra_symbols=[("b", 0)])
    alpha = R.xi(0) ** k
    o = OrientationExpr.plain(0)
    pushed = R.pe_trivial(alpha, o, 0)
    c1, c2, b1, b2 = R.c(1, 0), R.c(2, 0), R.c(1, 1), R.c(2, 1)
    residual = R.zero
    failures = 0
    for beta in (c1, c2, c1 ** 2, b1, b2, b1 ** 2, c1 * b1):
        diff = R.pe_trivial(beta * alpha, o, 0) - R.mul(beta, pushed)
        if diff:
            failures += 1
            residual += diff
    report = _report("linearity", {"k": k, "r": r}, residual)
    report["pass"] = failures == 0
    return report


def normalization_check(r: int, order: int) -> Dict:
    """
    Compare the Ξ_PE coefficients C_i (read as Chern symbols) with the
    trivial-bundle pushforward of ξ^i, for i = 0..order.
    """
    from operations.pushforward import xi_pe

    cls = xi_pe(r, order)
    R = ChernRing(["xi"], [("c", r)], cutoff=order + max(r, -1) + 2)
    o = OrientationExpr.plain(0)
    residual = R.zero
    mismatched: List[int] = []
    for i, coeff in enumerate(cls.coeffs):
        diff = R.from_y_poly(coeff, 0) - R.pe_trivial(R.xi(0) ** i, o, 0)
        if diff:
            mismatched.append(i)
            residual += diff
    report = _report("normalization", {"r": r, "order": order}, residual)
    if mismatched:
        report["indices"] = mismatched
    return report
