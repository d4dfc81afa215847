"""
Three-Route Composition Identity

Three chains of pushforwards start from ξ_1^i ξ_2^j (or its image under
the middle section) and end in polynomials of the symbols

    A_a = c_a(ϑ_1),  B_b = c_b(ϑ_2),  C_c = c_c(ϑ_3)

Each route is computed twice: from its closed-form triple sum, and by
running pe_trivial / chern_class through the section-and-twist
bookkeeping. The identity checked at the end is

    route1 - route2 = (-1)^{r_1} route3
"""

import logging
from typing import Dict, Sequence

from algebra.errors import UsageError
from algebra.numkernel import generalized_binomial
from operations.chern import ChernRing, OrientationExpr, OrientationTerm

logger = logging.getLogger(__name__)

XI1, XI2, XI3, XIK = 0, 1, 2, 3
SYM_A, SYM_B, SYM_C = 0, 1, 2


def composition_ring(i: int, j: int, ranks: Sequence[int]) -> ChernRing:
    """Ring with fibers ξ1, ξ2, ξ3, ξκ and symbols A, B, C; cutoff i+j+Σ|r|+4."""
    r1, r2, r3 = ranks
    cutoff = i + j + abs(r1) + abs(r2) + abs(r3) + 4
    return ChernRing(["xi1", "xi2", "xi3", "xik"], [("A", r1), ("B", r2), ("C", r3)], cutoff)


def _closed_form(R: ChernRing, i: int, j: int, ranks: Sequence[int], route: int):
    r1, r2, r3 = ranks
    total = i + j + r1 + r2 + r3 + 2
    result = R.zero
    if total < 0:
        return result
    for a in range(total + 1):
        for b in range(total - a + 1):
            c = total - a - b
            if route == 1:
                coeff = generalized_binomial(r3 - c, b - j - r2 - 1)
            elif route == 2:
                coeff = generalized_binomial(r3 - c, a - i - r1 - 1)
            else:
                sign = -1 if (r1 + b - j - r2 - 1) % 2 else 1
                coeff = sign * generalized_binomial(r1 - a + i, c - r3 - 1)
            if coeff:
                result += coeff * R.c(a, SYM_A) * R.c(b, SYM_B) * R.c(c, SYM_C)
    return result


def _machinery(R: ChernRing, i: int, j: int, route: int, middle_weight: int = -1):
    xi1, xi2, xi3, xik = (R.xi(f) for f in (XI1, XI2, XI3, XIK))
    if route == 1:
        first = OrientationExpr.of(
            OrientationTerm(SYM_A), OrientationTerm(SYM_C, weight=1, fiber=XI2)
        )
        step = R.pe_trivial(xi1 ** i * xi2 ** j, first, XI1)
        return R.pe_trivial(step, OrientationExpr.plain(SYM_B), XI2)
    if route == 2:
        first = OrientationExpr.of(
            OrientationTerm(SYM_B), OrientationTerm(SYM_C, weight=1, fiber=XI1)
        )
        step = R.pe_trivial(xi1 ** i * xi2 ** j, first, XI2)
        return R.pe_trivial(step, OrientationExpr.plain(SYM_A), XI1)
    # middle section: ξ1 pulls back to ξ3 - ξκ, ξ2 to ξκ
    first = OrientationExpr.of(
        OrientationTerm(SYM_A, weight=middle_weight, fiber=XI3, dual=True), OrientationTerm(SYM_B)
    )
    step = R.pe_trivial((xi3 - xik) ** i * xik ** j, first, XIK)
    return R.pe_trivial(step, OrientationExpr.plain(SYM_C), XI3)


def composition_routes(i: int, j: int, ranks: Sequence[int], R: ChernRing = None) -> Dict[str, list]:
    """
    All three routes, closed form and machinery.

    Returns:
        {"closed": [route1, route2, route3], "machinery": [route1, route2, route3]}

    Example:
        routes = composition_routes(0, 0, (0, 0, 0))
        routes["closed"][0]   # A1*B1 + B1*C1
    """
    if i < 0 or j < 0:
        raise UsageError("i and j must be nonnegative")
    if len(ranks) != 3:
        raise UsageError("composition needs exactly three ranks")
    R = R or composition_ring(i, j, ranks)
    return {
        "closed": [_closed_form(R, i, j, ranks, route) for route in (1, 2, 3)],
        "machinery": [_machinery(R, i, j, route) for route in (1, 2, 3)],
    }


def composition_check(i: int, j: int, ranks: Sequence[int]) -> Dict:
    """
    Check route1 - route2 - (-1)^{r_1} route3 = 0 and that each closed form
    matches its machinery computation.

    The middle route twists the dual of ϑ_1 with weight -1. The same route
    with weight +1 is reported as positive_twist_agrees; it does not enter
    the pass flag.

    Returns:
        {"check": "composition", "params": {...}, "pass": bool,
         "residual_terms": n, "routes_agree": [bool, bool, bool],
         "positive_twist_agrees": bool}
    """
    ranks = [int(r) for r in ranks]
    R = composition_ring(i, j, ranks)
    routes = composition_routes(i, j, ranks, R)
    closed, machine = routes["closed"], routes["machinery"]
    agree = [closed[n] == machine[n] for n in range(3)]
    positive = bool(_machinery(R, i, j, 3, middle_weight=1) == closed[2])

    sign = -1 if ranks[0] % 2 else 1
    residual = closed[0] - closed[1] - sign * closed[2]
    report = {
        "check": "composition",
        "params": {"i": i, "j": j, "r": ranks},
        "pass": bool(all(agree) and not residual),
        "residual_terms": len(residual),
        "routes_agree": agree,
        "positive_twist_agrees": positive,
    }
    if residual:
        report["residual"] = str(residual.as_expr())
    for n in range(3):
        if not agree[n]:
            report[f"route{n + 1}_mismatch"] = str((closed[n] - machine[n]).as_expr())
            logger.warning(f"❌ route {n + 1} closed form disagrees with machinery at i={i}, j={j}, r={ranks}")
    return report
