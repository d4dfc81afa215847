"""
Verification Sweeps

One case function per kind of check, plus the builders that turn CLI
ranges into ordered case lists for reports.run_report.run_sweep.

Student Guide:
--------------
Case functions:
- are module-level (so worker processes can import them)
- take plain ints / lists (so they pickle)
- return a report dict with a "pass" key

Randomness:
- every random case gets its own seed derived from (base seed, case
  index), so a case gives the same answer whatever process runs it
"""

import logging
import random
from fractions import Fraction
from typing import Dict, List, Optional, Sequence

from algebra.derivation import exactness_F_slice, exactness_R_slice
from algebra.errors import DecompositionError
from algebra.numkernel import generalized_binomial
from algebra.polyring import Basis, GradedPoly, enumerate_slice, newton_convert
from lie.liealg import (
    EulerLattice,
    SignSystem,
    construct_sign_q,
    point_bracket_table,
    verify_lie_axioms,
    verify_sign_axioms,
)
from operations.chern import dual_check, linearity_check, normalization_check, pull_push_check
from operations.composition import composition_check
from operations.pushforward import (
    PushforwardClass,
    delta,
    pi_odd_obstructions,
    t_action,
    xi_gen,
    xi_pe,
    zj_action,
)
from operations.twisted import BaseClass, SElement, base_class, decompose, roundtrip_check, s_act
from reports.run_report import Case

logger = logging.getLogger(__name__)


def case_seed(seed: int, *index: int) -> int:
    """Deterministic per-case seed."""
    rng = random.Random(seed)
    for i in index:
        rng = random.Random(rng.getrandbits(64) ^ (i * 0x9E3779B97F4A7C15))
    return rng.getrandbits(64)


# =============================================================================
# RANDOM OBJECTS
# =============================================================================

def random_z_poly(rng: random.Random, degree: int, max_terms: int = 2) -> GradedPoly:
    monos = enumerate_slice(Basis.Z, degree)
    if not monos:
        return GradedPoly.zero(Basis.Z)
    chosen = rng.sample(list(monos), min(max_terms, len(monos)))
    return GradedPoly(Basis.Z, {m: rng.choice([-2, -1, 1, 2, 3]) for m in chosen})


def random_s_element(rng: random.Random, rank: int, support: int = 3, max_shift: int = 4) -> SElement:
    """
    Homogeneous S-element Σ f_i t^i with at most `support` nonzero terms.

    deg f_i - 2i equals a common shift in {0, 2, ..., max_shift}.
    """
    shift = 2 * rng.randint(0, max_shift // 2)
    coeffs = [GradedPoly.zero(Basis.Z) for _ in range(3)]
    for _ in range(support):
        i = rng.randint(0, 2)
        coeffs[i] = coeffs[i] + random_z_poly(rng, shift + 2 * i, max_terms=1)
    element = SElement(rank, tuple(coeffs))
    if element.is_zero():
        element = SElement.one(rank)
    return element


def default_base(rank: int) -> BaseClass:
    return BaseClass.PE if rank == 0 else BaseClass.GEN


def random_kernel_class(rng: random.Random, rank: int, order: int, support: int = 3) -> PushforwardClass:
    """u(base) for a random u; kernel by construction, of the requested order."""
    u = random_s_element(rng, rank, support)
    margin = max(0, max(f.max_weight() - i for i, f in enumerate(u.coeffs) if not f.is_zero()))
    B = base_class(default_base(rank), rank, order + margin)
    return s_act(u, B).truncate(order)


def random_lattice(rng: random.Random, max_rank: int = 3, bound: int = 2) -> EulerLattice:
    n = rng.randint(1, max_rank)
    gram = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            gram[i][j] = gram[j][i] = rng.randint(-bound, bound)
    return EulerLattice(n, tuple(tuple(row) for row in gram))


# =============================================================================
# CASE FUNCTIONS
# =============================================================================

def case_exactness_r(d: int, e: int) -> Dict:
    return exactness_R_slice(d, e)


def case_exactness_f(r: int, e: int) -> Dict:
    return exactness_F_slice(r, e)


def case_composition(i: int, j: int, r: List[int]) -> Dict:
    return composition_check(i, j, r)


def case_duality(k: int, r: int) -> Dict:
    return dual_check(k, r)


def case_pullpush(k: int, r: int) -> Dict:
    return pull_push_check(k, r)


def case_linearity(k: int, r: int) -> Dict:
    return linearity_check(k, r)


def case_normalization(r: int, order: int) -> Dict:
    return normalization_check(r, order)


def case_delta_kernel(r: int, base: str, order: int) -> Dict:
    """δ of the distinguished class vanishes on orders 0..order."""
    e = xi_pe(r, order) if base == "PE" else xi_gen(r, order)
    image = delta(e)
    nonzero = [i for i in range(order + 1) if not image.coeffs[i].is_zero()]
    report = {"check": "delta_kernel", "pass": not nonzero, "is_kernel": e.is_kernel()}
    report["pass"] = report["pass"] and report["is_kernel"]
    if nonzero:
        report["first_nonzero"] = nonzero[0]
    return report


def case_odd(r: int, k: int, order: int) -> Dict:
    """Odd obstruction dimension against its expected value (1 only at r=0, k=3)."""
    result = pi_odd_obstructions(k, r, order)
    expected = 1 if (r, k) == (0, 3) else 0
    report = {"check": "odd", "dimension": result.dimension, "expected": expected}
    report["pass"] = result.dimension == expected
    if (r, k) == (0, 5):
        report["label"] = "eta_cup"
    if (r, k) == (0, 3):
        witness = result.witnesses[0] if result.witnesses else None
        unit = witness is not None and witness.coeffs[0] == 1 and all(
            c.is_zero() for c in witness.coeffs[1:]
        )
        report["witness_is_unit"] = unit
        report["pass"] = report["pass"] and unit
    return report


def case_commutator(r: int, j: int, sample: int, seed: int, order: int = 8) -> Dict:
    """t∘z_j - z_j∘t = z_{j-1} on one random kernel class."""
    rng = random.Random(case_seed(seed, r + 100, j, sample))
    e = random_kernel_class(rng, r, order)
    lhs = t_action(zj_action(j, e)) - zj_action(j, t_action(e))
    rhs = e.scale(r) if j == 1 else zj_action(j - 1, e)
    valid = min(lhs.order, rhs.order)
    ok = lhs.agrees_with(rhs, valid)
    return {"check": "commutator", "valid_order": valid, "pass": bool(ok and e.is_kernel())}


def case_roundtrip(r: int, sample: int, seed: int, order: int = 6) -> Dict:
    """decompose(s_act(u, base)) re-applied to the base reproduces the class."""
    rng = random.Random(case_seed(seed, r + 100, sample))
    e = random_kernel_class(rng, r, order)
    base = default_base(r)
    try:
        result = decompose(e, base)
    except DecompositionError as err:
        return {"check": "roundtrip", "pass": False, "error": str(err)}
    ok = roundtrip_check(result, e)
    return {
        "check": "roundtrip",
        "base": base.value,
        "valid_order": result.valid_order,
        "pass": bool(ok and result.valid_order >= order - 1),
    }


def case_newton(degree: int, sample: int, seed: int) -> Dict:
    """y -> z -> y and z -> y -> z are the identity on a random polynomial."""
    rng = random.Random(case_seed(seed, degree, sample))
    failures = []
    for basis, other in ((Basis.Y, Basis.Z), (Basis.Z, Basis.Y)):
        monos = list(enumerate_slice(basis, degree))
        chosen = rng.sample(monos, min(4, len(monos)))
        p = GradedPoly(basis, {m: Fraction(rng.randint(-9, 9) or 1, rng.randint(1, 5)) for m in chosen})
        if newton_convert(newton_convert(p, other), basis) != p:
            failures.append(basis.value)
    report = {"check": "newton", "pass": not failures}
    if failures:
        report["failed_bases"] = failures
    return report


def case_binomial(nmin: int = -10, nmax: int = 10, kmax: int = 10) -> Dict:
    """binom(n,k) - binom(n,n-k) = (-1)^k binom(k-n-1,-n-1), and Pascal's rule."""
    witness = None
    for n in range(nmin, nmax + 1):
        for k in range(0, kmax + 1):
            sign = -1 if k % 2 else 1
            lhs = generalized_binomial(n, k) - generalized_binomial(n, n - k)
            if lhs != sign * generalized_binomial(k - n - 1, -n - 1):
                witness = {"rule": "reflection", "n": n, "k": k}
                break
            if k >= 1 and generalized_binomial(n, k) != generalized_binomial(n - 1, k) + generalized_binomial(n - 1, k - 1):
                witness = {"rule": "pascal", "n": n, "k": k}
                break
        if witness:
            break
    report = {"check": "binomial", "pass": witness is None}
    if witness:
        report["witness"] = witness
    return report


def case_lie(gram: List[List[int]], sign_window: int, bracket_window: int, signs: Optional[dict] = None) -> Dict:
    """Sign axioms, then antisymmetry and Jacobi of the point-model table."""
    lattice = EulerLattice(len(gram), tuple(tuple(row) for row in gram))
    system = SignSystem.from_json(signs, lattice.rank) if signs else construct_sign_q(lattice)
    sign_report = verify_sign_axioms(system, lattice, sign_window)
    lie_report = verify_lie_axioms(point_bracket_table(lattice, system, bracket_window), lattice)
    report = {
        "check": "lie",
        "sign_axioms_pass": sign_report["pass"],
        "antisymmetry_pass": lie_report["antisymmetry_pass"],
        "jacobi_pass": lie_report["jacobi_pass"],
        "nonzero_brackets": lie_report["nonzero_brackets"],
        "triples_checked": lie_report["triples_checked"],
    }
    for key in ("antisymmetry_witness", "jacobi_witness", "jacobi_failures"):
        if key in lie_report:
            report[key] = lie_report[key]
    if "failures" in sign_report:
        report["sign_failures"] = sign_report["failures"]
    report["pass"] = bool(sign_report["pass"] and lie_report["pass"])
    return report


# =============================================================================
# CASE BUILDERS
# =============================================================================

def exactness_r_cases(dmax: int, emax: int, total_max: Optional[int] = None) -> List[Case]:
    return [
        (case_exactness_r, {"d": d, "e": e})
        for d in range(dmax + 1)
        for e in range(emax + 1)
        if (d, e) != (0, 0) and (total_max is None or d + e <= total_max)
    ]


def exactness_f_cases(rank_min: int, rank_max: int, kmax: int) -> List[Case]:
    return [(case_exactness_f, {"r": r, "e": e}) for r in range(rank_min, rank_max + 1) for e in range(kmax + 1)]


def composition_cases(imax: int, jmax: int, rank_min: int, rank_max: int) -> List[Case]:
    ranks = range(rank_min, rank_max + 1)
    return [
        (case_composition, {"i": i, "j": j, "r": [r1, r2, r3]})
        for i in range(imax + 1)
        for j in range(jmax + 1)
        for r1 in ranks
        for r2 in ranks
        for r3 in ranks
    ]


def kr_cases(func, kmax: int, rank_min: int, rank_max: int) -> List[Case]:
    return [(func, {"k": k, "r": r}) for k in range(kmax + 1) for r in range(rank_min, rank_max + 1)]


def normalization_cases(rank_min: int, rank_max: int, order: int) -> List[Case]:
    return [(case_normalization, {"r": r, "order": order}) for r in range(rank_min, rank_max + 1)]


def delta_kernel_cases(rank_min: int, rank_max: int, order: int) -> List[Case]:
    cases = []
    for r in range(rank_min, rank_max + 1):
        cases.append((case_delta_kernel, {"r": r, "base": "PE", "order": order}))
        if r != 0:
            cases.append((case_delta_kernel, {"r": r, "base": "GEN", "order": order}))
    return cases


def odd_cases(order: int) -> List[Case]:
    cases = [(case_odd, {"r": r, "k": k, "order": order}) for r in (-2, -1, 1, 2, 3) for k in (1, 3, 5, 7)]
    cases += [(case_odd, {"r": 0, "k": k, "order": order}) for k in (-1, 1, 3, 5, 7)]
    return sorted(cases, key=lambda c: (c[1]["r"], c[1]["k"]))


def commutator_cases(rank_min: int, rank_max: int, jmax: int, samples: int, seed: int, order: int) -> List[Case]:
    return [
        (case_commutator, {"r": r, "j": j, "sample": s, "seed": seed, "order": order})
        for r in range(rank_min, rank_max + 1)
        for j in range(1, jmax + 1)
        for s in range(samples)
    ]


def roundtrip_cases(ranks: Sequence[int], samples: int, seed: int, order: int) -> List[Case]:
    return [
        (case_roundtrip, {"r": r, "sample": s, "seed": seed, "order": order}) for r in ranks for s in range(samples)
    ]


def newton_cases(max_degree: int, samples: int, seed: int) -> List[Case]:
    return [
        (case_newton, {"degree": d, "sample": s, "seed": seed})
        for d in range(2, max_degree + 1, 2)
        for s in range(samples)
    ]


def lie_cases(
    lattices: Sequence[EulerLattice], sign_window: int, bracket_window: int, signs: Optional[dict] = None
) -> List[Case]:
    cases = []
    for lattice in lattices:
        kwargs = {
            "gram": [list(row) for row in lattice.gram],
            "sign_window": sign_window,
            "bracket_window": bracket_window,
        }
        if signs is not None:
            kwargs["signs"] = signs
        cases.append((case_lie, kwargs))
    return cases


def random_lattices(count: int, seed: int) -> List[EulerLattice]:
    rng = random.Random(seed)
    return [random_lattice(rng) for _ in range(count)]
