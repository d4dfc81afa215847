"""
Acceptance Suite

The eleven acceptance criteria, each run as an ordered sweep. `pushcalc
selftest` calls run_acceptance and exits 0 only when every criterion
passes.
"""

import logging
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional

from reports.run_report import RunReport, run_sweep
from verification import sweeps

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Criterion:
    number: int
    name: str
    build: Callable[[int], list]


def _binomial_and_newton(seed: int) -> list:
    return [(sweeps.case_binomial, {})] + sweeps.newton_cases(16, 3, seed)


CRITERIA: List[Criterion] = [
    Criterion(1, "exactness of the R sequence, d+e <= 10", lambda seed: sweeps.exactness_r_cases(10, 10, 10)),
    Criterion(2, "r-dependent sequences on H*(F), |r| <= 3, degree <= 20", lambda seed: sweeps.exactness_f_cases(-3, 3, 10)),
    Criterion(3, "odd obstructions at order 6", lambda seed: sweeps.odd_cases(6)),
    Criterion(4, "δ kills the distinguished classes, order 8", lambda seed: sweeps.delta_kernel_cases(-2, 3, 8)),
    Criterion(5, "t∘z_j - z_j∘t = z_{j-1}", lambda seed: sweeps.commutator_cases(-1, 2, 4, 20, seed, 8)),
    Criterion(6, "decomposition roundtrip", lambda seed: sweeps.roundtrip_cases((-1, 0, 1, 2), 20, seed, 6)),
    Criterion(7, "three-route composition identity", lambda seed: sweeps.composition_cases(3, 3, -2, 2)),
    Criterion(
        8,
        "pull-push and duality, k <= 5, |r| <= 2",
        lambda seed: sweeps.kr_cases(sweeps.case_pullpush, 5, -2, 2) + sweeps.kr_cases(sweeps.case_duality, 5, -2, 2),
    ),
    Criterion(9, "Newton roundtrip and the binomial reflection identity", _binomial_and_newton),
    Criterion(
        10,
        "sign axioms, antisymmetry and Jacobi on random lattices",
        lambda seed: sweeps.lie_cases(sweeps.random_lattices(50, seed), 2, 3),
    ),
    Criterion(11, "Ξ_PE coefficients match the trivial-bundle pushforward", lambda seed: sweeps.normalization_cases(-2, 2, 6)),
]


def run_acceptance(
    seed: int,
    jobs: int = 1,
    progress: bool = False,
    only: Optional[List[int]] = None,
) -> Dict:
    """
    Run the selected criteria (all by default).

    Returns:
        {"command": "selftest", "seed": ..., "pass": bool, "criteria": [...]}
    """
    results = []
    for criterion in CRITERIA:
        if only and criterion.number not in only:
            continue
        report: RunReport = run_sweep(
            f"criterion {criterion.number}", {"seed": seed}, criterion.build(seed), jobs=jobs, progress=progress
        )
        entry = {
            "criterion": criterion.number,
            "name": criterion.name,
            "pass": report.passed,
            "cases": len(report.details),
        }
        failure = report.first_failure()
        if failure is not None:
            entry["first_failure"] = failure.to_json()
            entry["failures"] = sum(1 for case in report.details if not case.passed)
        results.append(entry)

    passed = all(entry["pass"] for entry in results)
    logger.info(f"📊 selftest: {sum(e['pass'] for e in results)} of {len(results)} criteria passed")
    return {"command": "selftest", "seed": seed, "pass": passed, "criteria": results}
