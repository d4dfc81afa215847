"""
Verify Handler

`pushcalc verify <subcommand>` turns the range flags into an ordered case
list, runs it through run_sweep and writes the RunReport.

Student Guide:
--------------
Each subcommand is one builder: args -> (parameters, cases).
Adding a check means adding one case function in verification/sweeps.py,
one builder here and one subparser in cli/parser.py.
"""

import logging
import sys
from typing import Callable, Dict, List, Tuple

from algebra.errors import UsageError
from cli.config import Settings
from lie.liealg import EulerLattice
from reports.run_report import Case, read_json, run_sweep, summary_table, write_report
from verification import sweeps

logger = logging.getLogger(__name__)

Built = Tuple[Dict, List[Case]]


def _rank_params(args) -> Dict:
    if args.rank_min > args.rank_max:
        raise UsageError(f"--rank-min {args.rank_min} exceeds --rank-max {args.rank_max}")
    return {"rank_min": args.rank_min, "rank_max": args.rank_max}


def _exactness_r(args, settings: Settings, seed: int) -> Built:
    params = {"dmax": args.dmax, "emax": args.emax, "total_max": args.total_max}
    return params, sweeps.exactness_r_cases(args.dmax, args.emax, args.total_max)


def _exactness_f(args, settings: Settings, seed: int) -> Built:
    params = {**_rank_params(args), "kmax": args.kmax}
    return params, sweeps.exactness_f_cases(args.rank_min, args.rank_max, args.kmax)


def _composition(args, settings: Settings, seed: int) -> Built:
    params = {"imax": args.imax, "jmax": args.jmax, **_rank_params(args)}
    return params, sweeps.composition_cases(args.imax, args.jmax, args.rank_min, args.rank_max)


def _kr(func) -> Callable[..., Built]:
    def build(args, settings: Settings, seed: int) -> Built:
        params = {"kmax": args.kmax, **_rank_params(args)}
        return params, sweeps.kr_cases(func, args.kmax, args.rank_min, args.rank_max)

    return build


def _normalization(args, settings: Settings, seed: int) -> Built:
    order = settings.default_order if args.order is None else args.order
    params = {**_rank_params(args), "order": order}
    return params, sweeps.normalization_cases(args.rank_min, args.rank_max, order)


def _commutator(args, settings: Settings, seed: int) -> Built:
    params = {**_rank_params(args), "jmax": args.jmax, "samples": args.samples, "order": args.order, "seed": seed}
    return params, sweeps.commutator_cases(args.rank_min, args.rank_max, args.jmax, args.samples, seed, args.order)


def _newton(args, settings: Settings, seed: int) -> Built:
    params = {"max_degree": args.max_degree, "samples": args.samples, "seed": seed}
    return params, sweeps.newton_cases(args.max_degree, args.samples, seed)


def _binomial(args, settings: Settings, seed: int) -> Built:
    if args.nmin > args.nmax:
        raise UsageError(f"--nmin {args.nmin} exceeds --nmax {args.nmax}")
    params = {"nmin": args.nmin, "nmax": args.nmax, "kmax": args.kmax}
    return params, [(sweeps.case_binomial, dict(params))]


def _lie(args, settings: Settings, seed: int) -> Built:
    window = settings.default_window if args.window is None else args.window
    signs = read_json(args.signs) if args.signs else None
    params = {"window": window, "sign_window": args.sign_window}
    if args.lattice:
        lattices = [EulerLattice.from_json(read_json(args.lattice))]
        params["lattice"] = lattices[0].to_json()
    else:
        lattices = sweeps.random_lattices(args.count, seed)
        params.update({"count": args.count, "seed": seed})
    if signs is not None:
        params["signs"] = signs
    return params, sweeps.lie_cases(lattices, args.sign_window, window, signs)


def _delta_kernel(args, settings: Settings, seed: int) -> Built:
    params = {**_rank_params(args), "order": args.order}
    return params, sweeps.delta_kernel_cases(args.rank_min, args.rank_max, args.order)


def _odd(args, settings: Settings, seed: int) -> Built:
    order = settings.default_order if args.order is None else args.order
    return {"order": order}, sweeps.odd_cases(order)


def _roundtrip(args, settings: Settings, seed: int) -> Built:
    order = settings.default_order if args.order is None else args.order
    params = {"ranks": list(args.ranks), "samples": args.samples, "order": order, "seed": seed}
    return params, sweeps.roundtrip_cases(args.ranks, args.samples, seed, order)


BUILDERS: Dict[str, Callable[..., Built]] = {
    "exactness-r": _exactness_r,
    "exactness-f": _exactness_f,
    "composition": _composition,
    "pullpush": _kr(sweeps.case_pullpush),
    "duality": _kr(sweeps.case_duality),
    "linearity": _kr(sweeps.case_linearity),
    "normalization": _normalization,
    "commutator": _commutator,
    "newton": _newton,
    "binomial": _binomial,
    "lie": _lie,
    "delta-kernel": _delta_kernel,
    "odd": _odd,
    "roundtrip": _roundtrip,
}


def handle_verify(args, settings: Settings) -> int:
    """
    Handle `pushcalc verify <subcommand>`.

    Returns:
        0 if every case passed, 1 otherwise

    Example:
        pushcalc verify composition --imax 3 --jmax 3 --rank-min -2 --rank-max 2
    """
    seed = settings.seed if args.seed is None else args.seed
    jobs = settings.jobs if args.jobs is None else args.jobs
    parameters, cases = BUILDERS[args.check](args, settings, seed)

    report = run_sweep(
        f"verify {args.check}", parameters, cases, jobs=jobs, progress=args.progress or settings.progress
    )
    write_report(report, args.out, include_timing=args.timing)

    if args.summary:
        table = summary_table(report)
        print(table.to_string(index=False) if not table.empty else "(no cases)", file=sys.stderr)

    failure = report.first_failure()
    if failure is not None:
        logger.error(f"❌ first failing case: {failure.params}")
        return 1
    return 0
