"""
Selftest Handler

`pushcalc selftest` runs the acceptance suite (all eleven criteria, or the
ones named by --only) and exits 0 only when all of them pass.
"""

import logging
import sys

import pandas as pd

from cli.config import Settings
from reports.run_report import write_json
from verification.acceptance import run_acceptance

logger = logging.getLogger(__name__)


def handle_selftest(args, settings: Settings) -> int:
    seed = settings.seed if args.seed is None else args.seed
    jobs = settings.jobs if args.jobs is None else args.jobs
    logger.info(f"🚀 selftest: seed={seed} jobs={jobs}")

    result = run_acceptance(seed, jobs=jobs, progress=args.progress or settings.progress, only=args.only)
    write_json(result, args.out)

    if args.summary:
        table = pd.DataFrame(
            [{k: c[k] for k in ("criterion", "pass", "cases", "name")} for c in result["criteria"]]
        )
        print(table.to_string(index=False), file=sys.stderr)

    for criterion in result["criteria"]:
        if not criterion["pass"]:
            logger.error(f"❌ criterion {criterion['criterion']} failed: {criterion['name']}")
    return 0 if result["pass"] else 1
