"""
Pi Handler

`pushcalc pi` computes Π^k at truncation order N: a kernel basis in even
degree, the obstruction dimension and witnesses in odd degree.
"""

import logging

from algebra.polyring import Basis
from cli.config import Settings
from operations.pushforward import pi_even, pi_odd_obstructions
from reports.run_report import write_json

logger = logging.getLogger(__name__)


def handle_pi(args, settings: Settings) -> int:
    """
    Handle `pushcalc pi`.

    Example:
        pushcalc pi --rank 0 --degree 3 --order 6
        # {"dimension": 1, "witness": [1 ⊠ x_0], ...}
    """
    order = settings.default_order if args.order is None else args.order
    basis = Basis(args.basis)
    logger.info(f"🚀 pi: k={args.degree} r={args.rank} N={order}")

    if args.degree % 2 == 0:
        classes = pi_even(args.degree, args.rank, order, basis)
        data = {
            "command": "pi",
            "parity": "even",
            "degree": args.degree,
            "rank": args.rank,
            "order": order,
            "dimension": len(classes),
            "basis": [c.to_json() for c in classes],
        }
    else:
        report = pi_odd_obstructions(args.degree, args.rank, order, basis)
        data = {"command": "pi", "parity": "odd"}
        data.update(report.to_json())

    logger.info(f"📊 dimension {data['dimension']}")
    write_json(data, args.out)
    return 0
