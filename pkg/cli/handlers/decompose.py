"""
Decompose Handler

`pushcalc decompose` reads a kernel class and writes u in S with
s_act(u, base) equal to it, then re-applies u to confirm.

Exit codes:
- 0: decomposition found and the roundtrip reproduces the input
- 1: input not in the kernel of δ, no decomposition, or roundtrip mismatch
- 2: unreadable or malformed input
"""

import logging

from algebra.errors import DecompositionError
from cli.config import Settings
from operations.pushforward import PushforwardClass
from operations.twisted import BaseClass, decompose, roundtrip_check
from reports.run_report import read_json, write_json

logger = logging.getLogger(__name__)


def handle_decompose(args, settings: Settings) -> int:
    e = PushforwardClass.from_json(read_json(args.input))
    base = BaseClass(args.base.upper())
    logger.info(f"🚀 decompose: k={e.degree} r={e.rank} N={e.order} over {base.value}")

    witness = e.kernel_witness()
    if witness is not None:
        logger.error(f"❌ input is not a kernel class; recursion fails at index {witness}")
        write_json(
            {"command": "decompose", "pass": False, "is_kernel": False, "witness_index": witness},
            args.out,
        )
        return 1

    try:
        result = decompose(e, base)
    except DecompositionError as err:
        logger.error(f"❌ {err}")
        write_json({"command": "decompose", "pass": False, "is_kernel": True, "error": str(err)}, args.out)
        return 1

    ok = roundtrip_check(result, e)
    data = {"command": "decompose"}
    data.update(result.to_json())
    data["coeffs"] = [f.to_json() for f in result.element.coeffs]
    data["roundtrip"] = ok
    data["pass"] = ok
    if ok:
        logger.info(f"✅ roundtrip verified on orders 0..{result.valid_order}")
    else:
        logger.error("❌ s_act(u, base) does not reproduce the input")
    write_json(data, args.out)
    return 0 if ok else 1
