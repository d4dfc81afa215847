"""
pushcalc
Main Command-Line Entry Point

Student Guide:
--------------
This file is deliberately small. Everything lives in modules:

1. cli/parser.py - the argparse definition of every command
2. cli/config.py - Settings from the environment and logging setup
3. cli/handlers/ - one handler per command (pi, decompose, verify, selftest)

main() only:
1. Parses the arguments
2. Loads the settings and configures logging
3. Routes to the handler
4. Maps errors to exit codes

Exit codes:
- 0: everything passed
- 1: a mathematical check (or a decomposition) failed
- 2: usage or IO error, including malformed JSON

Example usage:
    python app.py pi --rank 0 --degree 3 --order 6
    python app.py verify composition --imax 3 --jmax 3
    python app.py selftest --jobs 4
"""

import logging
import sys
from typing import List, Optional

from algebra.errors import DecompositionError, UsageError
from cli.config import LOG_FORMAT, get_settings, setup_logging
from cli.handlers import HANDLERS
from cli.parser import build_parser

logger = logging.getLogger("pushcalc")


def main(argv: Optional[List[str]] = None) -> int:
    """
    Run one pushcalc command and return its exit code.

    Args:
        argv: Arguments without the program name (default sys.argv[1:])
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse exits 2 on usage errors and 0 on --help
        return int(e.code or 0)

    try:
        settings = get_settings()
    except ValueError as e:
        logging.basicConfig(format=LOG_FORMAT)
        logger.error(f"❌ configuration error: {e}")
        return 2
    setup_logging(settings.log_level)

    try:
        return HANDLERS[args.command](args, settings)
    except UsageError as e:
        logger.error(f"❌ usage error: {e}")
        return 2
    except DecompositionError as e:
        logger.error(f"❌ {e}")
        return 1
    except (OSError, ValueError) as e:
        # ValueError covers json.JSONDecodeError
        logger.error(f"❌ input error: {e}")
        return 2


if __name__ == "__main__":
    sys.exit(main())
