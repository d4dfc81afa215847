"""
Command Handlers

One handler per pushcalc command:
- pi.py: kernel bases and odd obstructions
- decompose.py: S-module decomposition of a kernel class
- verify.py: the verification sweeps
- selftest.py: the acceptance suite

Every handler has the signature handler(args, settings) -> exit code.

Example usage:
    from cli.handlers import HANDLERS

    code = HANDLERS[args.command](args, get_settings())
"""

from cli.handlers.decompose import handle_decompose
from cli.handlers.pi import handle_pi
from cli.handlers.selftest import handle_selftest
from cli.handlers.verify import handle_verify

HANDLERS = {
    "pi": handle_pi,
    "decompose": handle_decompose,
    "verify": handle_verify,
    "selftest": handle_selftest,
}

__all__ = [
    'handle_pi',
    'handle_decompose',
    'handle_verify',
    'handle_selftest',
    'HANDLERS',
]
