"""
Argument Parser

`pushcalc` has four commands:

    pushcalc pi --rank R --degree K [--order N] [--basis y|z] [--out PATH]
    pushcalc decompose --input CLASS.json [--base pe|gen] [--out PATH]
    pushcalc verify SUBCOMMAND [range flags] [--jobs J] [--summary] [--out PATH]
    pushcalc selftest [--only N ...] [--jobs J] [--out PATH]

Every numeric flag is bounded so that a single command stays desk-scale.
argparse rejects out-of-range values with exit code 2.

Student Guide:
--------------
- `bounded(lo, hi)` builds an argparse `type=` that checks the range
- Flags shared by all sweeps live on one parent parser
- Flags left at None fall back to Settings (see cli/config.py)
"""

import argparse
from typing import Callable

MAX_RANK = 8
MAX_ORDER = 16
MAX_DEGREE = 40

VERIFY_SUBCOMMANDS = (
    "exactness-r",
    "exactness-f",
    "composition",
    "pullpush",
    "duality",
    "linearity",
    "normalization",
    "commutator",
    "newton",
    "binomial",
    "lie",
    "delta-kernel",
    "odd",
    "roundtrip",
)


def bounded(lo: int, hi: int) -> Callable[[str], int]:
    """argparse type accepting integers in [lo, hi]."""

    def parse(text: str) -> int:
        try:
            value = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
        if not lo <= value <= hi:
            raise argparse.ArgumentTypeError(f"{value} is outside [{lo}, {hi}]")
        return value

    parse.__name__ = f"int[{lo},{hi}]"
    return parse


RANK = bounded(-MAX_RANK, MAX_RANK)


def _output_parent() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("--out", default=None, help="Output JSON path ('-' or omitted: stdout)")
    return parent


def _sweep_parent() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("--jobs", type=bounded(1, 64), default=None, help="Worker processes (default PUSHCALC_JOBS)")
    parent.add_argument("--seed", type=int, default=None, help="Seed for random cases (default PUSHCALC_SEED)")
    parent.add_argument("--summary", action="store_true", help="Print a summary table to stderr")
    parent.add_argument("--timing", action="store_true", help="Include timing_ms in the report")
    parent.add_argument("--progress", action="store_true", help="Show a progress bar on stderr")
    return parent


def _rank_range(p: argparse.ArgumentParser, lo: int, hi: int) -> None:
    p.add_argument("--rank-min", type=RANK, default=lo)
    p.add_argument("--rank-max", type=RANK, default=hi)


def _add_verify(subparsers, out, sweep) -> None:
    verify = subparsers.add_parser("verify", help="Run a verification sweep")
    checks = verify.add_subparsers(dest="check", metavar="SUBCOMMAND")
    checks.required = True

    def check(name: str, help_text: str) -> argparse.ArgumentParser:
        return checks.add_parser(name, help=help_text, parents=[out, sweep])

    p = check("exactness-r", "exactness of the two-variable sequence on R")
    p.add_argument("--dmax", type=bounded(0, 14), default=10)
    p.add_argument("--emax", type=bounded(0, 14), default=10)
    p.add_argument("--total-max", type=bounded(1, 28), default=None, help="Only slices with d+e <= this")

    p = check("exactness-f", "r-dependent sequences on H*(F)")
    _rank_range(p, -3, 3)
    p.add_argument("--kmax", type=bounded(0, 12), default=10, help="Largest weight (degree 2*kmax)")

    p = check("composition", "three-route composition identity")
    p.add_argument("--imax", type=bounded(0, 5), default=3)
    p.add_argument("--jmax", type=bounded(0, 5), default=3)
    _rank_range(p, -2, 2)

    for name, help_text in (
        ("pullpush", "pull-push along a Chern-class orientation"),
        ("duality", "dual orientation sign"),
        ("linearity", "linearity over base classes"),
    ):
        p = check(name, help_text)
        p.add_argument("--kmax", type=bounded(0, 8), default=5)
        _rank_range(p, -2, 2)

    p = check("normalization", "Ξ_PE coefficients against the trivial-bundle pushforward")
    _rank_range(p, -2, 2)
    p.add_argument("--order", type=bounded(0, 10), default=None)

    p = check("commutator", "t∘z_j - z_j∘t = z_{j-1} on random kernel classes")
    _rank_range(p, -1, 2)
    p.add_argument("--jmax", type=bounded(1, 6), default=4)
    p.add_argument("--samples", type=bounded(1, 100), default=20)
    p.add_argument("--order", type=bounded(1, 10), default=8)

    p = check("newton", "Newton identities roundtrip")
    p.add_argument("--max-degree", type=bounded(2, 24), default=16)
    p.add_argument("--samples", type=bounded(1, 50), default=3)

    p = check("binomial", "generalized binomial reflection and Pascal rule")
    p.add_argument("--nmin", type=bounded(-50, 50), default=-10)
    p.add_argument("--nmax", type=bounded(-50, 50), default=10)
    p.add_argument("--kmax", type=bounded(0, 50), default=10)

    p = check("lie", "sign axioms, antisymmetry and Jacobi of the point-model bracket")
    p.add_argument("--lattice", default=None, help="Lattice JSON {'gram': [[...]]}; omitted: random lattices")
    p.add_argument("--signs", default=None, help="Sign JSON {'q': [[...]]} or {'table': [...]}")
    p.add_argument("--count", type=bounded(1, 500), default=50, help="Random lattices when --lattice is omitted")
    p.add_argument("--window", type=bounded(0, 4), default=None, help="Bracket window (default PUSHCALC_DEFAULT_WINDOW)")
    p.add_argument("--sign-window", type=bounded(0, 4), default=2)

    p = check("delta-kernel", "δ annihilates Ξ_PE and Ξ_gen")
    _rank_range(p, -2, 3)
    p.add_argument("--order", type=bounded(0, MAX_ORDER), default=8)

    p = check("odd", "odd obstruction dimensions")
    p.add_argument("--order", type=bounded(0, 10), default=None)

    p = check("roundtrip", "decompose and re-apply on random S-elements")
    p.add_argument("--ranks", type=RANK, nargs="+", default=[-1, 0, 1, 2])
    p.add_argument("--samples", type=bounded(1, 100), default=20)
    p.add_argument("--order", type=bounded(1, 10), default=None)


def build_parser() -> argparse.ArgumentParser:
    """
    Build the full pushcalc parser.

    Example:
        args = build_parser().parse_args(["pi", "--rank", "0", "--degree", "3"])
        args.command   # 'pi'
    """
    out = _output_parent()
    sweep = _sweep_parent()

    parser = argparse.ArgumentParser(
        prog="pushcalc",
        description="Exact computations with rational stable pushforward operations",
    )
    subparsers = parser.add_subparsers(dest="command", metavar="COMMAND")
    subparsers.required = True

    p = subparsers.add_parser("pi", help="Kernel basis (even degree) or obstructions (odd degree)", parents=[out])
    p.add_argument("--rank", type=RANK, required=True)
    p.add_argument("--degree", type=bounded(-MAX_DEGREE, MAX_DEGREE), required=True)
    p.add_argument("--order", type=bounded(0, MAX_ORDER), default=None)
    p.add_argument("--basis", choices=["y", "z"], default="y")

    p = subparsers.add_parser("decompose", help="Decompose a kernel class over Ξ_PE or Ξ_gen", parents=[out])
    p.add_argument("--input", required=True, help="PushforwardClass JSON ('-' for stdin)")
    p.add_argument("--base", choices=["pe", "gen"], default="pe")

    _add_verify(subparsers, out, sweep)

    p = subparsers.add_parser("selftest", help="Run the acceptance suite", parents=[out, sweep])
    p.add_argument("--only", type=bounded(1, 11), nargs="+", default=None, help="Criterion numbers to run")

    return parser
