"""
CLI Module

Structure:
----------
cli/
 config.py     # Settings from the environment, logging setup
 parser.py     # argparse definition of the pushcalc commands
 handlers/     # one handler per command
"""

__version__ = "1.0.0"
