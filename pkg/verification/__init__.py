"""
Verification Module

Structure:
----------
verification/
 sweeps.py       # case functions and the builders that enumerate them
 acceptance.py   # the eleven acceptance criteria behind `pushcalc selftest`
"""

__version__ = "1.0.0"
