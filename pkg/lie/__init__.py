"""
Lie Module

Euler lattices, sign systems and graded bracket tables.

Example usage:
    from lie.liealg import EulerLattice, construct_sign_q, point_bracket_table, verify_lie_axioms

    L = EulerLattice(1, ((2,),))
    table = point_bracket_table(L, construct_sign_q(L), window=2)
    verify_lie_axioms(table, L)["pass"]   # True
"""

__version__ = "1.0.0"
