"""
Algebra Module

Exact scalars, graded polynomial rings and the derivations acting on them.

Structure:
----------
algebra/
 errors.py       # UsageError, CutoffOverflowError, DecompositionError
 numkernel.py    # factorials, binomials, rational parsing
 polyring.py     # GradedPoly in the y-, z- and R-bases, Newton identities
 slices.py       # exact linear algebra on one degree slice
 derivation.py   # ∂, γ, ε and the exactness checks

Example usage:
    from algebra.polyring import Basis, GradedPoly
    from algebra.derivation import DerivationContext, partial

    ctx = DerivationContext(rank=1, basis=Basis.Y)
    partial(ctx, GradedPoly.generator(Basis.Y, 1))   # 1
"""

__version__ = "1.0.0"
