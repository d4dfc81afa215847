"""
Operations Module

Pushforward classes and everything that acts on them.

Structure:
----------
operations/
 pushforward.py   # classes, δ, Ξ_PE / Ξ_gen, S-action, even kernels, odd obstructions
 twisted.py       # the twisted algebra S, its action, decomposition over a base
 chern.py         # Chern-class ring, ◇-action, trivial-bundle pushforward
 composition.py   # the three composition routes and their identity
"""

__version__ = "1.0.0"
