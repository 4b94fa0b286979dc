"""Exact computations for generating sets of the alternating group.

The central object is the set of A-transpositions (1 2)(i j) generating A_n:
canonical presentations, closed-form lengths, counting triangles,
generating functions, moments, and a brute-force Cayley-graph oracle that
checks all of them.
"""

from .perm import Permutation, compose, inverse, parse, sign

__all__ = ["Permutation", "compose", "inverse", "parse", "sign"]
__version__ = "0.1.0"
