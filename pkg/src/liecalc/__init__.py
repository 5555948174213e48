"""Exact computations around the basic affine space G/U.

Root systems and Weyl groups, line bundle cohomology on G/B, lattice data of
S-varieties, and the polynomial calculus of the Fourier twists on U(h-hat).
"""

from .rootsystem import RootSystem, RootSystemError, build, parse_type

__all__ = ["RootSystem", "RootSystemError", "build", "parse_type"]
__version__ = "0.1.0"
