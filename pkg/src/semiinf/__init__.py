"""Exact combinatorics of affine Weyl groups: Bruhat and semi-infinite orders,
admissible chamber tuples, and fixed-point models of Schubert varieties."""

from semiinf.rootsystem import RootSystem, build_root_system, SUPPORTED_TYPES
from semiinf.affine_weyl import Element

__all__ = ["RootSystem", "build_root_system", "SUPPORTED_TYPES", "Element"]
__version__ = "0.1.0"
