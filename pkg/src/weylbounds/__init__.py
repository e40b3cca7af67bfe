"""Exact Jantzen sum-formula data and first-cohomology bounds for groups of Lie type."""
from .errors import DomainError
from .rootsys import RootSystem, RootSystemSpec, build, build_label, pairing, weyl_group_order

__version__ = "0.1.0"

__all__ = [
    "DomainError",
    "RootSystem",
    "RootSystemSpec",
    "build",
    "build_label",
    "pairing",
    "weyl_group_order",
]
