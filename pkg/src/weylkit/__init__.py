"""Exact operator calculus for Weyl and Demazure character formulas."""

from .char_ring import Character
from .root_system import CartanLabel, RootSystem, build, parse_label
from .weyl_group import WeylGroup, enumerate_group

__all__ = [
    "CartanLabel",
    "Character",
    "RootSystem",
    "WeylGroup",
    "build",
    "enumerate_group",
    "parse_label",
]

__version__ = "0.1.0"
