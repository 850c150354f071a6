"""Combinatorial calculus for curves on triangulated surfaces."""

__version__ = "0.1.0"
