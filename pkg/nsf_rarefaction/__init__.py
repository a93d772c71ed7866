"""Vanishing-dissipation experiments for planar rarefaction waves."""

__version__ = "0.1.0"
