"""Numerical liaison theory for curves on rational normal scrolls."""

__version__ = "0.1.0"
