"""Exact computer algebra for families of ideals with linear products."""

__version__ = "0.1.0"
