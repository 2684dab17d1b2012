"""Exact q-series engine for the D4 elliptic Frobenius structure."""

__version__ = "0.1.0"
