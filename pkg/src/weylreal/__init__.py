"""Exact analysis of Weyl group elements acting on Z^{1,n}."""

__version__ = "0.1.0"
