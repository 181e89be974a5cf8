"""Canonical-form representation and FFT-based solution of linear dynamic PDEs."""

__version__ = "0.1.0"
