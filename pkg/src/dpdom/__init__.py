"""Exact computation and verification of d-distance p-packing domination numbers."""

__version__ = "0.1.0"
