"""Exact representation theory of rank-two affine Hecke algebras."""

__version__ = "0.1.0"
