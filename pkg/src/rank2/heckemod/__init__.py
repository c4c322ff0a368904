"""Affine Hecke algebra modules: construction, verification and structure."""
