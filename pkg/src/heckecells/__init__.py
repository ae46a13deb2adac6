"""Exact Kazhdan-Lusztig and based-ring computations for the extended affine
Weyl group of type B~3 attached to Sp6(C)."""

__version__ = "0.1.0"
