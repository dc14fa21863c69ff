"""Kazhdan-Lusztig polynomials from Bruhat-graph path counts and slalom polynomials."""

__version__ = "0.1.0"
