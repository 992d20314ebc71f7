"""Exact CSM/SSM class computations and positivity checks."""

__version__ = "1.0.0"
