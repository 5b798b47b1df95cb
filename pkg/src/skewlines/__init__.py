"""Exact computational geometry of finite sets of skew lines in P3."""

__version__ = "0.1.0"
