"""Exact-arithmetic classifier for conjugacy-class braidings of unmixed
symmetric-group classes."""

__version__ = "0.1.0"
