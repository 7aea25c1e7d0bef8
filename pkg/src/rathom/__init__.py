"""Exact rational models for nilpotent groups and simply connected spaces."""

__version__ = "0.1.0"
