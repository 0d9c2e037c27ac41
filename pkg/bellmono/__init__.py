"""Exact Bell bounds, monogamy relations and cloning bounds of nonlocal correlations."""

__version__ = "0.1.0"
