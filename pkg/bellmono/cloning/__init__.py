"""Cloning shrinking factors."""
from bellmono.cloning.shrinking import CloningReport, mean_shrink_bound, nonnegative_counterpart, shrinking_factors

__all__ = ['CloningReport', 'mean_shrink_bound', 'nonnegative_counterpart', 'shrinking_factors']
