"""Bipartition flattening of multipartite scenarios."""
from bellmono.multipartite.flatten import (
    Bipartition,
    IndexMaps,
    flatten_behavior,
    flatten_bipartition,
    flatten_with_local_bound,
)

__all__ = ['Bipartition', 'IndexMaps', 'flatten_behavior', 'flatten_bipartition', 'flatten_with_local_bound']
