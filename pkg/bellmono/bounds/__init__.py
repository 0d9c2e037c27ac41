"""Local-realistic and no-signaling bounds of Bell functionals."""
from bellmono.bounds.local import DeterministicStrategy, LocalBoundEnumerator, local_bound
from bellmono.bounds.nonsignaling import (
    NsCoordinates,
    NsPolytope,
    ns_bound,
    ns_coordinates,
    ns_optimum,
    sample_ns_behavior,
)

__all__ = [
    'DeterministicStrategy',
    'LocalBoundEnumerator',
    'local_bound',
    'NsCoordinates',
    'NsPolytope',
    'ns_bound',
    'ns_coordinates',
    'ns_optimum',
    'sample_ns_behavior'
]
