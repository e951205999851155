"""Exact enumeration and search for Klazar set-partition avoidance, parallel
permutation-tuple avoidance, and ordered-hypergraph avoidance."""

from .core import (
    MAX_ENUM_N,
    Permutation,
    SetPartition,
    bell,
    contains_partition,
    enumerate_partitions,
    enumerate_permutations,
    is_layered,
    parse_partition,
    parse_permutation,
    render,
    restrict,
    standardize,
)
from .engine import (
    ENGINE_VERSION,
    Classification,
    CountCache,
    CountRecord,
    GrowthEstimate,
    LowerBoundCertificate,
    avoidance_sequence,
    classify_class,
    count_avoiders,
    count_avoiders_naive,
    growth_fit,
    lower_bound_certificate,
)
from .errors import *  # noqa: F401,F403
from .hypergraph import (
    MaxWeightResult,
    OrderedHypergraph,
    contains_hypergraph,
    contract_with_multiplicity,
    enumerate_perm_hypergraphs,
    interval_contract,
    max_weight_avoiding,
    parse_hypergraph,
    partition_to_hypergraph,
    project,
    render_hypergraph,
    weight,
)
from .permutability import (
    IntervalCover,
    correspondent_partition,
    is_srp,
    min_interval_cover,
    permutability,
    permutability_oracle,
    pm_distribution,
)
from .tuples import (
    MonteCarloEstimate,
    PermutationTuple,
    antichain_probability,
    complement_at,
    contains_parallel,
    count_tuple_avoiders,
    inversion_set,
    parse_tuple,
    render_tuple,
    weak_bruhat_leq,
)

__version__ = "0.1.0"
