"""Pseudodeterministic minimum cuts.

Every function that returns a cut gives a dict with ``side`` (sorted vertices,
containing the source), ``base_value`` and the full layered ``weight`` tuple.
"""

from ._pdcut import (
    Graph,
    ParseError,
    ProtocolError,
    RandomnessFailure,
    StreamError,
    accumulate_cut_weight,
    call_budget,
    canonical_cut_oracle,
    default_amplification,
    global_cut,
    global_cut_via_queries,
    global_cut_via_stream,
    materialize,
    min_cut_family,
    replicate,
    st_cut,
    transform_stream,
    uniqueness_test,
)

__all__ = [
    "Graph",
    "ParseError",
    "ProtocolError",
    "RandomnessFailure",
    "StreamError",
    "accumulate_cut_weight",
    "call_budget",
    "canonical_cut_oracle",
    "default_amplification",
    "global_cut",
    "global_cut_via_queries",
    "global_cut_via_stream",
    "materialize",
    "min_cut_family",
    "replicate",
    "st_cut",
    "transform_stream",
    "uniqueness_test",
]
