"""Conflict-free DNA codes: constraint predicates, bound search, and the
binary-to-DNA isometric block encoder."""

from .constraints import (
    ConstraintReport,
    DnaCode,
    conflict_free_level,
    count_special_strings,
    is_complete_conflict_free,
    is_conflict_free,
    is_rc_substring_free,
    verify_code,
)
from .core import complement, gc_content, hamming_distance, reverse, reverse_complement
from .isomap import (
    BlockPair,
    TransitionMap,
    binary_distance,
    encode,
    enumerate_valid_pairs,
    min_binary_distance,
    validate_pair,
)
from .search import (
    BoundTable,
    SearchConfig,
    SeedSetSpec,
    enumerate_seed_set,
    exact_max_size,
    extremal_size,
    orbit_closure,
    random_construction,
)

__version__ = "0.1.0"

__all__ = [
    "BlockPair",
    "BoundTable",
    "ConstraintReport",
    "DnaCode",
    "SearchConfig",
    "SeedSetSpec",
    "TransitionMap",
    "__version__",
    "binary_distance",
    "complement",
    "conflict_free_level",
    "count_special_strings",
    "encode",
    "enumerate_seed_set",
    "enumerate_valid_pairs",
    "exact_max_size",
    "extremal_size",
    "gc_content",
    "hamming_distance",
    "is_complete_conflict_free",
    "is_conflict_free",
    "is_rc_substring_free",
    "min_binary_distance",
    "orbit_closure",
    "random_construction",
    "reverse",
    "reverse_complement",
    "validate_pair",
    "verify_code",
]
