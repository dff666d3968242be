"""Parallel byte-string matching via chunkable monoids and tree reduction."""

from .bytetext import EMPTY, ByteText, RangeError, chunkable_ops
from .matcher import (
    StringMatcher,
    TargetMismatchError,
    cast_indices,
    is_good_index,
    make_indices,
    make_new_indices,
    make_sm_indices,
    matcher_ops,
    naive_match,
    shift_indices,
    sm_append,
    sm_empty,
    to_sm,
    to_sm_witness,
)
from .monoid import (
    ChunkableOps,
    LawReport,
    LawResult,
    MonoidOps,
    MorphismWitness,
    check_monoid_laws,
    check_morphism,
    chunk,
    mconcat,
    morphism_distribution_check,
    pmap,
    pmconcat,
    set_default_workers,
)
from .pipeline import (
    ChunkPlan,
    EquivalenceEntry,
    EquivalenceReport,
    default_plan_sweep,
    to_sm_par,
    verify_equivalence,
)

__all__ = [
    "EMPTY",
    "ByteText",
    "RangeError",
    "chunkable_ops",
    "StringMatcher",
    "TargetMismatchError",
    "cast_indices",
    "is_good_index",
    "make_indices",
    "make_new_indices",
    "make_sm_indices",
    "matcher_ops",
    "naive_match",
    "shift_indices",
    "sm_append",
    "sm_empty",
    "to_sm",
    "to_sm_witness",
    "ChunkableOps",
    "LawReport",
    "LawResult",
    "MonoidOps",
    "MorphismWitness",
    "check_monoid_laws",
    "check_morphism",
    "chunk",
    "mconcat",
    "morphism_distribution_check",
    "pmap",
    "pmconcat",
    "set_default_workers",
    "ChunkPlan",
    "EquivalenceEntry",
    "EquivalenceReport",
    "default_plan_sweep",
    "to_sm_par",
    "verify_equivalence",
]

__version__ = "0.1.0"
