"""Prüfer codecs for finite rooted hypertrees.

Two mutually inverse encodings of rooted hypertrees as (partition, word)
pairs: the classical codec that prunes leaf-type hyperedges and a codec
that merges hyperedges by star-reduction.  On top of them: exhaustive
enumeration with Stirling-number counting, the star-reduction poset with
its Moebius function, and the induced bijections of symmetric groups via
halfline trees.
"""

from .classic import (
    CLASSIC,
    STAR,
    PruferCode,
    decode_classic,
    encode_classic,
)
from .core import (
    GlueMap,
    MarkedHyperedge,
    PartitionMap,
    PruferPartition,
    RootedHypertree,
    adjacency,
    degree,
    distance,
    from_glue,
    geodesic,
    glue_map,
    is_leaf_type,
    leaves,
    mark,
    nonleaf_rank,
    nonleaves,
    partition_from_map,
    partition_from_parts,
    partition_map,
    prufer_partition,
    spine,
    star_reduce,
    star_reduce_set,
    to_ordinary,
    validate,
)
from .enumeration import (
    DegreeWeight,
    StarPoset,
    brute_force_hypertrees,
    count_all_hypertrees,
    count_hypertrees,
    degree_weight,
    enumerate_hypertrees,
    set_partitions,
    stirling2,
    verify_generating_identity,
)
from .errors import (
    CompositionMismatch,
    DepthTooSmall,
    Disconnected,
    EdgeTooSmall,
    HypertreeError,
    LengthMismatch,
    LetterOutOfRange,
    NoStabilization,
    NotAnEdge,
    NotAPermutation,
    NotATree,
    NotConstantOnPart,
    NotEventuallyRoot,
    NotIdempotent,
    NotLowering,
    OutOfRange,
    ParseError,
    RootNotMax,
    UnknownVertex,
)
from .files import emit_code, emit_tree, parse_code, parse_tree
from .permline import (
    FiniteSupportPermutation,
    IdealPair,
    IdealPairReport,
    orbits,
    perm_encode_star,
    perm_to_tree,
    sn_map,
    validate_ideal_pair,
)
from .star import (
    IncrementalStep,
    StarStep,
    decode_star,
    encode_star,
    encode_star_incremental,
    incremental_trace,
    star_steps,
)

__version__ = "0.1.0"
