"""Optimal prefix codes whose shrunken code tree is as small as possible.

Given positive integer symbol weights, the package finds a codeword-length
profile that is optimal in the Huffman sense and, among all optimal
profiles, minimises the size of the skeleton: the code tree with every
maximal perfect subtree collapsed to a single leaf.  A compact container
format encodes byte streams against such codes and decodes them by
descending the skeleton.
"""

from .errors import (
    ArityMismatchError,
    CorruptHeaderError,
    EmptyAlphabetError,
    EmptyInputError,
    EmptyKRangeError,
    EmptyRangeError,
    InternalInconsistencyError,
    KraftNotOneError,
    NonPositiveWeightError,
    NotFullTreeError,
    PaddingNotZeroError,
    SkelhuffError,
    TooLargeError,
    TruncatedStreamError,
    UnknownSymbolError,
    WeightOverflowError,
)
from .tree import (
    MAX_TOTAL_WEIGHT,
    Node,
    build_huffman_tree,
    byte_frequency_weights,
    check_weights,
    code_cost,
    iter_nodes,
    kraft_sum,
    load_weights_file,
    parse_weights_text,
    q_source_of,
)
from .classes import ClassTable, WeightClass, build_class_table
from .dp import (
    min_pop_cubic,
    min_pop_fast,
    optimal_q_source,
    split_pop_ranges,
    successor_layer,
)
from .skeleton import (
    SkelNode,
    SkeletonResult,
    code_tree_from_q_source,
    count_skeleton_nodes,
    iter_skeleton_leaves,
    optimal_skeleton,
    q_prime_of,
    shrink_tree,
    skeleton_from_q_source,
)
from .codec import (
    MAGIC,
    Codebook,
    codebook_for_weights,
    decode,
    decode_via_code_tree,
    encode,
)
from .oracle import brute_min_pop, enumerate_optimal_q_sources
from .dot import skeleton_to_dot, tree_to_dot

__version__ = "0.1.0"

__all__ = [
    "ArityMismatchError",
    "ClassTable",
    "Codebook",
    "CorruptHeaderError",
    "EmptyAlphabetError",
    "EmptyInputError",
    "EmptyKRangeError",
    "EmptyRangeError",
    "InternalInconsistencyError",
    "KraftNotOneError",
    "MAGIC",
    "MAX_TOTAL_WEIGHT",
    "Node",
    "NonPositiveWeightError",
    "NotFullTreeError",
    "PaddingNotZeroError",
    "SkelNode",
    "SkeletonResult",
    "SkelhuffError",
    "TooLargeError",
    "TruncatedStreamError",
    "UnknownSymbolError",
    "WeightClass",
    "WeightOverflowError",
    "brute_min_pop",
    "build_class_table",
    "build_huffman_tree",
    "byte_frequency_weights",
    "check_weights",
    "code_cost",
    "code_tree_from_q_source",
    "codebook_for_weights",
    "count_skeleton_nodes",
    "decode",
    "decode_via_code_tree",
    "encode",
    "enumerate_optimal_q_sources",
    "iter_nodes",
    "iter_skeleton_leaves",
    "kraft_sum",
    "load_weights_file",
    "min_pop_cubic",
    "min_pop_fast",
    "optimal_q_source",
    "optimal_skeleton",
    "parse_weights_text",
    "q_prime_of",
    "q_source_of",
    "shrink_tree",
    "skeleton_from_q_source",
    "skeleton_to_dot",
    "split_pop_ranges",
    "successor_layer",
    "tree_to_dot",
    "__version__",
]
