from ._measures import (
    ConstantRule,
    FairCoin,
    HarmonicRule,
    Prefixed,
    ProductBernoulli,
    SourceMeasure,
    parse_measure,
)
from ._random import DEFAULT_SEED, make_rng, spawn_seeds, trial_seeds
from ._serialize import (
    TreeLike,
    dumps_record,
    from_newick,
    to_dot,
    to_newick,
    tree_from_json,
    tree_to_json,
)
from ._trees import (
    CHERRY,
    TRIVIAL,
    BinaryTree,
    FullBinaryTree,
    LabeledTree,
    catalan,
    enumerate_full_trees,
    enumerate_labeled_trees,
    height,
    is_radix_shaped,
    patricia_contract,
    span_tree,
    uniform_labeling,
)
from ._words import (
    DEPTH_CAP,
    PrefixRelation,
    Word,
    WordStream,
    lex_compare,
    meet,
    parse_word,
    prefix_rel,
    shortlex_key,
    sibling,
)

__all__ = [
    "CHERRY",
    "DEFAULT_SEED",
    "DEPTH_CAP",
    "TRIVIAL",
    "BinaryTree",
    "ConstantRule",
    "FairCoin",
    "FullBinaryTree",
    "HarmonicRule",
    "LabeledTree",
    "PrefixRelation",
    "Prefixed",
    "ProductBernoulli",
    "SourceMeasure",
    "TreeLike",
    "Word",
    "WordStream",
    "catalan",
    "dumps_record",
    "enumerate_full_trees",
    "enumerate_labeled_trees",
    "from_newick",
    "height",
    "is_radix_shaped",
    "lex_compare",
    "make_rng",
    "meet",
    "parse_measure",
    "parse_word",
    "patricia_contract",
    "prefix_rel",
    "shortlex_key",
    "sibling",
    "spawn_seeds",
    "span_tree",
    "to_dot",
    "to_newick",
    "trial_seeds",
    "tree_from_json",
    "tree_to_json",
    "uniform_labeling",
]
