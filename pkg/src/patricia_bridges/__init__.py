__version__ = "0.1.0"
from ._bridges import (
    caterpillar,
    check_model_sample,
    finite_bridge,
    labeled_bridge,
    rtree_bridge,
    rtree_dds,
    rtree_labeled_bridge,
    zigzag_bridge,
    zigzag_spines,
)
from ._chains import ChainSpec, parse_chain, simulate
from ._core import (
    CHERRY,
    DEFAULT_SEED,
    DEPTH_CAP,
    TRIVIAL,
    BinaryTree,
    ConstantRule,
    FairCoin,
    FullBinaryTree,
    HarmonicRule,
    LabeledTree,
    Prefixed,
    PrefixRelation,
    ProductBernoulli,
    SourceMeasure,
    TreeLike,
    Word,
    WordStream,
    catalan,
    dumps_record,
    enumerate_full_trees,
    enumerate_labeled_trees,
    from_newick,
    height,
    is_radix_shaped,
    lex_compare,
    make_rng,
    meet,
    parse_measure,
    parse_word,
    patricia_contract,
    prefix_rel,
    shortlex_key,
    sibling,
    spawn_seeds,
    span_tree,
    to_dot,
    to_newick,
    tree_from_json,
    tree_to_json,
    trial_seeds,
    uniform_labeling,
)
from ._didendritic import (
    MAX_LABELS,
    FiniteDDS,
    LeftRightSeed,
    Turn,
    Violation,
    check_axioms,
    check_seed_axioms,
    counterexample_dds,
    dds_from_json,
    dds_from_tree,
    dds_to_json,
    dds_to_tree,
    left_right_extend,
    permute,
    random_corruption,
    restrict,
    seed_from_dds,
    seed_from_meets,
    zigzag_dds,
)
from ._errors import (
    AxiomViolation,
    BadLabelSet,
    DegenerateSample,
    DepthCapExceeded,
    EmptyInput,
    EmptySubset,
    IncomparabilityViolated,
    MalformedTree,
    MeasureSpecError,
    NotALeaf,
    NotDiffuse,
    NotFull,
    NotRadixShaped,
    PatriciaBridgesError,
    PropertyLRViolated,
    PropertyTViolated,
    SeedAxiomViolation,
    TooLarge,
    WrongLeafCount,
    ZeroMassLeaf,
)
from ._kernels import (
    ChainState,
    RadixSortTree,
    backward_sample,
    kappa,
    kappa_bar,
    labeled_backward_step,
    patricia_chain,
    radix_backward_sample,
    radix_sort_tree,
    radix_trajectory,
    remy_chain,
    remy_heights,
    remy_step,
    sample_inputs,
)
from ._models import BinaryCompletion, IntervalZigZag, RTreeModel, parse_model
from ._parallel import run_trials
from ._stats import (
    ExperimentReport,
    KernelTable,
    Statistic,
    conditional_resample,
    dynkin_gap,
    empirical_law,
    exact_backward_kernel,
    height_experiment,
    kernel_check,
    neininger_bound,
    neininger_depth,
    neininger_event,
    neininger_trials,
    patricia_height_lower_bound,
    persistence_set,
    persistence_union,
    recurrence_set,
    total_variation,
    tv_tolerance,
    uniformity_test,
)
from ._verify import (
    caterpillars,
    verify_backward_kernel,
    verify_bridge_kernel,
    verify_dds,
    verify_dynkin,
    verify_exchangeability,
    verify_remy_uniform,
    verify_rtree,
    verify_universality,
    verify_zigzag,
    zigzag_persistence_probability,
)

__all__ = [
    "CHERRY",
    "DEFAULT_SEED",
    "DEPTH_CAP",
    "MAX_LABELS",
    "TRIVIAL",
    "AxiomViolation",
    "BadLabelSet",
    "BinaryCompletion",
    "BinaryTree",
    "ChainSpec",
    "ChainState",
    "ConstantRule",
    "DegenerateSample",
    "DepthCapExceeded",
    "EmptyInput",
    "EmptySubset",
    "ExperimentReport",
    "FairCoin",
    "FiniteDDS",
    "FullBinaryTree",
    "HarmonicRule",
    "IncomparabilityViolated",
    "IntervalZigZag",
    "KernelTable",
    "LabeledTree",
    "LeftRightSeed",
    "MalformedTree",
    "MeasureSpecError",
    "NotALeaf",
    "NotDiffuse",
    "NotFull",
    "NotRadixShaped",
    "PatriciaBridgesError",
    "PrefixRelation",
    "Prefixed",
    "ProductBernoulli",
    "PropertyLRViolated",
    "PropertyTViolated",
    "RTreeModel",
    "RadixSortTree",
    "SeedAxiomViolation",
    "SourceMeasure",
    "Statistic",
    "TooLarge",
    "TreeLike",
    "Turn",
    "Violation",
    "Word",
    "WordStream",
    "WrongLeafCount",
    "ZeroMassLeaf",
    "backward_sample",
    "catalan",
    "caterpillar",
    "caterpillars",
    "check_axioms",
    "check_model_sample",
    "check_seed_axioms",
    "conditional_resample",
    "counterexample_dds",
    "dds_from_json",
    "dds_from_tree",
    "dds_to_json",
    "dds_to_tree",
    "dumps_record",
    "dynkin_gap",
    "empirical_law",
    "enumerate_full_trees",
    "enumerate_labeled_trees",
    "exact_backward_kernel",
    "finite_bridge",
    "from_newick",
    "height",
    "height_experiment",
    "is_radix_shaped",
    "kappa",
    "kappa_bar",
    "kernel_check",
    "labeled_backward_step",
    "labeled_bridge",
    "left_right_extend",
    "lex_compare",
    "make_rng",
    "meet",
    "neininger_bound",
    "neininger_depth",
    "neininger_event",
    "neininger_trials",
    "parse_chain",
    "parse_measure",
    "parse_model",
    "parse_word",
    "patricia_chain",
    "patricia_contract",
    "patricia_height_lower_bound",
    "permute",
    "persistence_set",
    "persistence_union",
    "prefix_rel",
    "radix_backward_sample",
    "radix_sort_tree",
    "radix_trajectory",
    "random_corruption",
    "recurrence_set",
    "remy_chain",
    "remy_heights",
    "remy_step",
    "restrict",
    "rtree_bridge",
    "rtree_dds",
    "rtree_labeled_bridge",
    "run_trials",
    "sample_inputs",
    "seed_from_dds",
    "seed_from_meets",
    "shortlex_key",
    "sibling",
    "simulate",
    "spawn_seeds",
    "span_tree",
    "to_dot",
    "to_newick",
    "total_variation",
    "tree_from_json",
    "tree_to_json",
    "trial_seeds",
    "tv_tolerance",
    "uniform_labeling",
    "uniformity_test",
    "verify_backward_kernel",
    "verify_bridge_kernel",
    "verify_dds",
    "verify_dynkin",
    "verify_exchangeability",
    "verify_remy_uniform",
    "verify_rtree",
    "verify_universality",
    "verify_zigzag",
    "zigzag_bridge",
    "zigzag_dds",
    "zigzag_persistence_probability",
    "zigzag_spines",
]
