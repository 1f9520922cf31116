"""Coloring clique blowups of triangle-free graphs within ⌈p·ω/(2q)⌉ colors.

Exact oracles, detection of holes, caps and wheels, good ear additions,
clique blowups, the transversal coloring recursion, path extension, and
independent certificate checking.
"""

from .blowup import BlowupMap, blowup_omega, build_blowup, cycle_blowup, recognize_blowup
from .engine import (
    BoundParams,
    Certificate,
    PathBlowup,
    StructuralViolation,
    TransversalPartition,
    base_threshold,
    color_blowup,
    compute_bound,
    greedy_chain_extension,
    partition_v1_v2,
    path_extension,
    select_transversal,
)
from .graph import Graph, are_anticomplete, induced_subgraph
from .oracles import (
    OracleResult,
    canonical_form,
    exact_chromatic,
    has_clique_cutset,
    max_clique_size,
    max_stable_set_size,
    true_twin_classes,
)
from .structure import (
    ClassReport,
    EarAdditionStep,
    apply_ear_addition,
    classify,
    enumerate_holes,
    find_triangle,
    find_wheel,
    generate_skeleton_corpus,
    has_cap,
    has_even_hole,
    validate_good_ear,
)
from .verify import check_certificate, conjecture_scan, tightness_table

__version__ = "0.1.0"
