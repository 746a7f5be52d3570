"""
fixword - public entry point.

Re-exports the public functions and types from the individual modules so
callers can write `from fixword import fixes, tree_word, min_fixing_length`.
"""

# Core types
from boolean_network import (
    State,
    Word,
    EMPTY_WORD,
    Digraph,
    BooleanNetwork,
    Configuration,
    apply_word,
)

# Configuration, errors and logging
from fixing_core import (
    get_limit,
    accept_cost,
    set_verbose,
    FixwordError,
    InfeasibleSizeError,
    PreconditionError,
    OutOfRangeError,
    NotFixableError,
    NotAsyncAcyclicError,
    NotALoopFullTreeError,
    BudgetExceededError,
    ParseError,
)

# Dynamics
from analyzers.network_analyzer import (
    fixed_points,
    interaction_graph,
    async_graph,
    fixes,
    is_fixable,
    is_monotone,
    is_monotone_all_pairs,
    is_async_acyclic,
)

# Words
from analyzers.word_analyzer import (
    CubePath,
    is_subword,
    is_k_universal,
    is_path_word,
    induces_cube_path,
    path_words,
    is_path_universal,
    letter_multiplicity,
    max_letter_multiplicity,
)
from generators.word_generator import (
    zigzag_universal,
    gray_word,
    gray_path,
    path_universal_word,
)

# Graphs
from analyzers.graph_analyzer import (
    strong_components,
    circumference,
    min_l_feedback_set,
    feedback_number,
    loop_full_closure,
    tree_info,
    TreeInfo,
    all_digraphs,
    symmetric_digraphs,
    loop_full_trees,
)

# Networks, families and synthesis
from generators.network_generator import (
    conjunctive_network,
    path_network,
    chain_conjunctive_network,
    enumerate_networks,
    FamilyEnumeration,
    FamilySpec,
    sample_monotone_on,
    sample_networks,
)
from generators.fixing_word_generator import (
    greedy_fix_word,
    acyclic_instance_word,
    tree_word,
    full_tree_word,
    feedback_word,
    symmetric_conjunctive_word,
)

# Oracles
from oracle import (
    shortest_fixing_word,
    min_fixing_length,
    max_fixing_length,
    conjunctive_fixing_lengths,
    shortest_family_word,
    family_min_fixing_length,
    shortest_universal_word,
    min_universal_length,
    shortest_path_universal_word,
    min_path_universal_length,
    fixable_fraction,
    sample_fixable_fraction,
)

# Input and output
from network_io import (
    parse_network,
    emit_network,
    parse_digraph,
    emit_digraph,
    parse_word,
    format_word,
    export_dot,
    save_to_file,
)
from utils.network_summary import summarize_network
