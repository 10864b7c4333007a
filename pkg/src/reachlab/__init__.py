"""Reachability analysis for circular binary automata."""

from .core import (
    BinaryDfa,
    StateSet,
    Word,
    apply,
    excl_dupl,
    is_circular_normalized,
    is_standardized,
    normalize_circular,
    preimage,
    standardize,
)
from .counterexamples import build_A_n, build_B_8, verify_counterexample
from .orbit import Coset, Subgroup, coset_index, m_t, orbit, orbit_subgroup, subgroup_chain
from .reachability import is_completely_reachable, reach_table, witnesses
from .words import (
    bounds_report,
    construct_reaching_word,
    don_check,
    expand_step,
    find_expanding_word,
    pi_predecessors,
    shortest_reaching_word,
)

__all__ = [
    "BinaryDfa", "StateSet", "Word", "apply", "excl_dupl", "is_circular_normalized",
    "is_standardized", "normalize_circular", "preimage", "standardize",
    "build_A_n", "build_B_8", "verify_counterexample",
    "Coset", "Subgroup", "coset_index", "m_t", "orbit", "orbit_subgroup", "subgroup_chain",
    "is_completely_reachable", "reach_table", "witnesses",
    "bounds_report", "construct_reaching_word", "don_check", "expand_step",
    "find_expanding_word", "pi_predecessors", "shortest_reaching_word",
]
