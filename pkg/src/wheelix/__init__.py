"""Prefix-sortable (Wheeler) finite automata toolbox."""

from .automaton import (
    Automaton,
    SENTINEL,
    check_input_consistency,
    gen_worst_case,
    naive_accepts,
    nondeterminism_degree,
    parse_automaton,
    serialize_automaton,
    topological_order,
    trie_from_strings,
)
from .convert import min_wdfa_from_acyclic_dfa
from .determinize import (
    check_prefix_suffix_family,
    determinize,
    determinize_full,
    tight_interval_family,
)
from .index import (
    MEMBERSHIP,
    SUBSTRING_CLOSURE,
    SUFFIX_CLOSURE,
    RankRange,
    WheelerIndex,
    build_index,
    follow,
    parse_index,
    query,
    serialize_index,
)
from .minimize import (
    StatePartition,
    hopcroft_minimize,
    is_minimum_wdfa,
    language_equivalent,
    state_equivalence,
    wheeler_minimize,
)
from .order import (
    WheelerOrder,
    brute_force_wheeler_order,
    parse_order,
    relabel_by_order,
    serialize_order,
    verify_wheeler_order,
)
from .sorting import sort_offline, sort_online
from .twosat import TwoSatInstance, build_2sat, solve_2sat, sort_2nfa
from . import errors, generators

__all__ = [
    "Automaton",
    "SENTINEL",
    "MEMBERSHIP",
    "SUBSTRING_CLOSURE",
    "SUFFIX_CLOSURE",
    "RankRange",
    "StatePartition",
    "TwoSatInstance",
    "WheelerIndex",
    "WheelerOrder",
    "build_2sat",
    "build_index",
    "check_input_consistency",
    "check_prefix_suffix_family",
    "determinize",
    "determinize_full",
    "errors",
    "follow",
    "gen_worst_case",
    "generators",
    "hopcroft_minimize",
    "is_minimum_wdfa",
    "language_equivalent",
    "min_wdfa_from_acyclic_dfa",
    "naive_accepts",
    "nondeterminism_degree",
    "parse_automaton",
    "parse_index",
    "parse_order",
    "query",
    "relabel_by_order",
    "serialize_automaton",
    "serialize_index",
    "serialize_order",
    "solve_2sat",
    "sort_2nfa",
    "sort_offline",
    "sort_online",
    "state_equivalence",
    "tight_interval_family",
    "topological_order",
    "trie_from_strings",
    "verify_wheeler_order",
    "wheeler_minimize",
]
