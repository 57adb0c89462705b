"""Exact separation probabilities for products of random permutations.

The package computes, in exact rational arithmetic, the probability that
designated disjoint blocks of elements land in pairwise distinct cycles of
the product of a uniform permutation of fixed cycle type with a uniform full
cycle - together with the companion closed forms (permutations with a given
number of cycles, fixed-point-free involutions, fixed-point lifting, one-face
map counts, strong separation and connection coefficients), and brute-force
oracles that re-derive every count by exhaustive enumeration.
"""

from .errors import BudgetExceededError, InvariantError
from .formulas import (
    SepResult,
    add_fixed_points_count,
    add_fixed_points_probability,
    colored_factorization_count,
    colored_matching_count,
    gen_series_table,
    involution_pair_count,
    involution_series,
    marked_composition_count,
    one_face_map_series,
    separated_colored_count,
    separated_pair_count,
    separation_probability,
    separation_probability_involution,
    separation_probability_p_cycles,
    separation_probability_two_cycles,
    singleton_blocks_probability,
)
from .partitions import (
    binomial,
    centralizer_order,
    compositions,
    conjugacy_class_size,
    multinomial,
    partitions,
    stirling_first_unsigned,
)
from .perms import Permutation, compose, permutations_of_type
from .separation import disjoint_block_tuples, is_separated, unmarked_cycle_count
from .strong import (
    connection_coefficient,
    refinement_coefficient,
    strong_probability_table,
    strong_separation_probability,
)
from .symfunc import (
    SymFuncVector,
    expand_power_sum_in_monomials,
    power_sum_coefficient,
    transition_matrices,
)

__version__ = "0.1.0"
