"""Exact-arithmetic interval graphs of non-integer base expansions.

The library classifies bases given by the greedy expansion of 1, builds the
labeled interval graphs whose infinite label paths spell the unique (or
unique doubly infinite) expansions, analyzes their strong-connectedness and
successor-chain structure, computes entropy and dimension from the Perron
radius, and counts expansions of individual points exactly.
"""

from .digits import (EpSeq, BaseClass, lex_cmp, reflect, shift, parse_seq, format_seq,
                     is_greedy_beta, is_quasigreedy_alpha, classify_alpha,
                     is_unique_expansion_seq)
from .algebraic import AlgebraicReal, base_polynomial, isolate_root, value_of_sequence
from .base import (BaseContext, new_base_context, golden_ratio_base, v_successor,
                   r_chain, special_points, order_points)
from .graph import (FULL, TILDE, TILDE1, build_graph, scc, is_strongly_connected,
                    connectivity_report, check_isomorphic, tower_decompose,
                    count_label_paths, path_words)
from .spectral import spectral_radius, dimension_of, spectral_report, component_dimensions
from .expansions import (greedy_expand, quasi_greedy_expand, count_expansions,
                         build_witness_xm, f_family_filter, default_tail, alpha_structure)
from .oracle import U_PREFIX, V_PREFIX, enumerate_admissible_words, brute_count_expansions

__version__ = "0.1.0"
