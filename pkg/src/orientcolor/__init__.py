"""Decide k-colorability of multigraphs from counts of edge orientations."""
from .census import (ClassTable, build_class_table, census_coefficients, flip_parity,
                     out_degree_vector, residue_class)
from .criteria import (LProfile, PrimePowerChoice, Verdict, count_colorings, cross_check,
                       decide_colorable, find_coloring, necessary_profile, odd_k_parity,
                       select_prime_power, sufficient_witness)
from .errors import CapExceeded, CrossCheckFailure, GraphFormatError
from .field import (FieldDescriptor, FieldElement, color_set, degree_bounded_zero_test, ff_add,
                    ff_inv, ff_mul, ff_pow, is_identically_zero, make_field)
from .graph import Multigraph, Orientation, parse_dimacs, parse_edge_list, to_canonical_text
from .poly import (Polynomial, ReducedPolynomial, characteristic_polynomial, coefficients_mod,
                   evaluate, factor_list, raise_exponents, reduce_exponent, reduce_polynomial,
                   reduced_graph_polynomial)

__version__ = "0.1.0"
