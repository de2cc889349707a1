"""Exact enumerative invariants and degree bounds for schemes defined by quadrics."""

__version__ = "0.1.0"

from .exact_arith import binom, triangular_inverse, vandermonde_check
from .chow_ring import (TruncatedClassPolynomial, VarietyNumerics,
                        complete_intersection_numerics, quadric_numerics,
                        truncated_inverse, truncated_product)
from .double_points import (BVector, b_vector, coefficient_identity_check,
                            section_segre_numbers, veronese_double_points_direct,
                            veronese_double_points_via_b)
from .schubert import SchubertCycle, common_secant_count, pairing, secant_cycle
from .line_restriction import (LineCase, QuadraticForm, classify, restrict_to_line,
                               sample_lines)
from .bounds import (BoundReport, Regime, SchemeDescriptor, asymptotic_table,
                     castelnuovo_max_genus, classify_equality_cases, f_of_e,
                     main_bound_check, np_bound_check, refined_genus_bound_check,
                     regime_compare)
from .diophantine import Solution, search
