"""Depth-graded double shuffle Lie algebra toolkit (exact rational arithmetic)."""

from .exact_algebra import Poly, Rational, RMatrix, divexact, nullspace, rank
from .ihara import (DepthPoly, UNIT, bracket, bracket_lifted, compose_lifted,
                    depth1_action, depth1_generator, dihedral,
                    dihedral_average_bracket, in_dihedral_space, poly_compose)
from .double_shuffle import (SolutionSpace, assemble_constraints, dimension,
                             dims_table, iterated_bracket_span, membership_test,
                             partial_sum_transform, solve, solve_words)
from .period_poly import (PeriodPolynomial, basis_S, basis_W, cusp_dimension,
                          integral_generators)
from .exceptional import (ExceptionalElement, build_exceptional,
                          exceptional_elements, express_in_basis, interior,
                          is_sparse, is_uneven, project)
from .series import BiSeries, bk_series, eos, euler_check, euler_series, free_lie_dims, pbw
from .odd_mzv import (OddMatrix, c_coefficient, compositions, odd_matrix,
                      odd_rank, odd_rank_table, predicted_odd_table)

__version__ = "0.1.0"
