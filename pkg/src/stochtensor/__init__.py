"""Exact computations with n x n x n stochastic tensors (semi-magic cubes).

Validation, line vectorization, positive diagonals, Latin squares,
permutation-tensor decompositions, extreme points, vertex enumeration, and
vertex-count bounds, all over exact rationals.
"""

from .bounds import BoundsReport, bounds_report, lower_bound, upper_bound
from .diagonal import (DiagonalWitness, enumerate_positive_diagonals, find_positive_diagonal,
                       in_L, is_positive_diagonal)
from .errors import (DimensionError, IntegrityError, NotPermutationTensorError,
                     NotStochasticError, ResourceGuardError, StochTensorError, TensorSyntaxError)
from .fixtures import tensor_E, tensor_F
from .latin import (LatinSquare, cyclic_square, enumerate_latin_squares, is_permutation_tensor,
                    latin_to_tensor, tensor_to_latin)
from .polytope import (DecompositionCertificate, VertexSet, dimension, enumerate_vertices,
                       is_extreme, membership_delta, perturb_toward)
from .stochastic import (ConstraintSystem, check_vec_characterization, constraint_system,
                         is_stochastic, matrix_vec_check, satisfies)
from .tensor_core import (FlatSlices, LineVec, Tensor3, flatten, inner, line, new_tensor,
                          parse_tensor, serialize_tensor, slice, uniform, unflatten, vec_lines)

__version__ = "0.1.0"
