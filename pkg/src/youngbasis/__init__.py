"""Exact transition matrices between Young's natural, seminormal, and
orthogonal bases for symmetric groups, Iwahori-Hecke algebras of types
A and B, Ariki-Koike algebras, affine Hecke modules on placed shapes,
and wreath products of a cyclic group with a symmetric group.
"""

from .algebras import (AlgebraSpec, FAMILIES, natural_generator,
                       seminormal_generator, verify_relations, x_generator,
                       zeroth_generator)
from .bruhat import (BruhatGraph, Path, Subpath, bruhat_leq, build_graph,
                     shortest_path, shortest_paths_from, subpaths_terminating,
                     to_dot)
from .errors import (DegenerateWeightError, FieldMismatchError,
                     InvariantError, NonSemisimpleError, PoleError,
                     PreconditionError, ShapeParseError, YoungBasisError)
from .fields import (Cyclo, CyclotomicField, Fraction, LaurentPoly, QFIELD,
                     QRat, QRationalField, RATIONALS, RationalField,
                     check_semisimple, evaluate_q, field_arith, field_by_name,
                     field_of, quantum_integer)
from .linalg import (Matrix, direct_sum, matmul, matrix_from_json,
                     matrix_to_csv, matrix_to_json, tensor_product,
                     triangular_inverse)
from .shapes import (Shape, Tableau, all_partitions, all_skew_shapes,
                     alphabetizer, apply_permutation, column_reading_tableau,
                     parse_shape, reading_tableaux, row_reading_tableau,
                     shape_from_parts, standard_tableaux)
from .transition import (OpCounter, TransitionMatrix, bench_transition,
                         check_structure, diagonal_closed_form,
                         grn_transition, orthogonal_diag_squared,
                         transition_column_word, transition_pathsum,
                         transition_recursive, transition_word)
from .weights import (content_of, plain_axial_weight, q_axial_weight,
                      weighted_content)

__version__ = "0.1.0"
