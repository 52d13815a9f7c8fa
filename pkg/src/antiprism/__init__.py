"""Antiprism triangulations of simplicial complexes.

The package builds antiprism (and barycentric) triangulations, computes their
face numbers, h-polynomials and local h-polynomials, and certifies
real-rootedness and interlacing of the resulting polynomial families with
exact Sturm sequences.
"""

__version__ = "0.1.0"

from .complex import SimplicialComplex, cone, from_facets, join, union
from .errors import (AntiprismError, CapacityError, DisjointnessError, IntegrityError,
                     MalformedInputError, NotAFaceError)
from .labels import Antipode, FaceLabel, PointedFace, format_label, parse_label
from .poly import IntPolynomial
from .polynomials import (bar_ell, bar_p, ell_A, h_A, h_A_boundary, h_transform,
                          f_transform, local_h, q_A, q_nr, symmetric_decomposition,
                          theta_A, transform_table)
from .realroot import (gamma_vector, interlaces, is_interlacing_sequence, is_M_sequence,
                       is_real_rooted, root_isolation, unimodal)
from .subdivision import (CarrierMap, antiprism_by_crossings, antiprism_from_partitions,
                          antiprism_over, antiprism_sphere, antiprism_triangulation,
                          barycentric, crossing_operation, restriction, stellar_subdivision)
