"""Exact tools for staircase algebras of Young diagrams.

Construction of the bound quiver of a partition, its Tits form, complete
representation-type classification with independent quadratic-form
verification, Auslander-Reiten knitting, and finiteness questions for
graded nilpotent pairs on bigraded vector spaces.
"""

from .partitions import (Partition, PartitionError, format_partition,
                         is_subdiagram, measures, parse_partition, partition,
                         partitions_of, transpose)
from .quiver import (StaircaseQuiver, build_quiver, injective_vector,
                     projective_vector, to_dot)
from .quadform import (FormVerdict, UnitForm, bilinear, corank0, eval_form,
                       form_of, gram, is_psd, is_weakly_nonnegative,
                       is_weakly_positive, minimal_nullroot, positive_roots,
                       radical_basis, tits_form)
from .classify import (ClassificationReport, OrbitType, RepType, classify,
                       orbit_type, tensor_type, verify_classification,
                       wildness_witness)
from .arquiver import (ARQuiver, count_indecomposables,
                       has_sincere_preprojective, knit, orbit_quiver)
from .reps import Representation, hom_dim, is_isomorphic
from .nilpairs import (BigradedSpace, GradedPair, finiteness_partition,
                       finiteness_space, oracle_count_small, shape_lambda,
                       to_representation, two_param_family, validate_pair)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
