"""Exact cohomology of Sullivan-type models of principal and loop-group bundles."""

from .differential import ComplexSpec, ValidationReport, apply_d, check_differential
from .engine import (
    CohomologyResult,
    betti,
    cohomology,
    dimensions,
    enumerate_basis,
    matrix_of_d,
    poincare_table,
    representatives,
    ring_structure,
)
from .errors import (
    DegreeOutOfRange,
    InconsistencyError,
    ParseError,
    ResourceCapExceeded,
    SpecError,
    ValidationError,
)
from .graded import BaseAlgebraSpec, DegreeMarker, Element, GeneratorSpec, GradedAlgebra, add, degree_of, multiply
from .linalg import SparseMatrixQ, kernel_basis, rank, solve_in_span
from .models import (
    CharacteristicData,
    contractible_model,
    equivariant_loop_bundle_model,
    fixture,
    formal_loop_bundle_model,
    ghv_bundle_model,
    loop_bundle_model,
    loop_space_model,
    make_complex,
    su3_so3_example,
)
from .problem import parse_problem, serialize

__version__ = "0.1.0"
