"""Exact calculus of tautological divisor classes on moduli of pointed stable curves."""

from .boundary import (
    IRR,
    BoundaryIndex,
    HalfIndex,
    PointClass,
    SurfaceType,
    canonicalize,
    enumerate_upsilon_bar,
    enumerate_upsilon_bar_ext,
    extended_class,
)
from .curves import TestCurve, generate_all
from .divisors import (
    LAMBDA,
    BasisDescriptor,
    Psi,
    TautClass,
    add,
    basis,
    expand_extended,
    reduce_to_basis,
    scale,
)
from .errors import *  # noqa: F401,F403
from .independence import (
    LAMBDA_AXIOM,
    Certificate,
    PairingMatrix,
    RelationReport,
    build_matrix,
    expected_picard_rank,
    independence_certificate,
    rank,
    rank_table,
    relation_check,
)
from .zariski import (
    FiberConfiguration,
    FormClassification,
    check_hypotheses,
    classify,
    cycle_configuration,
    quadratic_eval,
    sublemma_expansion_eval,
)

__version__ = "0.1.0"
