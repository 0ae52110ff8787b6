"""Point schemes of path algebras with relations over finite discrete bases."""

from .bimodule import (
    AlgebraSpec,
    BaseSet,
    Bimodule,
    GradedIdeal,
    TensorElem,
    concat,
    ideal_component,
    quotient_dims,
    tensor_component_basis,
)
from .fields import Field, PrimeField, Rationals, field_from_label, parse_scalar
from .parsing import AlgebraParseError, format_algebra, parse_algebra
from .points import (
    CapExceeded,
    Functional,
    PointScheme,
    PointTuple,
    enumerate_points,
    is_point,
    multilin_eval,
    shift_map,
    stabilization_scan,
    truncate,
    truncation_report,
)
from .realization import ModuleRealization, RealizeFailure, isomorphic, realize, verify_extension
from .segre import (
    TensorFunctional,
    check_associativity,
    check_functoriality,
    kernel_decomposition_check,
    pullback_membership,
    segre,
    segre_preimage,
)
from .verify import run_invariant_suite

__version__ = "0.1.0"

__all__ = [
    "AlgebraParseError",
    "AlgebraSpec",
    "BaseSet",
    "Bimodule",
    "CapExceeded",
    "Field",
    "Functional",
    "GradedIdeal",
    "ModuleRealization",
    "PointScheme",
    "PointTuple",
    "PrimeField",
    "Rationals",
    "RealizeFailure",
    "TensorElem",
    "TensorFunctional",
    "check_associativity",
    "check_functoriality",
    "concat",
    "enumerate_points",
    "field_from_label",
    "format_algebra",
    "ideal_component",
    "is_point",
    "isomorphic",
    "kernel_decomposition_check",
    "multilin_eval",
    "parse_algebra",
    "parse_scalar",
    "pullback_membership",
    "quotient_dims",
    "realize",
    "run_invariant_suite",
    "segre",
    "segre_preimage",
    "shift_map",
    "stabilization_scan",
    "tensor_component_basis",
    "truncate",
    "truncation_report",
    "verify_extension",
]
