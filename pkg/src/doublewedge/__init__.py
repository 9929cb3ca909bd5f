"""N-dimensional cross product as an antisymmetric-matrix algebra."""

from .bridge import EPS, cross3, to_axial, to_bivector
from .core import (
    Bivector,
    allclose,
    apply,
    contraction,
    doublewedge,
    gram_volume,
    hypervolume,
    linear_map,
    perpendicular_component,
    perpendicular_space_dim,
    three_index_product,
    transform,
    vector,
)
from .errors import (
    DegenerateError,
    DimensionError,
    DoublewedgeError,
    FieldEvaluationError,
    NumericalError,
)
from .fields import BivectorField, VectorField, curl, faraday_residual, jacobian, lorentz_force
from .mechanics import (
    PointMassBody,
    RotationSpec,
    angular_momentum,
    inertia_matrix,
    power,
    rigid_angular_momentum,
    rigid_body,
    rigid_velocity,
    rotate,
    rotation_generator,
    rotation_matrix,
    torque,
)

__version__ = "0.1.0"

__all__ = [
    "EPS",
    "Bivector",
    "BivectorField",
    "DegenerateError",
    "DimensionError",
    "DoublewedgeError",
    "FieldEvaluationError",
    "NumericalError",
    "PointMassBody",
    "RotationSpec",
    "VectorField",
    "allclose",
    "angular_momentum",
    "apply",
    "contraction",
    "cross3",
    "curl",
    "doublewedge",
    "faraday_residual",
    "gram_volume",
    "hypervolume",
    "inertia_matrix",
    "jacobian",
    "linear_map",
    "lorentz_force",
    "perpendicular_component",
    "perpendicular_space_dim",
    "power",
    "rigid_angular_momentum",
    "rigid_body",
    "rigid_velocity",
    "rotate",
    "rotation_generator",
    "rotation_matrix",
    "three_index_product",
    "to_axial",
    "to_bivector",
    "torque",
    "transform",
    "vector",
]
