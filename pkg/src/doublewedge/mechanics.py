"""Rigid-body mechanics in N dimensions on top of the doublewedge product.

Continuous bodies are represented by finite sets of point masses, so every
volume integral becomes a mass-weighted sum over particles.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from .core import (
    Bivector,
    _check_dims,
    _readonly,
    apply,
    contraction,
    doublewedge,
    linear_map,
    perpendicular_component,
    vector,
)
from .errors import DegenerateError, DimensionError, NumericalError

#: Maximum allowed ``max|G³ + G|`` for a simple rotation generator.
GENERATOR_TOL = 1e-9


@dataclass(frozen=True)
class PointMassBody:
    """Immutable set of point masses sharing one dimension.

    Attributes
    ----------
    masses : ndarray, shape (P,)
        Strictly positive masses [kg].
    positions : ndarray, shape (P, N)
        Particle positions [m].
    velocities : ndarray, shape (P, N)
        Particle velocities [m/s].
    """

    masses: np.ndarray
    positions: np.ndarray
    velocities: np.ndarray

    def __post_init__(self):
        m = np.array(self.masses, dtype=float).reshape(-1)
        x = np.array(self.positions, dtype=float)
        v = np.array(self.velocities, dtype=float)
        if m.size == 0:
            raise ValueError("a body needs at least one particle")
        if x.ndim != 2 or x.shape[0] != m.size or x.shape[1] == 0:
            raise DimensionError(f"positions must have shape ({m.size}, N), got {x.shape}")
        if v.shape != x.shape:
            raise DimensionError(f"velocities shape {v.shape} does not match positions {x.shape}")
        if not (np.all(np.isfinite(m)) and np.all(np.isfinite(x)) and np.all(np.isfinite(v))):
            raise ValueError("body has non-finite data")
        if np.any(m <= 0):
            raise ValueError("all masses must be positive")
        object.__setattr__(self, "masses", _readonly(m))
        object.__setattr__(self, "positions", _readonly(x))
        object.__setattr__(self, "velocities", _readonly(v))

    @classmethod
    def from_particles(cls, particles: Iterable[tuple]) -> "PointMassBody":
        """Build from ``(mass, position)`` or ``(mass, position, velocity)`` tuples."""
        ms, xs, vs = [], [], []
        dims = []
        for q, p in enumerate(particles):
            m, x = p[0], vector(p[1])
            v = vector(p[2]) if len(p) > 2 and p[2] is not None else np.zeros(x.size)
            dims.append((f"position {q}", x.size))
            dims.append((f"velocity {q}", v.size))
            ms.append(m)
            xs.append(x)
            vs.append(v)
        if not ms:
            raise ValueError("a body needs at least one particle")
        _check_dims(*dims)
        return cls(np.array(ms), np.array(xs), np.array(vs))

    @property
    def dim(self) -> int:
        return self.positions.shape[1]

    @property
    def total_mass(self) -> float:
        return float(np.sum(self.masses))

    @property
    def center_of_mass(self) -> np.ndarray:
        return _readonly(self.masses @ self.positions / self.total_mass)

    def with_velocities(self, velocities) -> "PointMassBody":
        return PointMassBody(self.masses, self.positions, velocities)


@dataclass(frozen=True)
class RotationSpec:
    """Rotation in the plane spanned by ``from_dir`` and ``to_dir``, by ``angle`` [rad]."""

    from_dir: np.ndarray
    to_dir: np.ndarray
    angle: float = field(default=0.0)

    def __post_init__(self):
        a = vector(self.from_dir)
        b = vector(self.to_dir)
        _check_dims(("from_dir", a.size), ("to_dir", b.size))
        na, nb = np.linalg.norm(a), np.linalg.norm(b)
        if na == 0.0 or nb == 0.0:
            raise DegenerateError("degenerate rotation plane: zero direction")
        # |sin| from the Gram determinant of the unit directions
        ua, ub = a / na, b / nb
        c = float(ua @ ub)
        sin = math.sqrt(max(1.0 - c * c, 0.0))
        if sin <= 1e-9:
            raise DegenerateError("degenerate rotation plane: parallel directions")
        object.__setattr__(self, "from_dir", a)
        object.__setattr__(self, "to_dir", b)
        object.__setattr__(self, "angle", float(self.angle))


def torque(r, f) -> Bivector:
    """Moment of force ``f`` applied at lever arm ``r`` [N·m]."""
    return doublewedge(r, f)


def inertia_matrix(body: PointMassBody, pole) -> np.ndarray:
    """Second-moment matrix ``Σ m (x - pole)(x - pole)ᵀ`` about ``pole``.

    This is the N-D inertia matrix; the classical 3-D inertia tensor is
    ``trace(I) * eye(3) - I``.
    """
    pole = vector(pole)
    _check_dims(("body", body.dim), ("pole", pole.size))
    d = body.positions - pole
    I = (body.masses[:, None] * d).T @ d
    I = 0.5 * (I + I.T)
    return linear_map(I)


def angular_momentum(body: PointMassBody, pole) -> Bivector:
    """Particle sum ``Σ (x - pole) ∧∧ (m v)``."""
    pole = vector(pole)
    _check_dims(("body", body.dim), ("pole", pole.size))
    d = body.positions - pole
    p = body.masses[:, None] * body.velocities
    # Σ_p (p_p ⊗ d_p - d_p ⊗ p_p)
    return Bivector.from_upper(p.T @ d - d.T @ p)


def rigid_angular_momentum(total_mass, x_g, pole, v_pole, inertia, omega: Bivector) -> Bivector:
    """Angular momentum of a rigid body from its bulk quantities.

    ``m (x_g - pole) ∧∧ v_pole + I Ω - (I Ω)ᵀ``, with ``I`` the N-D inertia
    matrix about ``pole`` and ``v_pole`` the rigid velocity at ``pole``.
    """
    x_g, pole, v_pole = vector(x_g), vector(pole), vector(v_pole)
    I = linear_map(inertia)
    _check_dims(
        ("x_g", x_g.size),
        ("pole", pole.size),
        ("v_pole", v_pole.size),
        ("inertia", I.shape[0]),
        ("omega", omega.dim),
    )
    IO = I @ omega.entries
    return float(total_mass) * doublewedge(x_g - pole, v_pole) + Bivector.from_upper(IO - IO.T)


def rigid_velocity(omega: Bivector, x, x_ref, v_ref) -> np.ndarray:
    """Velocity at ``x`` of a rigid motion: ``v_ref + Ω (x - x_ref)``."""
    x, x_ref, v_ref = vector(x), vector(x_ref), vector(v_ref)
    _check_dims(("omega", omega.dim), ("x", x.size), ("x_ref", x_ref.size), ("v_ref", v_ref.size))
    return _readonly(v_ref + apply(omega, x - x_ref))


def rigid_body(masses, positions, omega: Bivector, x_ref, v_ref) -> PointMassBody:
    """Body whose particle velocities follow the rigid motion ``(omega, x_ref, v_ref)``."""
    x = np.asarray(positions, dtype=float)
    v = [rigid_velocity(omega, xp, x_ref, v_ref) for xp in x]
    return PointMassBody(masses, x, np.array(v))


def power(m: Bivector, omega: Bivector) -> float:
    """Power ``½ M : Ω`` delivered by torque ``m`` at angular velocity ``omega``."""
    return 0.5 * contraction(m, omega)


def rotation_generator(spec: RotationSpec) -> Bivector:
    """Unit generator of the rotation taking ``from_dir`` towards ``to_dir``.

    Returns ``G = â ∧∧ b̂⊥`` with ``â`` the unit ``from_dir`` and ``b̂⊥`` the
    unit component of ``to_dir`` orthogonal to it.  ``G â = b̂⊥``, so
    ``exp(θ G)`` turns ``from_dir`` towards ``to_dir`` for ``θ > 0``.
    """
    a = spec.from_dir / np.linalg.norm(spec.from_dir)
    b = perpendicular_component(spec.to_dir, a)
    nb = np.linalg.norm(b)
    if nb == 0.0:
        raise DegenerateError("degenerate rotation plane")
    return doublewedge(a, b / nb)


def rotation_matrix(g: Bivector, angle: float) -> np.ndarray:
    """``exp(θ G) = I + sin θ G + (1 - cos θ) G²`` for a simple generator ``G``."""
    G = g.entries
    G2 = G @ G
    if np.max(np.abs(G2 @ G + G)) > GENERATOR_TOL:
        raise NumericalError("not a simple rotation generator (G³ != -G)")
    R = np.eye(g.dim) + math.sin(angle) * G + (1.0 - math.cos(angle)) * G2
    return _readonly(R)


def rotate(g: Bivector, angle: float, x) -> np.ndarray:
    """Rotate ``x`` by ``angle`` in the plane of the simple generator ``g``."""
    x = vector(x)
    _check_dims(("generator", g.dim), ("x", x.size))
    return _readonly(rotation_matrix(g, angle) @ x)
