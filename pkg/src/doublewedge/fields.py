"""Pointwise N-D curl, Faraday residual and Lorentz force.

Fields are callables ``f(x, t)``; there is no grid.  Derivatives use second
order central differences.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .core import Bivector, _check_dims, _readonly, apply, vector
from .errors import DimensionError, FieldEvaluationError

_REL_STEP = 1e-5


def default_step(x) -> float:
    """``1e-5 * max(1, ‖x‖_∞)``."""
    return _REL_STEP * max(1.0, float(np.max(np.abs(x))))


@dataclass(frozen=True)
class VectorField:
    """Vector-valued field ``func(x, t) -> (N,)``; static fields ignore ``t``."""

    func: Callable
    dim: int

    def __call__(self, x, t: float = 0.0) -> np.ndarray:
        out = np.asarray(self.func(x, t), dtype=float)
        if out.shape != (self.dim,):
            raise DimensionError(f"field returned shape {out.shape}, expected ({self.dim},)")
        if not np.all(np.isfinite(out)):
            raise FieldEvaluationError(
                f"field is not finite at x={np.asarray(x).tolist()}, t={t!r}"
            )
        return out


@dataclass(frozen=True)
class BivectorField:
    """Bivector-valued field ``func(x, t)``; the result may be a matrix or a Bivector."""

    func: Callable
    dim: int

    def __call__(self, x, t: float = 0.0) -> Bivector:
        out = self.func(x, t)
        raw = out.entries if isinstance(out, Bivector) else np.asarray(out, dtype=float)
        if raw.shape != (self.dim, self.dim):
            raise DimensionError(
                f"field returned shape {raw.shape}, expected ({self.dim}, {self.dim})"
            )
        if not np.all(np.isfinite(raw)):
            raise FieldEvaluationError(
                f"field is not finite at x={np.asarray(x).tolist()}, t={t!r}"
            )
        return out if isinstance(out, Bivector) else Bivector(raw)


def jacobian(field: VectorField, x, t: float = 0.0, h: float | None = None) -> np.ndarray:
    """Central-difference Jacobian ``J[i, j] ≈ ∂v_i/∂x_j``."""
    x = vector(x)
    _check_dims(("field", field.dim), ("x", x.size))
    if h is None:
        h = default_step(x)
    if not h > 0:
        raise ValueError(f"step h must be positive, got {h}")
    n = x.size
    J = np.empty((n, n))
    for j in range(n):
        e = np.zeros(n)
        e[j] = h
        J[:, j] = (field(x + e, t) - field(x - e, t)) / (2.0 * h)
    return _readonly(J)


def curl(field: VectorField, x, t: float = 0.0, h: float | None = None) -> Bivector:
    """N-D curl ``[∇∧∧v]_ij = ∂v_i/∂x_j - ∂v_j/∂x_i``."""
    J = jacobian(field, x, t, h)
    return Bivector.from_upper(J - J.T)


def faraday_residual(
    e: VectorField,
    b: BivectorField,
    x,
    t: float = 0.0,
    h: float | None = None,
    dt: float | None = None,
) -> Bivector:
    """``∇∧∧E + ∂B/∂t``, which vanishes for fields obeying Faraday's law."""
    x = vector(x)
    _check_dims(("E", e.dim), ("B", b.dim), ("x", x.size))
    if dt is None:
        dt = _REL_STEP * max(1.0, abs(float(t)))
    if not dt > 0:
        raise ValueError(f"step dt must be positive, got {dt}")
    dbdt = (b(x, t + dt).entries - b(x, t - dt).entries) / (2.0 * dt)
    return curl(e, x, t, h) + Bivector.from_upper(dbdt)


def lorentz_force(charge: float, b: Bivector, v) -> np.ndarray:
    """Magnetic force ``-Q B v`` on a charge moving with velocity ``v``."""
    return _readonly(-float(charge) * apply(b, v))
