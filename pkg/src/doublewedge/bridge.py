"""Classic 3-D operators and the Levi-Civita maps to and from bivectors."""

from __future__ import annotations

import numpy as np

from .core import Bivector, _readonly, vector
from .errors import DimensionError


def _levi_civita() -> np.ndarray:
    eps = np.zeros((3, 3, 3), dtype=np.int8)
    for i, j, k in ((0, 1, 2), (1, 2, 0), (2, 0, 1)):
        eps[i, j, k] = 1
        eps[i, k, j] = -1
    return _readonly(eps)


#: Levi-Civita symbol, 0-based: ``EPS[0, 1, 2] == +1``.
EPS = _levi_civita()


def _require3(name: str, n: int) -> None:
    if n != 3:
        raise DimensionError(f"{name} must have dim 3, got dim {n}")


def cross3(a, b) -> np.ndarray:
    """Component-wise 3-D cross product ``a × b``."""
    a = vector(a)
    b = vector(b)
    _require3("a", a.size)
    _require3("b", b.size)
    return vector(
        [
            a[1] * b[2] - a[2] * b[1],
            a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0],
        ]
    )


def to_bivector(w) -> Bivector:
    """Axial vector to bivector: ``Ω_ij = -Σ_k ε_ijk ω_k``, i.e. ``[ω×]``."""
    w = vector(w)
    _require3("axial vector", w.size)
    out = np.zeros((3, 3))
    for i in range(3):
        for j in range(3):
            for k in range(3):
                out[i, j] -= EPS[i, j, k] * w[k]
    return Bivector.from_upper(out)


def to_axial(m: Bivector) -> np.ndarray:
    """Bivector to axial vector: ``ω_i = -½ Σ_jk ε_ijk Ω_jk``."""
    _require3("bivector", m.dim)
    Om = m.entries
    out = np.zeros(3)
    for i in range(3):
        s = 0.0
        for j in range(3):
            for k in range(3):
                s += EPS[i, j, k] * Om[j, k]
        out[i] = -0.5 * s
    return vector(out)
