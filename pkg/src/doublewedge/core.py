"""Dense N-D doublewedge algebra.

Vectors are plain read-only float arrays of shape ``(N,)``; linear maps are
read-only ``(N, N)`` arrays; bivectors are :class:`Bivector` instances whose
storage is antisymmetric by construction.

Operand order: ``doublewedge(r, f)`` is ``f ⊗ r - r ⊗ f``, i.e. entry
``[i, j] = f[i] * r[j] - r[i] * f[j]``.  The first operand plays the role of
the lever arm.  With this order ``doublewedge(r, f) @ c == f (r·c) - r (f·c)``
and, in three dimensions, the Hodge dual of the result is ``r × f``.

Index arguments are 0-based throughout.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from .errors import DegenerateError, DimensionError

#: Relative comparison tolerance used by :func:`allclose`.
RTOL = 1e-12
#: Absolute floor used by :func:`allclose`.
ATOL = 1e-15
#: Relative threshold for numerical rank decisions.
RANK_TOL = 1e-9


def _readonly(a: np.ndarray) -> np.ndarray:
    a.flags.writeable = False
    return a


def vector(components: Iterable[float]) -> np.ndarray:
    """Validate and freeze a vector.

    Raises
    ------
    DimensionError
        If the input is not one-dimensional or is empty.
    ValueError
        If any component is NaN or infinite.
    """
    v = np.array(components, dtype=float)
    if v.ndim != 1 or v.size == 0:
        raise DimensionError(f"a vector needs shape (N,) with N >= 1, got {v.shape}")
    if not np.all(np.isfinite(v)):
        raise ValueError(f"vector has non-finite components: {v.tolist()}")
    return _readonly(v)


def linear_map(entries) -> np.ndarray:
    """Validate and freeze a square matrix."""
    a = np.array(entries, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] == 0:
        raise DimensionError(f"a linear map needs shape (N, N), got {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValueError("linear map has non-finite entries")
    return _readonly(a)


def _check_dims(*pairs: tuple[str, int]) -> int:
    dims = {d for _, d in pairs}
    if len(dims) != 1:
        desc = ", ".join(f"{name} has dim {d}" for name, d in pairs)
        raise DimensionError(f"dimension mismatch: {desc}")
    return dims.pop()


class Bivector:
    """Antisymmetric ``N x N`` matrix.

    Only the strict upper triangle is taken from the input; the diagonal is
    zeroed and the lower triangle is the exact negation of the upper one.
    ``Bivector(m)`` checks that ``m`` is antisymmetric to :data:`RTOL`;
    :meth:`from_upper` skips the check and simply reads the upper triangle.
    """

    __slots__ = ("_entries",)
    # numpy scalars must defer to __rmul__ instead of broadcasting via __array__
    __array_ufunc__ = None

    def __init__(self, entries, *, check: bool = True):
        a = np.array(entries, dtype=float)
        if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] == 0:
            raise DimensionError(f"a bivector needs shape (N, N), got {a.shape}")
        if not np.all(np.isfinite(a)):
            raise ValueError("bivector has non-finite entries")
        if check:
            scale = max(float(np.max(np.abs(a))), ATOL)
            if np.max(np.abs(a + a.T)) > RTOL * scale:
                raise ValueError("matrix is not antisymmetric")
        upper = np.triu(a, 1)
        self._entries = _readonly(upper - upper.T)

    @classmethod
    def from_upper(cls, entries) -> "Bivector":
        return cls(entries, check=False)

    @classmethod
    def zeros(cls, dim: int) -> "Bivector":
        return cls.from_upper(np.zeros((dim, dim)))

    @property
    def entries(self) -> np.ndarray:
        return self._entries

    @property
    def dim(self) -> int:
        return self._entries.shape[0]

    def __array__(self, dtype=None, copy=None):
        if dtype is None:
            return self._entries
        return self._entries.astype(dtype)

    def __getitem__(self, idx):
        return self._entries[idx]

    def __repr__(self) -> str:
        return f"Bivector({self._entries.tolist()!r})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, Bivector):
            return NotImplemented
        return self._entries.shape == other._entries.shape and bool(
            np.array_equal(self._entries, other._entries)
        )

    __hash__ = None

    def __neg__(self) -> "Bivector":
        return Bivector.from_upper(-self._entries)

    def __add__(self, other: "Bivector") -> "Bivector":
        if not isinstance(other, Bivector):
            return NotImplemented
        _check_dims(("left", self.dim), ("right", other.dim))
        return Bivector.from_upper(self._entries + other._entries)

    def __sub__(self, other: "Bivector") -> "Bivector":
        if not isinstance(other, Bivector):
            return NotImplemented
        _check_dims(("left", self.dim), ("right", other.dim))
        return Bivector.from_upper(self._entries - other._entries)

    def __mul__(self, alpha: float) -> "Bivector":
        if isinstance(alpha, Bivector):
            return NotImplemented
        return Bivector.from_upper(float(alpha) * self._entries)

    __rmul__ = __mul__

    def __matmul__(self, c):
        return apply(self, c)

    def norm(self) -> float:
        """Frobenius norm."""
        return float(np.linalg.norm(self._entries))

    def rank(self, tol: float = RANK_TOL) -> int:
        """Numerical rank, with singular values below ``tol * max|entry|`` dropped."""
        scale = float(np.max(np.abs(self._entries)))
        if scale == 0.0:
            return 0
        s = np.linalg.svd(self._entries, compute_uv=False)
        return int(np.sum(s > tol * scale))


def doublewedge(r, f) -> Bivector:
    """N-D cross product ``r ∧∧ f = f ⊗ r - r ⊗ f``.

    Parameters
    ----------
    r, f : array_like, shape (N,)
        Lever-arm-like and force-like operands.

    Returns
    -------
    Bivector
        Entries ``f[i] * r[j] - r[i] * f[j]``.
    """
    r = vector(r)
    f = vector(f)
    _check_dims(("r", r.size), ("f", f.size))
    return Bivector.from_upper(np.outer(f, r) - np.outer(r, f))


def apply(m: Bivector, c) -> np.ndarray:
    """Matrix-vector product ``m · c``."""
    c = vector(c)
    _check_dims(("bivector", m.dim), ("vector", c.size))
    return _readonly(m.entries @ c)


def contraction(a, b) -> float:
    """Raw double sum ``Σ_ij a_ij b_ij`` (no ½ factor)."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    _check_dims(("left", a.shape[0]), ("right", b.shape[0]))
    if a.shape != b.shape:
        raise DimensionError(f"dimension mismatch: {a.shape} vs {b.shape}")
    return float(np.sum(a * b))


def three_index_product(a: Bivector, c, i: int, j: int, k: int) -> float:
    """Cyclic sum ``A_ij c_k + A_jk c_i + A_ki c_j``.

    In 3-D, ``three_index_product(doublewedge(a, b), c, 2, 1, 0)`` is the
    signed volume ``(a × b) · c``.
    """
    c = vector(c)
    n = _check_dims(("bivector", a.dim), ("vector", c.size))
    idx = (i, j, k)
    for q in idx:
        if isinstance(q, bool) or not isinstance(q, (int, np.integer)):
            raise TypeError(f"indices must be integers, got {q!r}")
        if not 0 <= q < n:
            raise IndexError(f"index {q} out of range for dim {n}")
    if len(set(idx)) != 3:
        raise ValueError(f"indices must be distinct, got {idx}")
    A = a.entries
    return float(A[i, j] * c[k] + A[j, k] * c[i] + A[k, i] * c[j])


def transform(l, m: Bivector) -> Bivector:
    """Push a bivector through a linear map: ``L m Lᵀ``.

    ``transform(L, doublewedge(a, b)) == doublewedge(L a, L b)``.
    """
    L = linear_map(l)
    _check_dims(("linear map", L.shape[0]), ("bivector", m.dim))
    out = L @ m.entries @ L.T
    return Bivector.from_upper(0.5 * (out - out.T))


def hypervolume(vs: Sequence) -> float:
    """Signed volume ``det[v_1 ... v_N]`` of N vectors in N dimensions."""
    cols = [vector(v) for v in vs]
    if not cols:
        raise DimensionError("hypervolume needs at least one vector")
    n = _check_dims(*((f"v{q}", v.size) for q, v in enumerate(cols)))
    if len(cols) != n:
        raise DimensionError(f"hypervolume needs exactly {n} vectors of dim {n}, got {len(cols)}")
    # LAPACK getrf: LU with partial pivoting
    return float(np.linalg.det(np.column_stack(cols)))


def gram_volume(vs: Sequence) -> float:
    """Unsigned k-volume ``sqrt(det(Gᵀ G))`` of k vectors in N >= k dimensions."""
    cols = [vector(v) for v in vs]
    if not cols:
        raise DimensionError("gram_volume needs at least one vector")
    n = _check_dims(*((f"v{q}", v.size) for q, v in enumerate(cols)))
    if len(cols) > n:
        raise DimensionError(f"gram_volume needs k <= {n} vectors, got {len(cols)}")
    G = np.column_stack(cols)
    return float(np.sqrt(max(np.linalg.det(G.T @ G), 0.0)))


def perpendicular_component(f, r) -> np.ndarray:
    """Component of ``f`` orthogonal to ``r``, computed as ``(r ∧∧ f)·r / r²``."""
    f = vector(f)
    r = vector(r)
    _check_dims(("f", f.size), ("r", r.size))
    r2 = float(r @ r)
    scale = max(float(np.max(np.abs(f))), float(np.max(np.abs(r))))
    if r2 == 0.0 or np.sqrt(r2) <= 1e-12 * scale:
        raise DegenerateError("degenerate axis: r is zero or negligible")
    return _readonly(apply(doublewedge(r, f), r) / r2)


def perpendicular_space_dim(*vs, tol: float = RANK_TOL) -> int:
    """Dimension of the space of vectors ``p`` with ``p · v = 0`` for every input.

    For two independent vectors this is ``N - 2``: unique up to scale in 3-D,
    a one-parameter family in 4-D.
    """
    rows = [vector(v) for v in vs]
    n = _check_dims(*((f"v{q}", v.size) for q, v in enumerate(rows)))
    C = np.vstack(rows)
    scale = float(np.max(np.abs(C)))
    if scale == 0.0:
        return n
    s = np.linalg.svd(C, compute_uv=False)
    return n - int(np.sum(s > tol * scale))


def allclose(a, b, rtol: float = RTOL, atol: float = ATOL) -> bool:
    """Compare against the largest magnitude involved, with an absolute floor."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if a.shape != b.shape:
        return False
    scale = max(float(np.max(np.abs(a), initial=0.0)), float(np.max(np.abs(b), initial=0.0)))
    return bool(np.max(np.abs(a - b), initial=0.0) <= max(rtol * scale, atol))
