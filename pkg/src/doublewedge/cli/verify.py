"""Seeded identity suite behind ``doublewedge verify``.

Each check draws random operands uniformly from ``[-1, 1)`` and returns the
absolute error together with a natural scale (product of operand norms), so
the reported error is relative and unaffected by cancellation in the result.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from ..bridge import cross3, to_axial, to_bivector
from ..core import (
    apply,
    contraction,
    doublewedge,
    perpendicular_space_dim,
    three_index_product,
    transform,
)
from .rng import SplitMix64

DEFAULT_SEED = 0
DEFAULT_DIMS = (2, 3, 4, 7)
DEFAULT_SAMPLES = 200
IDENTITY_TOL = 1e-10
PROPERTY_TOL = 1e-12


def _n(v) -> float:
    return float(np.linalg.norm(v))


def _err(a, b) -> float:
    return float(np.max(np.abs(np.asarray(a, dtype=float) - np.asarray(b, dtype=float))))


def _cofactor3(L: np.ndarray) -> np.ndarray:
    # det(L) L^-T without inverting: rows of the cofactor matrix from column cross products
    c0, c1, c2 = L[:, 0], L[:, 1], L[:, 2]
    return np.column_stack([cross3(c1, c2), cross3(c2, c0), cross3(c0, c1)])


# each check: (rng, dim) -> (abs_error, scale)


def _component_formula(rng, n):
    r, f = rng.uniform(n), rng.uniform(n)
    ref = np.empty((n, n))
    for i in range(n):
        for j in range(n):
            ref[i, j] = f[i] * r[j] - r[i] * f[j]
    return _err(doublewedge(r, f).entries, ref), _n(r) * _n(f)


def _action(rng, n):
    r, f, c = rng.uniform(n), rng.uniform(n), rng.uniform(n)
    return _err(apply(doublewedge(r, f), c), f * (r @ c) - r * (f @ c)), _n(r) * _n(f) * _n(c)


def _covariance(rng, n):
    L, a, b = rng.matrix(n), rng.uniform(n), rng.uniform(n)
    lhs = doublewedge(L @ a, L @ b).entries
    rhs = transform(L, doublewedge(a, b)).entries
    return _err(lhs, rhs), np.linalg.norm(L, 2) ** 2 * _n(a) * _n(b)


def _lagrange(rng, n):
    a, b, c, d = (rng.uniform(n) for _ in range(4))
    lhs = 0.5 * contraction(doublewedge(a, b), doublewedge(c, d))
    rhs = (a @ c) * (b @ d) - (a @ d) * (b @ c)
    return abs(lhs - rhs), _n(a) * _n(b) * _n(c) * _n(d)


def _anticommutativity(rng, n):
    a, b = rng.uniform(n), rng.uniform(n)
    return _err(doublewedge(a, b).entries, -doublewedge(b, a).entries), _n(a) * _n(b)


def _distributivity(rng, n):
    a, b, c = rng.uniform(n), rng.uniform(n), rng.uniform(n)
    lhs = doublewedge(a, b + c).entries
    rhs = (doublewedge(a, b) + doublewedge(a, c)).entries
    return _err(lhs, rhs), _n(a) * (_n(b) + _n(c))


def _scalar_compat(rng, n):
    a, b = rng.uniform(n), rng.uniform(n)
    alpha, beta = 4.0 * rng.uniform(2)
    lhs = doublewedge(alpha * a, beta * b).entries
    rhs = (alpha * beta * doublewedge(a, b)).entries
    return _err(lhs, rhs), abs(alpha * beta) * _n(a) * _n(b)


def _indeterminacy(rng, n):
    a, b = rng.uniform(n), rng.uniform(n)
    return float(abs(perpendicular_space_dim(a, b) - (n - 2))), 1.0


def _hodge(rng, n):
    r, f = rng.uniform(3), rng.uniform(3)
    return _err(to_axial(doublewedge(r, f)), cross3(r, f)), _n(r) * _n(f)


def _action3(rng, n):
    r, f, c = rng.uniform(3), rng.uniform(3), rng.uniform(3)
    return _err(cross3(cross3(r, f), c), apply(doublewedge(r, f), c)), _n(r) * _n(f) * _n(c)


def _matrix_form(rng, n):
    m, c = rng.uniform(3), rng.uniform(3)
    return _err(cross3(m, c), apply(to_bivector(m), c)), _n(m) * _n(c)


def _triple(rng, n):
    a, b, c = rng.uniform(3), rng.uniform(3), rng.uniform(3)
    v3 = cross3(a, b) @ c
    vn = three_index_product(doublewedge(a, b), c, 2, 1, 0)
    det = np.linalg.det(np.column_stack([a, b, c]))
    return max(abs(v3 - vn), abs(vn - det)), _n(a) * _n(b) * _n(c)


def _cyclic(rng, n):
    a, b, c = rng.uniform(3), rng.uniform(3), rng.uniform(3)
    v1 = three_index_product(doublewedge(a, b), c, 2, 1, 0)
    v2 = three_index_product(doublewedge(b, c), a, 2, 1, 0)
    v3 = three_index_product(doublewedge(c, a), b, 2, 1, 0)
    return max(abs(v1 - v2), abs(v2 - v3)), _n(a) * _n(b) * _n(c)


def _covariance3(rng, n):
    L, a, b = rng.matrix(3), rng.uniform(3), rng.uniform(3)
    lhs = cross3(L @ a, L @ b)
    rhs = _cofactor3(L) @ cross3(a, b)
    nd = to_axial(transform(L, doublewedge(a, b)))
    return max(_err(lhs, rhs), _err(lhs, nd)), np.linalg.norm(L, 2) ** 2 * _n(a) * _n(b)


def _lagrange3(rng, n):
    a, b, c, d = (rng.uniform(3) for _ in range(4))
    lhs = cross3(a, b) @ cross3(c, d)
    rhs = 0.5 * contraction(doublewedge(a, b), doublewedge(c, d))
    return abs(lhs - rhs), _n(a) * _n(b) * _n(c) * _n(d)


def _power3(rng, n):
    m, w = rng.uniform(3), rng.uniform(3)
    return abs(m @ w - 0.5 * contraction(to_bivector(m), to_bivector(w))), _n(m) * _n(w)


@dataclass(frozen=True)
class Check:
    name: str
    fn: Callable
    tolerance: float
    generic: bool


CHECKS = (
    Check("M_ij = F_i r_j - r_i F_j", _component_formula, IDENTITY_TOL, True),
    Check("[r ^^ F] . c = F (r . c) - r (F . c)", _action, IDENTITY_TOL, True),
    Check("(L a) ^^ (L b) = L [a ^^ b] L^T", _covariance, IDENTITY_TOL, True),
    Check("1/2 [a ^^ b] : [c ^^ d] = (a . c)(b . d) - (a . d)(b . c)", _lagrange, IDENTITY_TOL, True),
    Check("a ^^ b = -(b ^^ a)", _anticommutativity, 0.0, True),
    Check("a ^^ (b + c) = a ^^ b + a ^^ c", _distributivity, PROPERTY_TOL, True),
    Check("(alpha a) ^^ (beta b) = alpha beta [a ^^ b]", _scalar_compat, PROPERTY_TOL, True),
    Check("dim{p : p . a = p . b = 0} = N - 2", _indeterminacy, 0.0, True),
    Check("M = r x F  <->  M = r ^^ F", _hodge, IDENTITY_TOL, False),
    Check("(r x F) x c = [r ^^ F] . c", _action3, IDENTITY_TOL, False),
    Check("M x c = [M x] c", _matrix_form, IDENTITY_TOL, False),
    Check("V = (a x b) . c = [a ^^ b] ._321 c = det[a b c]", _triple, IDENTITY_TOL, False),
    Check("[a ^^ b] ._321 c = [b ^^ c] ._321 a = [c ^^ a] ._321 b", _cyclic, IDENTITY_TOL, False),
    Check("(L a) x (L b) = det(L) L^-T (a x b)", _covariance3, IDENTITY_TOL, False),
    Check("(a x b) . (c x d) = 1/2 [a ^^ b] : [c ^^ d]", _lagrange3, IDENTITY_TOL, False),
    Check("Pow = M . w = 1/2 M : W", _power3, IDENTITY_TOL, False),
)


def run_identity_suite(seed: int = DEFAULT_SEED, dims=DEFAULT_DIMS, samples: int = DEFAULT_SAMPLES):
    """Run every check; returns a list of per-check result dicts."""
    rng = SplitMix64(seed)
    results = []
    for check in CHECKS:
        check_dims = list(dims) if check.generic else [3]
        worst = 0.0
        count = 0
        for n in check_dims:
            if check.fn is _indeterminacy and n < 2:
                continue
            count += samples
            for _ in range(samples):
                err, scale = check.fn(rng, n)
                rel = err / scale if scale > 0 else err
                worst = max(worst, rel)
        results.append(
            {
                "identity": check.name,
                "dims": check_dims,
                "instances": count,
                "max_rel_error": worst,
                "tolerance": check.tolerance,
                "status": "pass" if worst <= check.tolerance else "fail",
            }
        )
    return results
