import math

import numpy as np
import pytest

from doublewedge import (
    Bivector,
    BivectorField,
    DimensionError,
    FieldEvaluationError,
    VectorField,
    cross3,
    curl,
    faraday_residual,
    jacobian,
    lorentz_force,
    to_axial,
    to_bivector,
)
from doublewedge.core import allclose

# gradient fields of smooth scalars whose curl truncation error is O(h²), nonzero
GRADIENT_FIELDS = {
    # φ = exp(x1 + 2 x2 - x3)
    "exp3": (
        3,
        lambda x, t: math.exp(x[0] + 2 * x[1] - x[2]) * np.array([1.0, 2.0, -1.0]),
    ),
    # φ = sin(x1) cos(2 x2) + x3³ x4
    "trig4": (
        4,
        lambda x, t: np.array(
            [
                math.cos(x[0]) * math.cos(2 * x[1]),
                -2 * math.sin(x[0]) * math.sin(2 * x[1]),
                3 * x[2] ** 2 * x[3],
                x[2] ** 3,
            ]
        ),
    ),
    # φ = exp(x1 / 2) sin(x2 + x5) + x3 x4²
    "mixed5": (
        5,
        lambda x, t: np.array(
            [
                0.5 * math.exp(0.5 * x[0]) * math.sin(x[1] + x[4]),
                math.exp(0.5 * x[0]) * math.cos(x[1] + x[4]),
                x[3] ** 2,
                2 * x[2] * x[3],
                math.exp(0.5 * x[0]) * math.cos(x[1] + x[4]),
            ]
        ),
    ),
}


def curl_order(field, x, h0):
    errs = [np.max(np.abs(curl(field, x, 0.0, h).entries)) for h in (h0, h0 / 2, h0 / 4)]
    return errs, [math.log2(errs[0] / errs[1]), math.log2(errs[1] / errs[2])]


def test_curl_rotational_field():
    v = VectorField(lambda x, t: [-x[1], x[0], 0.0], 3)
    c = curl(v, [0.3, -1.2, 2.0])
    assert c[0, 1] == pytest.approx(-2.0, rel=1e-9)
    assert np.allclose(to_axial(c), [0.0, 0.0, 2.0], rtol=1e-9)


def test_curl_of_gradient_of_norm_squared():
    v = VectorField(lambda x, t: 2.0 * np.asarray(x), 4)
    assert allclose(curl(v, [1.0, -2.0, 0.5, 3.0]).entries, np.zeros((4, 4)), atol=1e-9)


def test_curl_polynomial_4d():
    # v = (x2 x3, x1² x4, x3 x4², x1 x2); at x = (1, 2, 3, -1):
    #   J = [[0, 3, 2, 0], [-2, 0, 0, 1], [0, 0, 1, -6], [2, 1, 0, 0]]
    v = VectorField(
        lambda x, t: [x[1] * x[2], x[0] ** 2 * x[3], x[2] * x[3] ** 2, x[0] * x[1]], 4
    )
    expected = np.zeros((4, 4))
    expected[0, 1], expected[0, 2], expected[0, 3] = 5.0, 2.0, -2.0
    expected[1, 2], expected[1, 3], expected[2, 3] = 0.0, 0.0, -6.0
    expected = expected - expected.T
    got = curl(v, [1.0, 2.0, 3.0, -1.0], h=1e-4)
    assert np.max(np.abs(got.entries - expected)) <= 1e-8


def test_curl_constant_field_is_zero():
    v = VectorField(lambda x, t: [1.5, -2.0, 7.0, 0.25], 4)
    assert np.array_equal(curl(v, [0.1, 0.2, 0.3, 0.4]).entries, np.zeros((4, 4)))


def test_curl_exactly_antisymmetric():
    v = VectorField(lambda x, t: [math.sin(x[1] * x[2]), x[0] ** 3, math.exp(x[1])], 3)
    c = curl(v, [0.4, 0.1, -0.7])
    assert np.array_equal(c.entries, -c.entries.T)


def test_curl_linear_in_field():
    f = VectorField(lambda x, t: [x[1] ** 2, x[0] * x[2], math.sin(x[0])], 3)
    g = VectorField(lambda x, t: [math.cos(x[2]), x[0] ** 2, x[1] * x[0]], 3)
    fg = VectorField(lambda x, t: 2.0 * f(x, t) - 3.0 * g(x, t), 3)
    x = [0.2, -0.5, 1.1]
    lhs = curl(fg, x, h=1e-4).entries
    rhs = 2.0 * curl(f, x, h=1e-4).entries - 3.0 * curl(g, x, h=1e-4).entries
    assert np.max(np.abs(lhs - rhs)) <= 1e-10


def test_curl_3d_matches_component_formula():
    v = VectorField(lambda x, t: [x[1] * math.sin(x[2]), x[0] ** 2 - x[2], math.exp(x[0] * x[1])], 3)
    x, h = [0.3, 0.8, -0.4], 1e-3
    J = jacobian(v, x, 0.0, h)
    curl3 = [J[2, 1] - J[1, 2], J[0, 2] - J[2, 0], J[1, 0] - J[0, 1]]
    assert np.array_equal(to_axial(curl(v, x, 0.0, h)), curl3)


@pytest.mark.parametrize("name", sorted(GRADIENT_FIELDS))
def test_curl_of_gradient_converges_second_order(name):
    n, fn = GRADIENT_FIELDS[name]
    x = np.linspace(0.3, -0.4, n)
    errs, orders = curl_order(VectorField(fn, n), x, 4e-2)
    assert errs[0] > 0
    for p in orders:
        assert 2 / 1.5 <= p <= 2 * 1.5


def test_curl_errors():
    v = VectorField(lambda x, t: [1.0 / x[0], 0.0], 2)
    with np.errstate(divide="ignore"), pytest.raises(FieldEvaluationError, match="not finite at x="):
        curl(v, [0.0, 1.0], h=1.0)
    with pytest.raises(ValueError):
        curl(v, [1.0, 1.0], h=0.0)
    with pytest.raises(DimensionError):
        curl(v, [1.0, 1.0, 1.0])


# -- Faraday -----------------------------------------------------------------


def plane_wave(f):
    # E = ŷ f(x1 - t), B = ẑ f(x1 - t): ∇×E = ẑ f' = -∂B/∂t
    e = VectorField(lambda x, t: [0.0, f(x[0] - t), 0.0], 3)
    b = BivectorField(lambda x, t: to_bivector([0.0, 0.0, f(x[0] - t)]), 3)
    return e, b


def test_faraday_static_fields():
    e = VectorField(lambda x, t: [0.0, 0.0, 0.0], 3)
    b = BivectorField(lambda x, t: to_bivector([1.0, -2.0, 0.5]), 3)
    assert np.array_equal(faraday_residual(e, b, [1.0, 2.0, 3.0], 0.5).entries, np.zeros((3, 3)))
    e = VectorField(lambda x, t: [3.0, 1.0, -1.0, 2.0], 4)
    b = BivectorField(lambda x, t: Bivector.from_upper(np.arange(16.0).reshape(4, 4)), 4)
    assert np.array_equal(faraday_residual(e, b, [1.0, 2.0, 3.0, 4.0], 0.0).entries, np.zeros((4, 4)))


def test_faraday_plane_wave_second_order():
    e, b = plane_wave(math.sin)
    x, t = [0.7, -0.2, 0.4], 0.3
    res = []
    # travelling wave: the leading errors cancel as f''' (h² - dt²) / 6, so use dt != h
    for s in (4e-2, 2e-2, 1e-2):
        res.append(np.max(np.abs(faraday_residual(e, b, x, t, h=s, dt=s / 2).entries)))
    assert res[0] <= ((4e-2) ** 2 + (2e-2) ** 2) / 6
    for a, c in zip(res, res[1:]):
        assert 2 / 1.5 <= math.log2(a / c) <= 2 * 1.5


def test_faraday_detects_wrong_sign():
    e, _ = plane_wave(math.sin)
    bad = BivectorField(lambda x, t: to_bivector([0.0, 0.0, -math.sin(x[0] - t)]), 3)
    r = faraday_residual(e, bad, [0.7, -0.2, 0.4], 0.3, h=1e-4, dt=1e-4)
    assert np.max(np.abs(r.entries)) == pytest.approx(2 * abs(math.cos(0.4)), rel=1e-6)


# -- Lorentz -----------------------------------------------------------------


def test_lorentz_examples():
    assert np.array_equal(lorentz_force(1.0, to_bivector([0, 0, 1]), [1, 0, 0]), [0, -1, 0])
    b = Bivector.from_upper([[0, 1, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]])
    assert np.array_equal(lorentz_force(2.0, b, [0, 0, 3, -1]), np.zeros(4))
    assert np.array_equal(lorentz_force(0.0, b, [1, 2, 3, 4]), np.zeros(4))


def test_lorentz_3d_oracle(rng):
    for _ in range(50):
        q = rng.normal()
        B, v = rng.normal(size=(2, 3))
        got = lorentz_force(q, to_bivector(B), v)
        assert allclose(got, -q * cross3(B, v), rtol=1e-12)


def test_magnetic_force_does_no_work(rng):
    for n in range(2, 9):
        for _ in range(20):
            b = Bivector.from_upper(rng.normal(size=(n, n)))
            v = rng.normal(size=n)
            q = rng.normal()
            F = lorentz_force(q, b, v)
            assert abs(v @ F) <= 1e-12 * abs(q) * np.linalg.norm(b.entries) * (v @ v)
