import itertools

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from doublewedge import (
    EPS,
    Bivector,
    DimensionError,
    apply,
    contraction,
    cross3,
    doublewedge,
    three_index_product,
    to_axial,
    to_bivector,
)

# zero or a magnitude in [1e-50, 1e3]: products of several norms must not underflow
real = st.one_of(st.just(0.0), st.floats(1e-50, 1e3), st.floats(-1e3, -1e-50))
v3 = arrays(float, 3, elements=real)


def _rel(a, b, scale):
    return np.max(np.abs(np.asarray(a) - np.asarray(b))) / max(scale, 1e-300)


def test_levi_civita_table():
    assert EPS[0, 1, 2] == 1
    for i, j, k in itertools.product(range(3), repeat=3):
        assert EPS[i, j, k] == -EPS[j, i, k] == -EPS[i, k, j] == -EPS[k, j, i]
    assert np.count_nonzero(EPS) == 6


def test_cross3_examples():
    assert np.array_equal(cross3([1, 0, 0], [0, 1, 0]), [0, 0, 1])
    assert np.array_equal(cross3([1.5, -2, 7], [1.5, -2, 7]), [0, 0, 0])
    assert np.array_equal(cross3([2, 3, 4], [5, 6, 7]), [-3, 6, -3])
    with pytest.raises(DimensionError):
        cross3([1, 2], [3, 4])


def test_to_bivector_pattern():
    assert np.array_equal(to_bivector([0, 0, 1]).entries, [[0, -1, 0], [1, 0, 0], [0, 0, 0]])
    assert np.array_equal(to_bivector([0, 0, 0]).entries, np.zeros((3, 3)))
    w = [1.0, 2.0, 3.0]
    assert np.array_equal(to_bivector(w).entries, [[0, -3, 2], [3, 0, -1], [-2, 1, 0]])
    with pytest.raises(DimensionError):
        to_bivector([1, 2, 3, 4])


def test_to_axial_pattern():
    m = Bivector([[0, -1, 0], [1, 0, 0], [0, 0, 0]])
    assert np.array_equal(to_axial(m), [0, 0, 1])
    assert np.array_equal(to_axial(Bivector.zeros(3)), [0, 0, 0])
    with pytest.raises(DimensionError):
        to_axial(Bivector.zeros(4))


@given(v3, v3)
def test_to_bivector_acts_as_cross(w, x):
    assert _rel(apply(to_bivector(w), x), cross3(w, x), np.linalg.norm(w) * np.linalg.norm(x)) <= 1e-12


@given(v3)
def test_round_trip_exact(w):
    assert np.array_equal(to_axial(to_bivector(w)), w)


@given(v3, v3)
def test_hodge_equivalence(r, f):
    got = to_axial(doublewedge(r, f))
    assert _rel(got, cross3(r, f), np.linalg.norm(r) * np.linalg.norm(f)) <= 1e-12


@given(v3, v3, v3)
def test_triple_product_equivalence(a, b, c):
    scale = np.linalg.norm(a) * np.linalg.norm(b) * np.linalg.norm(c)
    v3d = cross3(a, b) @ c
    vnd = three_index_product(doublewedge(a, b), c, 2, 1, 0)
    det = np.linalg.det(np.column_stack([a, b, c]))
    assert _rel(v3d, vnd, scale) <= 1e-12
    assert _rel(vnd, det, scale) <= 1e-12
    # cyclic row
    for x, y, z in ((b, c, a), (c, a, b)):
        assert _rel(vnd, three_index_product(doublewedge(x, y), z, 2, 1, 0), scale) <= 1e-12


@given(v3, v3, v3)
def test_bac_cab(a, b, c):
    scale = np.linalg.norm(a) * np.linalg.norm(b) * np.linalg.norm(c)
    lhs = cross3(a, cross3(b, c))
    rhs = b * (c @ a) - c * (b @ a)
    # a × (b × c) = -(b × c) × a = [c ∧∧ b]·a
    nd = apply(doublewedge(c, b), a)
    assert _rel(lhs, rhs, scale) <= 1e-12
    assert _rel(lhs, nd, scale) <= 1e-12


@given(v3, v3, v3, v3)
def test_lagrange_3d(a, b, c, d):
    scale = np.prod([np.linalg.norm(v) for v in (a, b, c, d)])
    lhs = cross3(a, b) @ cross3(c, d)
    rhs = 0.5 * contraction(doublewedge(a, b), doublewedge(c, d))
    assert _rel(lhs, rhs, scale) <= 1e-12
