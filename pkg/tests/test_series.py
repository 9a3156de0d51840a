import cmath
import json
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from merostar.series import (
    DEFAULT_ANGULAR_SAMPLES,
    DiscGrid,
    LaurentFunction,
    delta_distance,
    deserialize_coeffs,
    eval_g,
    eval_g_prime,
    from_coeffs,
    hadamard,
    partial_sum,
    refinement_grid,
    serialize_coeffs,
)

import oracles

finite_component = st.floats(
    min_value=-10.0, max_value=10.0, allow_nan=False, allow_infinity=False
)
complex_coeff = st.builds(complex, finite_component, finite_component)
coeff_lists = st.lists(complex_coeff, min_size=0, max_size=12)


def test_empty_tail_is_pure_pole():
    f = from_coeffs([])
    assert f.truncation_degree == -1
    for z in (0.3, -0.7j, 0.5 + 0.5j):
        assert eval_g(f, z) == 1.0
        assert eval_g_prime(f, z) == 0.0


def test_one_minus_z_squared_over_z_values():
    f = from_coeffs([-2.0, 1.0])
    assert eval_g(f, 0.5) == pytest.approx(0.25, abs=1e-15)
    assert eval_g_prime(f, 0.5) == pytest.approx(-1.0, abs=1e-15)


def test_single_coefficient_at_pure_imaginary_point():
    f = from_coeffs([0.0, 1.0])  # g = 1 + z^2
    assert eval_g(f, 0.3j) == pytest.approx(0.91, abs=1e-15)
    assert eval_g_prime(f, 0.3j) == pytest.approx(0.6j, abs=1e-15)


def test_truncation_degree_counts_coefficients():
    assert from_coeffs([1.0, 2.0, 3.0]).truncation_degree == 2


@pytest.mark.parametrize("bad", [float("nan"), float("inf"), complex(0, float("nan"))])
def test_nonfinite_coefficients_rejected(bad):
    with pytest.raises(ValueError):
        from_coeffs([1.0, bad])


def test_horner_matches_naive_power_sum():
    rng = np.random.default_rng(11)
    for _ in range(200):
        degree = int(rng.integers(0, 65))
        coeffs = rng.normal(size=degree + 1) + 1j * rng.normal(size=degree + 1)
        f = LaurentFunction(tuple(coeffs))
        r = float(rng.uniform(0.0, 0.999))
        z = r * np.exp(1j * rng.uniform(0, 2 * np.pi))
        got = eval_g(f, z)
        want = oracles.naive_eval_g(coeffs, complex(z))
        assert abs(got - want) <= 1e-12 * max(1.0, abs(want))


def test_derivative_matches_central_differences():
    rng = np.random.default_rng(12)
    for _ in range(50):
        degree = int(rng.integers(0, 33))
        coeffs = rng.normal(size=degree + 1) + 1j * rng.normal(size=degree + 1)
        f = LaurentFunction(tuple(coeffs))
        z = complex(rng.uniform(-0.6, 0.6), rng.uniform(-0.6, 0.6))
        want = oracles.central_difference(lambda w: eval_g(f, w), z)
        got = eval_g_prime(f, z)
        if abs(want) > 1e-3:  # away from zeros of g'
            assert abs(got - want) <= 1e-5 * abs(want)


@given(coeff_lists, coeff_lists)
@settings(max_examples=50, deadline=None)
def test_hadamard_commutative(a, b):
    f, g = from_coeffs(a), from_coeffs(b)
    assert hadamard(f, g).coeffs == hadamard(g, f).coeffs


@given(coeff_lists, coeff_lists, coeff_lists)
@settings(max_examples=50, deadline=None)
def test_hadamard_associative(a, b, c):
    # coefficient-wise products are associative up to one reordering of the
    # float multiplications; complex moduli multiply exactly, so relative
    # comparison is safe even under heavy cancellation in one component
    f, g, h = from_coeffs(a), from_coeffs(b), from_coeffs(c)
    left = hadamard(hadamard(f, g), h).coeffs
    right = hadamard(f, hadamard(g, h)).coeffs
    assert len(left) == len(right)
    for p, q in zip(left, right):
        assert cmath.isclose(p, q, rel_tol=1e-12, abs_tol=1e-300)


def test_hadamard_identity_and_annihilator():
    f = from_coeffs([2.0, 3.0 - 1j, 0.5])
    ones = from_coeffs([1.0, 1.0, 1.0])
    assert hadamard(f, ones).coeffs == f.coeffs
    assert hadamard(f, from_coeffs([])).coeffs == ()


def test_partial_sum_drops_constant_and_high_terms():
    f = from_coeffs([3.0, 5.0, 7.0])
    s = partial_sum(f, 3)
    assert s.coeffs == (0j, 5.0 + 0j, 7.0 + 0j)


def test_partial_sum_n1_is_pole():
    f = from_coeffs([3.0, 5.0, 7.0])
    assert partial_sum(f, 1).coeffs == ()


def test_partial_sum_truncates_above_n():
    f = from_coeffs([1.0, 2.0, 3.0, 4.0, 5.0])
    s = partial_sum(f, 3)
    assert s.coeffs[1:3] == f.coeffs[1:3]
    assert all(c == 0 for c in s.coeffs[3:])
    assert len(s.coeffs) <= 3


def test_partial_sum_rejects_nonpositive_n():
    with pytest.raises(ValueError):
        partial_sum(from_coeffs([1.0]), 0)


def test_delta_distance_examples():
    f = from_coeffs([])
    g = from_coeffs([0.0, 0.0, 0.1])
    assert delta_distance(f, g) == pytest.approx(0.2, abs=1e-15)
    # index 0 carries no weight
    assert delta_distance(f, from_coeffs([5.0])) == 0.0


@given(coeff_lists, coeff_lists, coeff_lists)
@settings(max_examples=50, deadline=None)
def test_delta_distance_is_a_pseudometric(a, b, c):
    f, g, h = from_coeffs(a), from_coeffs(b), from_coeffs(c)
    dfg = delta_distance(f, g)
    assert dfg >= 0.0
    assert dfg == delta_distance(g, f)
    assert delta_distance(f, f) == 0.0
    assert delta_distance(f, h) <= dfg + delta_distance(g, h) + 1e-12


def test_default_grid_shape():
    grid = DiscGrid.default()
    assert grid.radii[-3:] == (0.99, 0.999, 0.9999)
    assert grid.radii[0] == pytest.approx(0.1)
    assert grid.angular_samples == DEFAULT_ANGULAR_SAMPLES
    pts = grid.points
    assert len(pts) == len(grid)
    assert np.min(np.abs(pts)) > 0.0  # the pole is never sampled
    assert all(0.0 < r < 1.0 for r in grid.radii)


def test_grid_validation():
    with pytest.raises(ValueError):
        DiscGrid(radii=(0.5, 0.3), angular_samples=16)  # not increasing
    with pytest.raises(ValueError):
        DiscGrid(radii=(0.5, 1.0), angular_samples=16)  # touches boundary
    with pytest.raises(ValueError):
        DiscGrid(radii=(), angular_samples=16)  # empty
    with pytest.raises(ValueError):
        DiscGrid(radii=(0.5,), angular_samples=4)  # too few angles


def test_grid_point_label_agrees_with_points():
    grid = DiscGrid(radii=(0.25, 0.75), angular_samples=8)
    pts = grid.points
    for i in range(len(grid)):
        r, theta = grid.point_label(i)
        assert pts[i] == pytest.approx(r * np.exp(1j * theta), abs=1e-15)


def test_refinement_grid_hugs_boundary():
    grid = refinement_grid(64)
    assert grid.angular_samples == 64
    assert grid.radii == tuple(1.0 - 10.0**-k for k in range(1, 9))


@given(coeff_lists)
@settings(max_examples=50, deadline=None)
def test_serialization_roundtrip_is_bit_exact(coeffs):
    f = from_coeffs(coeffs)
    assert deserialize_coeffs(serialize_coeffs(f)).coeffs == f.coeffs


def test_deserialize_rejects_malformed_entries():
    with pytest.raises(ValueError, match="coeffs"):
        deserialize_coeffs({"series": []})
    with pytest.raises(ValueError, match="3"):
        deserialize_coeffs({"coeffs": [[0, 0], [1, 0], [2, 0], [1, 2, 3]]})
    with pytest.raises(ValueError, match="1"):
        deserialize_coeffs({"coeffs": [[0.0, 0.0], [float("nan"), 0.0]]})


def test_deserialize_ignores_unknown_keys():
    f = deserialize_coeffs({"coeffs": [[1.5, -2.0]], "tail_bound": 0.1})
    assert f.coeffs == (1.5 - 2.0j,)


def test_serialized_form_is_json_friendly():
    f = from_coeffs([1.0 + 2.0j, -0.5])
    text = json.dumps(serialize_coeffs(f))
    assert deserialize_coeffs(json.loads(text)).coeffs == f.coeffs
