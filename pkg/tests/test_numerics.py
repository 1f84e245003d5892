"""Numerical kernel layer: Bessel K, quadrature, designs, linear algebra.

Reference values were frozen from a 30-digit arbitrary-precision
evaluation, independent of the implementation under test.
"""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dpm.numerics import (
    K_SATURATION,
    CholeskySolveResult,
    QuadratureRule,
    SeededRng,
    bessel_k,
    cholesky_solve,
    gauss_legendre_01,
    halton,
    maximin_lhs,
    sym_eig_small,
    tensor_or_qmc_rule,
)

# (order, x, K_order(x)) to 17 digits
BESSEL_TABLE = [
    (0, 0.05, 3.1142340294719898),
    (0, 0.5, 0.92441907122766586),
    (0, 1.0, 0.42102443824070833),
    (0, 2.0, 0.11389387274953344),
    (0, 10.0, 1.7780062316167652e-5),
    (0, 30.0, 2.1324774964630564e-14),
    (1, 0.05, 19.909674325882505),
    (1, 0.5, 1.6564411200033009),
    (1, 1.0, 0.60190723019723457),
    (1, 5.0, 0.0040446134454521642),
    (1, 30.0, 2.1677320018915494e-14),
    (2, 0.1, 199.50396464211412),
    (2, 1.0, 1.6248388986351775),
    (2, 2.0, 0.25375975456605586),
    (2, 10.0, 2.1509817006932769e-5),
    (3, 0.05, 63980.006239507652),
    (3, 0.5, 62.057909529930256),
    (3, 1.0, 7.1012628247379445),
    (3, 2.0, 0.64738539094863415),
    (3, 5.0, 0.0082917684152309322),
    (3, 30.0, 2.4713310636589929e-14),
    (0.5, 0.1, 3.58616683879726),
    (0.5, 1.0, 0.46106850444789456),
    (0.5, 2.0, 0.11993777196806145),
    (1.5, 0.5, 3.2251428104997607),
    (1.5, 1.0, 0.92213700889578912),
    (1.5, 10.0, 1.9792825903075698e-5),
    (2.5, 0.05, 6723.1886696423608),
    (2.5, 1.0, 3.2274795311352619),
    (2.5, 2.0, 0.3897977588961997),
    (3.5, 0.1, 59390.509017321414),
    (3.5, 1.0, 17.059534664572099),
    (3.5, 2.0, 1.1544010551925914),
    (3.5, 30.0, 2.6063619483386783e-14),
]


class TestBesselK:
    @pytest.mark.parametrize("order,x,expected", BESSEL_TABLE)
    def test_frozen_table(self, order, x, expected):
        assert bessel_k(order, x) == pytest.approx(expected, rel=5e-13)

    def test_half_integer_elementary_form(self):
        # K_{1/2}(x) = sqrt(pi/(2x)) exp(-x)
        for x in (0.3, 1.0, 4.7):
            assert bessel_k(0.5, x) == pytest.approx(
                math.sqrt(math.pi / (2 * x)) * math.exp(-x), rel=1e-13)

    def test_vectorized_matches_scalar(self):
        xs = np.array([0.2, 1.0, 3.3, 8.0])
        batch = bessel_k(2.5, xs)
        assert batch.shape == xs.shape
        for xi, bi in zip(xs, batch):
            assert bi == bessel_k(2.5, float(xi))

    def test_saturation_is_finite_sentinel(self):
        # K_3(x) ~ 8/x^3 near zero, far beyond float range at x=1e-120
        val = bessel_k(3, 1e-120)
        assert val == K_SATURATION
        assert np.isfinite(val)
        assert bessel_k(3, 1e-80) == pytest.approx(8e240, rel=1e-10)

    def test_invalid_arguments(self):
        with pytest.raises(ValueError):
            bessel_k(-1.0, 1.0)
        with pytest.raises(ValueError):
            bessel_k(1.0, 0.0)
        with pytest.raises(ValueError):
            bessel_k(1.0, -2.0)

    @given(st.floats(0.1, 20.0), st.integers(1, 3))
    @settings(max_examples=50, deadline=None)
    def test_recurrence(self, x, n):
        # K_{n+1}(x) = K_{n-1}(x) + (2n/x) K_n(x)
        lhs = bessel_k(n + 1, x)
        rhs = bessel_k(n - 1, x) + (2 * n / x) * bessel_k(n, x)
        assert lhs == pytest.approx(rhs, rel=1e-10)

    @given(st.floats(0.05, 30.0), st.floats(0.05, 30.0),
           st.sampled_from([0.5, 1.5, 2.0, 3.5]))
    @settings(max_examples=50, deadline=None)
    def test_decreasing_in_x(self, a, b, order):
        lo, hi = sorted((a, b))
        if hi - lo < 1e-9:
            return
        assert bessel_k(order, lo) > bessel_k(order, hi)


class TestGaussLegendre:
    def test_weights_and_domain(self):
        rule = gauss_legendre_01(12)
        assert rule.points.shape == (12, 1)
        assert rule.weights.sum() == pytest.approx(1.0, abs=1e-14)
        assert np.all(rule.points > 0) and np.all(rule.points < 1)

    def test_sin_integral_n5(self):
        # int_0^1 sin(3x) dx; 5 nodes carry a ~2e-8 truncation error
        rule = gauss_legendre_01(5)
        got = rule.integrate(np.sin(3.0 * rule.points[:, 0]))
        assert got == pytest.approx(0.66333083220014849, abs=1e-7)

    def test_sin_integral_n8(self):
        rule = gauss_legendre_01(8)
        got = rule.integrate(np.sin(3.0 * rule.points[:, 0]))
        assert got == pytest.approx(0.66333083220014849, abs=1e-12)

    @pytest.mark.parametrize("n", [2, 4, 7])
    def test_polynomial_exactness(self, n):
        # degree 2n-1 is integrated exactly
        rule = gauss_legendre_01(n)
        k = 2 * n - 1
        got = rule.integrate(rule.points[:, 0] ** k)
        assert got == pytest.approx(1.0 / (k + 1), rel=1e-13)


class TestHalton:
    def test_first_points(self):
        assert halton(1, 1)[0] == 0.5
        assert halton(3, 1)[0] == 0.75
        np.testing.assert_allclose(halton(1, 2), [0.5, 1.0 / 3.0])

    def test_base2_van_der_corput_prefix(self):
        got = [halton(i, 1)[0] for i in range(1, 8)]
        assert got == [0.5, 0.25, 0.75, 0.125, 0.625, 0.375, 0.875]

    def test_dimension_cap(self):
        assert halton(5, 20).shape == (20,)
        with pytest.raises(ValueError):
            halton(5, 21)
        with pytest.raises(ValueError):
            halton(0, 2)

    @given(st.integers(1, 5000), st.integers(1, 6))
    @settings(max_examples=100, deadline=None)
    def test_in_open_unit_cube(self, index, dims):
        pt = halton(index, dims)
        assert np.all(pt > 0.0) and np.all(pt < 1.0)


class TestQuadratureRule:
    def test_validation(self):
        pts = np.array([[0.25], [0.75]])
        with pytest.raises(ValueError):
            QuadratureRule(pts, np.array([0.6, 0.6]))  # weights sum 1.2
        with pytest.raises(ValueError):
            QuadratureRule(np.array([[1.5], [0.5]]), np.array([0.5, 0.5]))
        with pytest.raises(ValueError):
            QuadratureRule(pts, np.array([1.2, -0.2]))

    def test_integrate_constant(self):
        rule = QuadratureRule(np.array([[0.2], [0.9]]), np.array([0.3, 0.7]))
        assert rule.integrate(np.array([5.0, 5.0])) == pytest.approx(5.0)
        assert rule.dim == 1

    def test_tensor_or_qmc_dispatch(self):
        r1 = tensor_or_qmc_rule(1, 16)
        assert r1.points.shape == (16, 1)
        r2 = tensor_or_qmc_rule(2, 80)
        side = math.isqrt(80)
        assert r2.points.shape == (side * side, 2)
        r5 = tensor_or_qmc_rule(5, 300)
        assert r5.points.shape == (300, 5)
        assert np.allclose(r5.weights, 1.0 / 300)

    def test_tensor_rule_integrates_separable_product(self):
        rule = tensor_or_qmc_rule(2, 100)
        vals = rule.points[:, 0] * rule.points[:, 1] ** 2
        assert rule.integrate(vals) == pytest.approx(0.5 * (1.0 / 3.0), rel=1e-12)


class TestMaximinLhs:
    def test_is_latin_hypercube(self):
        n, p = 17, 3
        design = maximin_lhs(n, p, SeededRng(5))
        assert design.shape == (n, p)
        for j in range(p):
            bins = np.floor(design[:, j] * n).astype(int)
            assert sorted(bins) == list(range(n))

    def test_deterministic_given_seed(self):
        a = maximin_lhs(12, 2, SeededRng(99))
        b = maximin_lhs(12, 2, SeededRng(99))
        np.testing.assert_array_equal(a, b)

    def test_swaps_do_not_hurt_min_distance(self):
        def min_dist(d):
            diff = np.sqrt(((d[:, None] - d[None, :]) ** 2).sum(-1))
            np.fill_diagonal(diff, np.inf)
            return diff.min()

        raw = maximin_lhs(20, 2, SeededRng(31), restarts=1, swaps=0)
        optimized = maximin_lhs(20, 2, SeededRng(31), restarts=1, swaps=150)
        assert min_dist(optimized) >= min_dist(raw)

    def test_argument_validation(self):
        with pytest.raises(ValueError):
            maximin_lhs(1, 2, SeededRng(0))
        with pytest.raises(ValueError):
            maximin_lhs(5, 0, SeededRng(0))


class TestCholeskySolve:
    def test_residual_bound(self):
        rng = np.random.default_rng(2)
        m = rng.normal(size=(40, 40))
        a = m @ m.T + 40 * np.eye(40)
        b = rng.normal(size=40)
        res = cholesky_solve(a, b)
        assert isinstance(res, CholeskySolveResult)
        assert res.jitter_used == 0.0
        assert np.max(np.abs(a @ res.solution - b)) <= 1e-8 * np.max(np.abs(b))

    def test_jitter_escalation_on_singular_gram(self):
        v = np.arange(1.0, 7.0)
        a = np.outer(v, v)  # rank one
        b = v.copy()
        res = cholesky_solve(a, b)
        assert res.jitter_used > 0.0
        jittered = a + res.jitter_used * np.eye(6)
        assert np.allclose(jittered @ res.solution, b, atol=1e-6)

    def test_indefinite_matrix_fails(self):
        a = np.diag([1.0, -5.0, 2.0])
        with pytest.raises(np.linalg.LinAlgError):
            cholesky_solve(a, np.ones(3))

    def test_asymmetric_rejected(self):
        a = np.array([[1.0, 0.5], [0.2, 1.0]])
        with pytest.raises(ValueError):
            cholesky_solve(a, np.ones(2))

    def test_matrix_rhs(self):
        rng = np.random.default_rng(8)
        m = rng.normal(size=(10, 10))
        a = m @ m.T + 10 * np.eye(10)
        B = rng.normal(size=(10, 3))
        res = cholesky_solve(a, B)
        assert np.allclose(a @ res.solution, B, atol=1e-9)


class TestSymEig:
    def test_descending_and_reconstructs(self):
        rng = np.random.default_rng(4)
        m = rng.normal(size=(25, 25))
        a = (m + m.T) / 2
        vals, vecs = sym_eig_small(a)
        assert np.all(np.diff(vals) <= 1e-12)
        np.testing.assert_allclose(vecs @ np.diag(vals) @ vecs.T, a, atol=1e-10)

    def test_dimension_cap(self):
        with pytest.raises(ValueError):
            sym_eig_small(np.eye(201))


class TestSeededRng:
    def test_children_are_stable_and_distinct(self):
        root = SeededRng(123)
        a1 = root.child(0).generator.random(4)
        a2 = SeededRng(123).child(0).generator.random(4)
        b = root.child(1).generator.random(4)
        np.testing.assert_array_equal(a1, a2)
        assert not np.array_equal(a1, b)

    def test_generator_matches_numpy_default(self):
        ours = SeededRng(777).generator.random(5)
        theirs = np.random.default_rng(777).random(5)
        np.testing.assert_array_equal(ours, theirs)
