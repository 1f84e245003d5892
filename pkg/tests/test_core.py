import numpy as np
import pytest

from dpm.core import (
    AdditiveFit,
    Dataset,
    FunctionClassMember,
    TraceRecord,
    empirical_inner,
    empirical_norm,
    objective,
    zero_member,
)


def test_empirical_inner_and_norm():
    assert empirical_inner(np.array([1.0, 2.0]), np.array([3.0, 4.0])) == pytest.approx(5.5)
    assert empirical_norm(np.array([3.0, 4.0])) == pytest.approx(3.5355339059327376)
    with pytest.raises(ValueError):
        empirical_inner(np.array([1.0]), np.array([1.0, 2.0]))
    with pytest.raises(ValueError):
        empirical_norm(np.array([]))


def test_objective_arithmetic():
    data = Dataset(np.array([[0.1], [0.9]]), np.array([1.0, 3.0]))
    f = np.array([0.5, 2.0])
    g = np.array([0.0, 0.5])
    # residual (0.5, 0.5): mean square 0.25, plus penalties
    assert objective(data, f, g, 0.1, 0.2) == pytest.approx(0.25 + 0.3)


class TestDataset:
    def test_basic_shape_handling(self):
        d = Dataset(np.array([0.1, 0.4, 0.8]), np.array([1.0, 2.0, 3.0]))
        assert (d.n, d.p) == (3, 1)
        assert d.X.shape == (3, 1)
        np.testing.assert_array_equal(d.unit_X, d.X)

    def test_rescaling(self):
        d = Dataset(np.array([[0.5], [2.5]]), np.array([0.0, 1.0]),
                    omega_bounds=[(0.5, 2.5)])
        np.testing.assert_allclose(d.unit_X[:, 0], [0.0, 1.0])
        np.testing.assert_allclose(d.to_unit(np.array([1.5]))[:, 0], [0.5])

    def test_bounds_enforced(self):
        with pytest.raises(ValueError):
            Dataset(np.array([[1.2]]), np.array([0.0]))
        with pytest.raises(ValueError):
            Dataset(np.array([[np.nan]]), np.array([0.0]))
        with pytest.raises(ValueError):
            Dataset(np.array([[0.5]]), np.array([0.0]), omega_bounds=[(1.0, 0.0)])

    def test_subset_keeps_bounds(self):
        d = Dataset(np.array([[0.5], [1.0], [2.0]]), np.array([1.0, 2.0, 3.0]),
                    omega_bounds=[(0.5, 2.5)])
        s = d.subset(np.array([0, 2]))
        assert s.n == 2
        assert s.omega_bounds == d.omega_bounds
        np.testing.assert_array_equal(s.y, [1.0, 3.0])


class TestFunctionClassMember:
    def test_callable_and_validation(self):
        m = FunctionClassMember("linear", lambda pts: np.zeros(len(pts)), 0.5)
        assert m(np.zeros((4, 2))).shape == (4,)
        with pytest.raises(ValueError):
            FunctionClassMember("spline", lambda p: p, 0.0)
        with pytest.raises(ValueError):
            FunctionClassMember("linear", lambda p: p, -1.0)
        with pytest.raises(ValueError):
            FunctionClassMember("linear", lambda p: p, float("nan"))

    def test_zero_member(self):
        z = zero_member("stump-ensemble")
        assert z.descriptor == "stump-ensemble"
        np.testing.assert_array_equal(z(np.ones((3, 2))), np.zeros(3))
        np.testing.assert_array_equal(z(np.ones(5)), np.zeros(5))


class TestAdditiveFit:
    def _fit(self):
        f = FunctionClassMember("linear", lambda pts: np.asarray(pts)[:, 0], 0.0)
        g = FunctionClassMember("kernel-expansion",
                                lambda pts: 2.0 * np.asarray(pts)[:, 0], 0.1)
        trace = (TraceRecord(1, 1.0, 0.5, 0.5, 0.0, 0.1),
                 TraceRecord(2, 0.5, 0.1, 0.1, 0.0, 0.1))
        return AdditiveFit(f, g, trace, "change-tol")

    def test_predict_sums_components(self):
        fit = self._fit()
        pts = np.array([[0.2], [0.4]])
        np.testing.assert_allclose(fit.predict(pts), [0.6, 1.2])
        assert fit.iterations == 2

    def test_stop_reason_validated(self):
        with pytest.raises(ValueError):
            AdditiveFit(zero_member(), zero_member(), (), "diverged")
