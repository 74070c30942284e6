import numpy as np
import pytest

from reachkit.core.exceptions import DomainError
from reachkit.kernel import KernelSpec, kernel_eval, kernel_matrix


def test_gaussian_at_coincident_points():
    assert kernel_eval(KernelSpec(sigma=0.3), [0.2, -1.0], [0.2, -1.0]) == 1.0


def test_gaussian_unit_distance():
    assert kernel_eval(KernelSpec(sigma=1.0), [0.0, 0.0], [1.0, 0.0]) == pytest.approx(np.exp(-1.0))


def test_polynomial_kernel():
    assert kernel_eval(KernelSpec(kind="polynomial", tau=0.0, degree=2), [1.0, 1.0], [1.0, 1.0]) == pytest.approx(4.0)


def test_dimension_mismatch():
    with pytest.raises(DomainError):
        kernel_eval(KernelSpec(), [0.0, 0.0], [0.0])
    with pytest.raises(DomainError):
        kernel_matrix(KernelSpec(), np.zeros((2, 2)), np.zeros((3, 1)))


def test_invalid_spec():
    with pytest.raises(ValueError, match="sigma"):
        KernelSpec(sigma=0.0)
    with pytest.raises(ValueError, match="Unknown kernel"):
        KernelSpec(kind="laplace")


def test_single_point_matrix():
    np.testing.assert_array_equal(kernel_matrix(KernelSpec(), np.array([[0.5, 0.5]])), [[1.0]])


def test_matrix_is_exactly_symmetric():
    points = np.random.default_rng(3).normal(size=(30, 2))
    K = kernel_matrix(KernelSpec(sigma=0.5), points)
    np.testing.assert_array_equal(K, K.T)
    assert K[4, 7] == pytest.approx(kernel_eval(KernelSpec(sigma=0.5), points[4], points[7]))


def test_gaussian_matrix_has_full_rank():
    points = np.random.default_rng(0).uniform(-1.0, 1.0, size=(50, 2))
    K = kernel_matrix(KernelSpec(sigma=1.0), points)
    assert np.linalg.eigvalsh(K).min() > 1e-14 * np.trace(K)


@pytest.mark.parametrize(
    "spec",
    [KernelSpec(sigma=0.3), KernelSpec(sigma=2.0), KernelSpec(kind="polynomial", tau=1.0, degree=3)],
)
def test_matrix_is_positive_semidefinite(spec):
    points = np.random.default_rng(8).uniform(-2.0, 2.0, size=(40, 2))
    K = kernel_matrix(spec, points)
    assert np.linalg.eigvalsh(K).min() >= -1e-10 * np.trace(K)


def test_spec_round_trip():
    spec = KernelSpec(kind="polynomial", tau=0.5, degree=3)
    assert KernelSpec.from_dict(spec.to_dict()) == spec
